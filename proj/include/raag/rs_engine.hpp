#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

// The map A(base) -> Z/order sending the distinguished vertex z to a
// generator and every other vertex to the identity.
struct CyclicQuotientMap {
    Graph base;
    int z;
    int order;  // >= 1
};

struct SchreierData {
    std::vector<Word> transversal;            // coset representatives 1, z, ..., z^{order-1}
    std::vector<GeneratorSymbol> generators;  // Schreier generators, id = index
    std::vector<Word> base_words;             // per generator, word over base vertices
    int power_gen = -1;                       // id of the z^order generator
    // table[coset][vertex] = generator id, or -1 when the generator is trivial
    std::vector<std::vector<int>> table;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SchreierData schreier_generators(const CyclicQuotientMap& q);

// Rewrite a kernel-preimage word over the base generators into a word
// over the Schreier generators. Rejects words whose z-exponent sum is
// not divisible by the quotient order.
Word rewrite_tau(const CyclicQuotientMap& q, const Word& w);

// Expand a word over Schreier generators back to the base generators.
Word expand_schreier(const SchreierData& data, const Word& w);

Presentation rs_presentation(const CyclicQuotientMap& q);

// Eliminate generators equated by length-2 relators; the surviving
// relators must all be commutators. Generator ids are preserved.
Presentation tietze_simplify(const Presentation& p);

// Kernel-graph vertex -> its generator word over the base vertices.
struct KernelLabeling {
    std::vector<Word> words;
};

// The defining graph of ker(q): n copies of base minus st(z) glued to
// st(z) along lk(z).
std::pair<Graph, KernelLabeling> kernel_graph(const CyclicQuotientMap& q);

// Runs the presentation route and the direct gluing route independently
// and matches them; returns, per generator of the simplified
// presentation, the kernel-graph vertex carrying the same word.
// Throws ValidationError on any mismatch.
std::vector<int> cross_validate(const CyclicQuotientMap& q);

}  // namespace raag
