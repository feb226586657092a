#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raag/cocontract.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

#include "json.hpp"

namespace raag {

// 1 + (k-4) 2^{k-3}: genus of the surface guaranteed by an induced
// k-cycle, k >= 5.
long long genus_bound(int k);

enum class MoveKind { Cocontract, KernelDouble };

struct Move {
    MoveKind kind;
    // Labels in the pre-move graph: cocontract uses {z, partner},
    // kernel doubling uses z and the quotient order.
    std::string z;
    std::string partner;
    int order = 0;
    Graph result;
};

struct Certificate {
    Graph input;
    std::vector<Move> moves;
    std::vector<std::string> cycle;           // labels in the final graph, cyclic order
    std::map<std::string, Word> embedding;    // final-graph label -> word over input vertices
    long long genus = 0;
};

// Breadth-first search over move chains; returns the first state whose
// graph has an induced cycle of length >= 5, with composed embedding
// words back to the input. States are deduplicated by canonical form.
std::optional<Certificate> detect(const Graph& g, int max_depth, bool allow_doubling = false,
                                  int max_vertices = kMaxVertices);

enum class VerifyFailure {
    None,
    Malformed,
    BadMove,
    MoveMismatch,
    CycleTooShort,
    CycleNotInduced,
    EmbeddingMissing,
    EdgeNotCommuting,
    NonEdgeCommuting,
    GenusMismatch,
};

struct VerifyResult {
    bool ok = false;
    VerifyFailure reason = VerifyFailure::None;
    std::string detail;
};

const char* to_string(VerifyFailure f);

// Recomputes every move, the cycle witness, the embedding-word
// commutation pattern on the cycle, and the genus value; independent of
// how the certificate was found.
VerifyResult verify(const Certificate& c);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

struct ScanEntry {
    int line = 0;
    std::string graph6;
    enum class Verdict { Certified, Unresolved, Error } verdict = Verdict::Unresolved;
    std::optional<Certificate> certificate;
    std::string error;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    int certified = 0;
    int unresolved = 0;
    int errors = 0;
};

// One graph6 line per input line; parse errors are reported per line
// without aborting the scan.
ScanReport scan_corpus(std::istream& in, int max_depth, bool allow_doubling = false,
                       int max_vertices = kMaxVertices);

}  // namespace raag
