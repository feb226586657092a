#include "raag/rs_engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace raag {

namespace {

void check_quotient(const CyclicQuotientMap& q) {
    if (q.z < 0 || q.z >= q.base.size())
        throw std::out_of_range("distinguished vertex out of range");
    if (q.order < 1) throw std::invalid_argument("quotient order must be at least 1");
}

std::string copy_display(const Graph& base, int v, int k) {
    return k == 0 ? base.label(v) : base.label(v) + "^(" + std::to_string(k) + ")";
}

}  // namespace

SchreierData schreier_generators(const CyclicQuotientMap& q) {
    check_quotient(q);
    const int n = q.order;
    SchreierData data;
    for (int k = 0; k < n; ++k) data.transversal.push_back(power(q.z, k));

    data.power_gen = 0;
    data.generators.push_back({0, q.base.label(q.z) + "^" + std::to_string(n)});
    data.base_words.push_back(power(q.z, n));

    data.table.assign(n, std::vector<int>(q.base.size(), -1));
    data.table[n - 1][q.z] = data.power_gen;
    for (int k = 0; k < n; ++k) {
        for (int v = 0; v < q.base.size(); ++v) {
            if (v == q.z) continue;
            const int id = static_cast<int>(data.generators.size());
            data.generators.push_back({id, copy_display(q.base, v, k)});
            data.base_words.push_back(free_reduce(conjugate(power(q.z, k), {{v, 1}})));
            data.table[k][v] = id;
        }
    }
    return data;
}

Word rewrite_tau(const CyclicQuotientMap& q, const Word& w) {
    check_quotient(q);
    const SchreierData data = schreier_generators(q);
    const Word reduced = free_reduce(w);

    long long zsum = 0;
    for (const Letter& l : reduced) {
        if (l.gen < 0 || l.gen >= q.base.size())
            throw std::invalid_argument("word uses a generator outside the base graph");
        if (l.gen == q.z) zsum += l.sign;
    }
    const int residue = static_cast<int>(((zsum % q.order) + q.order) % q.order);
    if (residue != 0)
        throw std::invalid_argument("word is not in the kernel preimage: z-exponent sum is " +
                                    std::to_string(residue) + " mod " + std::to_string(q.order));

    Word out;
    int coset = 0;
    for (const Letter& l : reduced) {
        if (l.sign > 0) {
            const int id = data.table[coset][l.gen];
            if (id >= 0) out.push_back({id, 1});
            if (l.gen == q.z) coset = (coset + 1) % q.order;
        } else {
            // s(t, x^-1) = s([t x^-1], x)^-1
            if (l.gen == q.z) coset = (coset + q.order - 1) % q.order;
            const int id = data.table[coset][l.gen];
            if (id >= 0) out.push_back({id, -1});
        }
    }
    return out;
}

Word expand_schreier(const SchreierData& data, const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= static_cast<int>(data.base_words.size()))
            throw std::out_of_range("unknown Schreier generator");
        const Word img = l.sign > 0 ? data.base_words[l.gen] : inverse(data.base_words[l.gen]);
        out.insert(out.end(), img.begin(), img.end());
    }
    return free_reduce(out);
}

Presentation rs_presentation(const CyclicQuotientMap& q) {
    check_quotient(q);
    const SchreierData data = schreier_generators(q);
    const Presentation base = raag_presentation(q.base);

    Presentation out;
    out.generators = data.generators;
    for (const Word& t : data.transversal) {
        for (const Word& r : base.relators) {
            const Word rel = free_reduce(rewrite_tau(q, conjugate(inverse(t), r)));
            if (!rel.empty()) out.relators.push_back(rel);
        }
    }
    return out;
}

namespace {

// Conjugate relators have the same normal closure, so every relator may
// be replaced by its cyclically reduced core.
Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front().gen == w.back().gen &&
           w.front().sign == -w.back().sign) {
        w.pop_back();
        w.erase(w.begin());
        w = free_reduce(std::move(w));
    }
    return w;
}

// Normalized commutator relator: (a, s1)(b, s2)(a, -s1)(b, -s2), a != b.
std::optional<std::pair<int, int>> as_commutator(const Word& r) {
    if (r.size() != 4) return std::nullopt;
    if (r[0].gen != r[2].gen || r[1].gen != r[3].gen) return std::nullopt;
    if (r[0].sign != -r[2].sign || r[1].sign != -r[3].sign) return std::nullopt;
    if (r[0].gen == r[1].gen) return std::nullopt;
    return std::make_pair(std::min(r[0].gen, r[1].gen), std::max(r[0].gen, r[1].gen));
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
    std::vector<GeneratorSymbol> gens = p.generators;
    std::vector<Word> relators;
    for (const Word& r : p.relators) {
        Word red = cyclic_reduce(r);
        if (!red.empty()) relators.push_back(std::move(red));
    }

    // Eliminate generators equated by length-2 relators, always dropping
    // the higher id of the pair.
    for (;;) {
        const Word* found = nullptr;
        for (const Word& r : relators)
            if (r.size() == 2) {
                found = &r;
                break;
            }
        if (!found) break;
        const Letter a = (*found)[0];
        const Letter b = (*found)[1];
        if (a.gen == b.gen)
            throw ValidationError("length-2 relator is a proper power, not a RAAG shape");
        // a^s1 b^s2 = 1, so  max-gen = (min-gen)^(-s_min * s_max)
        const int victim = std::max(a.gen, b.gen);
        const int keeper = std::min(a.gen, b.gen);
        const int flip = -a.sign * b.sign;
        for (Word& r : relators)
            for (Letter& l : r)
                if (l.gen == victim) {
                    l.gen = keeper;
                    l.sign *= flip;
                }
        std::erase_if(gens, [victim](const GeneratorSymbol& g) { return g.id == victim; });
        std::vector<Word> next;
        for (Word& r : relators) {
            Word red = cyclic_reduce(std::move(r));
            if (!red.empty()) next.push_back(std::move(red));
        }
        relators = std::move(next);
    }

    std::set<std::pair<int, int>> edges;
    for (const Word& r : relators) {
        const auto pair = as_commutator(r);
        if (!pair)
            throw ValidationError("relator is neither trivial, a generator identification, "
                                  "nor a commutator");
        edges.insert(*pair);
    }

    Presentation out;
    out.generators = std::move(gens);
    for (const auto& [a, b] : edges) out.relators.push_back(commutator({{a, 1}}, {{b, 1}}));
    return out;
}

std::pair<Graph, KernelLabeling> kernel_graph(const CyclicQuotientMap& q) {
    check_quotient(q);
    const Graph& base = q.base;
    const int n = q.order;
    const std::vector<int> lk = set_vertices(link(base, q.z));
    const std::vector<int> outside = set_vertices(base.all_vertices() & ~star(base, q.z));

    const int total = 1 + static_cast<int>(lk.size()) + n * static_cast<int>(outside.size());
    std::vector<std::string> labels;
    KernelLabeling labeling;
    labels.push_back(base.label(q.z) + "^" + std::to_string(n));
    labeling.words.push_back(power(q.z, n));
    for (int u : lk) {
        labels.push_back(base.label(u));
        labeling.words.push_back({{u, 1}});
    }
    for (int k = 0; k < n; ++k)
        for (int u : outside) {
            labels.push_back(copy_display(base, u, k));
            labeling.words.push_back(free_reduce(conjugate(power(q.z, k), {{u, 1}})));
        }
    // Base labels may themselves carry copy suffixes (chained doublings);
    // prime any clashes.
    for (std::size_t i = 0; i < labels.size(); ++i) {
        bool clash = true;
        while (clash) {
            clash = false;
            for (std::size_t j = 0; j < i; ++j)
                if (labels[j] == labels[i]) {
                    labels[i] += '\'';
                    clash = true;
                    break;
                }
        }
    }

    Graph g(total, std::move(labels));
    auto link_index = [&](std::size_t i) { return 1 + static_cast<int>(i); };
    auto copy_index = [&](int k, std::size_t i) {
        return 1 + static_cast<int>(lk.size()) + k * static_cast<int>(outside.size()) +
               static_cast<int>(i);
    };

    for (std::size_t i = 0; i < lk.size(); ++i) {
        g.add_edge(0, link_index(i));  // z^n keeps its edges into lk(z)
        for (std::size_t j = i + 1; j < lk.size(); ++j)
            if (base.adjacent(lk[i], lk[j])) g.add_edge(link_index(i), link_index(j));
    }
    for (int k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < outside.size(); ++i) {
            for (std::size_t j = i + 1; j < outside.size(); ++j)
                if (base.adjacent(outside[i], outside[j]))
                    g.add_edge(copy_index(k, i), copy_index(k, j));
            for (std::size_t j = 0; j < lk.size(); ++j)
                if (base.adjacent(outside[i], lk[j]))
                    g.add_edge(copy_index(k, i), link_index(j));
        }
    }
    return {std::move(g), std::move(labeling)};
}

std::vector<int> cross_validate(const CyclicQuotientMap& q) {
    const SchreierData data = schreier_generators(q);
    const Presentation simplified = tietze_simplify(rs_presentation(q));
    const auto [kg, labeling] = kernel_graph(q);

    if (static_cast<int>(simplified.generators.size()) != kg.size())
        throw ValidationError("generator count differs from kernel-graph vertex count");

    // Match generators to kernel vertices by their words over the base.
    std::map<Word, int> by_word;
    for (int v = 0; v < kg.size(); ++v) {
        if (!by_word.emplace(free_reduce(labeling.words[v]), v).second)
            throw ValidationError("kernel labeling words are not distinct");
    }
    std::vector<int> match;
    std::vector<bool> hit(kg.size(), false);
    std::map<int, int> gen_to_vertex;
    for (const GeneratorSymbol& gen : simplified.generators) {
        const Word w = free_reduce(data.base_words.at(gen.id));
        const auto it = by_word.find(w);
        if (it == by_word.end() || hit[it->second])
            throw ValidationError("no kernel vertex carries the generator word of " + gen.display);
        hit[it->second] = true;
        match.push_back(it->second);
        gen_to_vertex[gen.id] = it->second;
    }

    // Commutator relators must reproduce the kernel-graph edge set exactly.
    std::set<std::pair<int, int>> pres_edges;
    for (const Word& r : simplified.relators) {
        const int u = gen_to_vertex.at(r[0].gen);
        const int v = gen_to_vertex.at(r[1].gen);
        pres_edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::set<std::pair<int, int>> graph_edges;
    for (int u = 0; u < kg.size(); ++u)
        for (int v = u + 1; v < kg.size(); ++v)
            if (kg.adjacent(u, v)) graph_edges.insert({u, v});
    if (pres_edges != graph_edges)
        throw ValidationError("presentation relators disagree with the kernel-graph edges");

    return match;
}

}  // namespace raag
