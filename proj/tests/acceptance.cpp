// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <exception>
#include <random>
#include <string>

#include "corpus.hpp"
#include "raag/certify.hpp"
#include "raag/cocontract.hpp"
#include "raag/graph.hpp"
#include "raag/raag_words.hpp"
#include "raag/rs_engine.hpp"

using namespace raag;

namespace {

bool ladder() {
    for (int n = 5; n <= 9; ++n) {
        const auto cert = detect(complement_cycle(n), n - 5);
        if (!cert) return false;
        if (static_cast<int>(cert->moves.size()) != n - 5) return false;
        for (const Move& m : cert->moves)
            if (m.kind != MoveKind::Cocontract) return false;
        const Graph& final_graph = cert->moves.empty() ? cert->input : cert->moves.back().result;
        if (!graph_isomorphic(final_graph, cycle_graph(5))) return false;
        if (!verify(*cert).ok) return false;
    }
    return true;
}

bool rs_oracle_equivalence() {
    for (const Graph& g : test::connected_corpus(6))
        for (int z = 0; z < g.size(); ++z)
            for (int n : {2, 3})
                if (cross_validate({g, z, n}).empty() && g.size() > 0) return false;
    return true;
}

bool vertex_count_formula() {
    for (const Graph& g : test::connected_corpus(6))
        for (int z = 0; z < g.size(); ++z)
            for (int n : {2, 3}) {
                const auto [kg, labeling] = kernel_graph({g, z, n});
                const int lk = set_size(link(g, z));
                if (kg.size() != 1 + lk + n * (g.size() - 1 - lk)) return false;
            }
    return true;
}

bool tau_section() {
    std::mt19937 rng(101);
    for (int gi = 0; gi < 20; ++gi) {
        const int nv = 3 + gi % 5;
        const Graph g = test::random_graph(rng, nv, 0.4);
        std::uniform_int_distribution<int> zdist(0, nv - 1);
        const int z = zdist(rng);
        const int order = 2 + gi % 3;
        const CyclicQuotientMap q{g, z, order};
        const SchreierData data = schreier_generators(q);
        for (int trial = 0; trial < 1000; ++trial) {
            Word w = test::random_word(rng, nv, trial % 12);
            long long zsum = 0;
            for (const Letter& l : w)
                if (l.gen == z) zsum += l.sign;
            const int residue = static_cast<int>(((zsum % order) + order) % order);
            for (int i = 0; i < residue; ++i) w.push_back({z, -1});
            const Word reduced = free_reduce(w);
            if (expand_schreier(data, rewrite_tau(q, reduced)) != reduced) return false;
        }
    }
    return true;
}

bool word_oracle_agreement() {
    std::mt19937 rng(103);
    const auto graphs = test::graphs_upto_iso(4);
    int conclusive = 0;
    for (int trial = 0; trial < 8000 && conclusive < 2000; ++trial) {
        const Graph& g = graphs[trial % graphs.size()];
        if (g.size() == 0) continue;
        const RaagContext ctx{g};
        const Word w1 = test::random_word(rng, g.size(), 1 + trial % 6);
        const Word w2 = trial % 2 == 0
                            ? free_reduce(test::insert_random_relators(rng, ctx, w1, 2))
                            : test::random_word(rng, g.size(), 1 + (trial / 3) % 6);
        const auto oracle = test::oracle_words_equal(ctx, w1, w2);
        if (!oracle) continue;
        ++conclusive;
        if (words_equal(ctx, w1, w2) != *oracle) return false;
    }
    return conclusive >= 2000;
}

bool embedding_witnesses() {
    for (const Graph& g : test::connected_corpus(7)) {
        for (VertexSet s = 1; s <= g.all_vertices(); ++s) {
            if (s & ~g.all_vertices()) break;
            const int k = set_size(s);
            if (k < 2 || k > 3) continue;
            if (!is_anti_connected(g, s)) continue;
            if (!verify_embedding(g, s, embedding_words(g, s)).ok()) return false;
        }
    }
    return true;
}

bool independence_and_decomposition() {
    std::mt19937 rng(107);
    // Lemma: edges inside S never matter
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = test::random_graph(rng, 4 + trial % 5, 0.5);
        std::vector<int> verts;
        for (int v = 0; v < g.size(); ++v) verts.push_back(v);
        std::shuffle(verts.begin(), verts.end(), rng);
        VertexSet s = 0;
        for (int i = 0; i < 2 + trial % 3; ++i) s |= set_of(verts[i]);
        const Graph a = contraction(g, s).graph;
        const Graph ca = cocontraction(g, s).graph;
        Graph h = g;
        const std::vector<int> members = set_vertices(s);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (rng() & 1) h.toggle_edge(members[i], members[j]);
        if (contraction(h, s).graph != a) return false;
        if (cocontraction(h, s).graph != ca) return false;
    }
    // two co-contractions suffice
    int done = 0;
    for (int trial = 0; trial < 5000 && done < 500; ++trial) {
        const Graph g = test::random_graph(rng, 5 + trial % 4, 0.45);
        std::vector<int> verts;
        for (int v = 0; v < g.size(); ++v) verts.push_back(v);
        std::shuffle(verts.begin(), verts.end(), rng);
        VertexSet s = 0;
        for (int i = 0; i < 3 + trial % 2; ++i) s |= set_of(verts[i]);
        if (!is_anti_connected(g, s)) continue;
        ++done;
        const std::vector<int> order = anti_connected_ordering(g, s);
        const int sn = order.back();
        const ContractionResult lambda = cocontraction(g, s & ~set_of(sn));
        const int sn_in_lambda = lambda.graph.vertex_by_label(g.label(sn)).value();
        const ContractionResult two = cocontraction(
            lambda.graph, set_of(sn_in_lambda) | set_of(lambda.merged_vertex));
        // merged labels differ by construction; adjacency must match exactly
        if (!same_adjacency(two.graph, cocontraction(g, s).graph)) return false;
    }
    return done == 500;
}

bool genus_values() { return genus_bound(5) == 5 && genus_bound(6) == 17; }

bool negative_controls() {
    if (detect(complement(Graph(5)), 3).has_value()) return false;  // K5
    if (detect(cycle_graph(4), 3).has_value()) return false;

    const Certificate good = *detect(complement_cycle(7), 2);
    if (!verify(good).ok) return false;

    Certificate bad_move = good;
    bad_move.moves[0].z = "nope";
    if (verify(bad_move).reason != VerifyFailure::BadMove) return false;

    Certificate mismatch = good;
    mismatch.moves[1].result.toggle_edge(0, 1);
    if (verify(mismatch).reason != VerifyFailure::MoveMismatch) return false;

    Certificate short_cycle = good;
    short_cycle.cycle.pop_back();
    if (verify(short_cycle).reason != VerifyFailure::CycleTooShort) return false;

    Certificate wrong_genus = good;
    wrong_genus.genus += 1;
    if (verify(wrong_genus).reason != VerifyFailure::GenusMismatch) return false;

    Certificate commuting = good;
    commuting.embedding[commuting.cycle[0]].clear();
    if (verify(commuting).reason != VerifyFailure::NonEdgeCommuting) return false;

    return true;
}

int report(int number, const char* description, bool (*check)()) {
    bool ok = false;
    std::string note;
    try {
        ok = check();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, description,
                note.c_str());
    std::fflush(stdout);
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += report(1, "co-contraction ladder C5..C9 certifies and verifies", ladder);
    failures += report(2, "RS presentation matches kernel graph on the 6-vertex corpus",
                       rs_oracle_equivalence);
    failures += report(3, "kernel-graph vertex-count formula holds exactly",
                       vertex_count_formula);
    failures += report(4, "tau section property on 20x1000 random kernel words", tau_section);
    failures += report(5, "word solver agrees with brute-force oracle on 2000 pairs",
                       word_oracle_agreement);
    failures += report(6, "embedding witnesses clean on the 7-vertex corpus",
                       embedding_witnesses);
    failures += report(7, "S-independence and pair decomposition, 500 trials each",
                       independence_and_decomposition);
    failures += report(8, "genus bounds 5 -> 5 and 6 -> 17", genus_values);
    failures += report(9, "negative controls: unresolved inputs and damaged certificates",
                       negative_controls);
    return failures == 0 ? 0 : 1;
}
