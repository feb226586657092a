#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "raag/rs_engine.hpp"

using namespace raag;

TEST_CASE("schreier generators") {
    const Graph c5bar = complement_cycle(5);
    SUBCASE("order 2 tables") {
        const CyclicQuotientMap q{c5bar, 4, 2};  // z = x5
        const SchreierData data = schreier_generators(q);
        REQUIRE(data.transversal.size() == 2);
        CHECK(data.transversal[0].empty());
        CHECK(data.transversal[1] == power(4, 1));
        // s(z^k, v) = z^k v z^-k for v != z
        for (int k = 0; k < 2; ++k)
            for (int v = 0; v < 5; ++v) {
                if (v == 4) continue;
                const int id = data.table[k][v];
                REQUIRE(id >= 0);
                CHECK(data.base_words[id] == free_reduce(conjugate(power(4, k), {{v, 1}})));
            }
        // s(1, z) trivial, s(z, z) = z^2
        CHECK(data.table[0][4] == -1);
        CHECK(data.table[1][4] == data.power_gen);
        CHECK(data.base_words[data.power_gen] == power(4, 2));
    }
    SUBCASE("order 1 keeps every vertex") {
        const CyclicQuotientMap q{c5bar, 4, 1};
        const SchreierData data = schreier_generators(q);
        REQUIRE(data.transversal.size() == 1);
        for (int v = 0; v < 5; ++v) {
            const int id = data.table[0][v];
            REQUIRE(id >= 0);
            CHECK(expand_schreier(data, {{id, 1}}) == Word{{v, 1}});
        }
    }
    SUBCASE("transversal is closed under initial subwords") {
        for (int n = 1; n <= 4; ++n) {
            const SchreierData data = schreier_generators({c5bar, 2, n});
            for (const Word& t : data.transversal)
                for (std::size_t len = 0; len <= t.size(); ++len) {
                    const Word prefix(t.begin(), t.begin() + len);
                    CHECK(std::find(data.transversal.begin(), data.transversal.end(), prefix) !=
                          data.transversal.end());
                }
        }
    }
}

TEST_CASE("tau rewriting") {
    const Graph c6bar = complement_cycle(6);
    const CyclicQuotientMap q{c6bar, 5, 2};  // z = x6
    const SchreierData data = schreier_generators(q);

    SUBCASE("z v z^-1 becomes a single generator") {
        // x1 is outside st(x6)
        const Word w = free_reduce(conjugate(power(5, 1), {{0, 1}}));
        const Word out = rewrite_tau(q, w);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Letter{data.table[1][0], 1});
    }
    SUBCASE("conjugated commutators map to commutators") {
        for (int k = 0; k < 2; ++k) {
            const Word w = conjugate(power(5, k), commutator({{0, 1}}, {{2, 1}}));
            const Word out = rewrite_tau(q, free_reduce(w));
            CHECK(out == commutator({{data.table[k][0], 1}}, {{data.table[k][2], 1}}));
        }
    }
    SUBCASE("empty word") { CHECK(rewrite_tau(q, {}).empty()); }
    SUBCASE("non-kernel words are rejected with the residue") {
        try {
            rewrite_tau(q, {{5, 1}});
            FAIL("expected rejection");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("1 mod 2") != std::string::npos);
        }
    }
    SUBCASE("section property on random kernel words") {
        std::mt19937 rng(29);
        for (int trial = 0; trial < 1000; ++trial) {
            Word w = test::random_word(rng, 6, trial % 10);
            long long zsum = 0;
            for (const Letter& l : w)
                if (l.gen == 5) zsum += l.sign;
            const int residue = static_cast<int>(((zsum % 2) + 2) % 2);
            for (int i = 0; i < residue; ++i) w.push_back({5, -1});
            const Word reduced = free_reduce(w);
            CHECK(expand_schreier(data, rewrite_tau(q, reduced)) == reduced);
        }
    }
}

TEST_CASE("rs presentation and simplification") {
    SUBCASE("K2 doubles to an edge") {
        Graph k2(2, {"z", "v"});
        k2.add_edge(0, 1);
        const Presentation p = tietze_simplify(rs_presentation({k2, 0, 2}));
        REQUIRE(p.generators.size() == 2);   // z^2 and v
        REQUIRE(p.relators.size() == 1);     // [z^2, v]
        CHECK(p.generators[0].display == "z^2");
        CHECK(p.generators[1].display == "v");
    }
    SUBCASE("single vertex, order 3, is free on z^3") {
        const Presentation p = tietze_simplify(rs_presentation({Graph(1), 0, 3}));
        REQUIRE(p.generators.size() == 1);
        CHECK(p.generators[0].display == "v1^3");
        CHECK(p.relators.empty());
    }
    SUBCASE("C5-bar at x5, order 2: seven survivors") {
        const Presentation p = tietze_simplify(rs_presentation({complement_cycle(5), 4, 2}));
        CHECK(p.generators.size() == 7);  // 1 + |lk| + n(|V|-1-|lk|) = 1 + 2 + 2*2
    }
    SUBCASE("no length-2 relators is a fixpoint") {
        Presentation p;
        p.generators = {{0, "a"}, {1, "b"}};
        p.relators = {commutator({{0, 1}}, {{1, 1}})};
        const Presentation out = tietze_simplify(p);
        CHECK(out.generators == p.generators);
        CHECK(out.relators == p.relators);
    }
    SUBCASE("length-2 relator eliminates the higher generator") {
        Presentation p;
        p.generators = {{0, "a"}, {1, "b"}, {2, "c"}};
        p.relators = {Word{{1, 1}, {0, -1}}, commutator({{1, 1}}, {{2, 1}})};
        const Presentation out = tietze_simplify(p);
        REQUIRE(out.generators.size() == 2);
        CHECK(out.find(1) == nullptr);
        REQUIRE(out.relators.size() == 1);
        CHECK(out.relators[0] == commutator({{0, 1}}, {{2, 1}}));
    }
    SUBCASE("unrecognized relators are errors") {
        Presentation p;
        p.generators = {{0, "a"}};
        p.relators = {Word{{0, 1}, {0, 1}}};
        CHECK_THROWS_AS(tietze_simplify(p), ValidationError);
    }
}

TEST_CASE("kernel graph") {
    SUBCASE("C6-bar doubled at x6 has eight vertices") {
        const auto [g, labeling] = kernel_graph({complement_cycle(6), 5, 2});
        CHECK(g.size() == 8);  // 1 + 3 + 2*2
        CHECK(g.label(0) == "x6^2");
        CHECK(labeling.words[0] == power(5, 2));
    }
    SUBCASE("order 1 reproduces the base graph") {
        for (const Graph& base : test::connected_corpus(5))
            for (int z = 0; z < base.size(); ++z) {
                const auto [g, labeling] = kernel_graph({base, z, 1});
                CHECK(graph_isomorphic(g, base).has_value());
            }
    }
    SUBCASE("C5-bar doubled at x5 contains C4-bar") {
        const auto [g, labeling] = kernel_graph({complement_cycle(5), 4, 2});
        REQUIRE(g.size() == 7);
        // {x1 in copy 1, x2, x3, x4 in copy 0}
        VertexSet s = 0;
        for (const char* label : {"x1^(1)", "x2", "x3", "x4"})
            s |= set_of(g.vertex_by_label(label).value());
        CHECK(graph_isomorphic(induced_subgraph(g, s), complement_cycle(4)).has_value());
    }
    SUBCASE("vertex-count formula") {
        for (const Graph& base : test::connected_corpus(5))
            for (int z = 0; z < base.size(); ++z)
                for (int n = 1; n <= 3; ++n) {
                    const auto [g, labeling] = kernel_graph({base, z, n});
                    const int lk = set_size(link(base, z));
                    CHECK(g.size() == 1 + lk + n * (base.size() - 1 - lk));
                    CHECK(static_cast<int>(labeling.words.size()) == g.size());
                }
    }
    SUBCASE("copy 0 carries an induced copy of the base") {
        for (const Graph& base : test::connected_corpus(5))
            for (int z = 0; z < base.size(); ++z) {
                const auto [g, labeling] = kernel_graph({base, z, 2});
                VertexSet image = set_of(0);
                for (int u : set_vertices(link(base, z)))
                    image |= set_of(g.vertex_by_label(base.label(u)).value());
                for (int u : set_vertices(base.all_vertices() & ~star(base, z)))
                    image |= set_of(g.vertex_by_label(base.label(u)).value());
                CHECK(graph_isomorphic(induced_subgraph(g, image), base).has_value());
            }
    }
}

TEST_CASE("cross validation") {
    SUBCASE("C5-bar at x5") {
        const auto match = cross_validate({complement_cycle(5), 4, 2});
        CHECK(match.size() == 7);
    }
    SUBCASE("single vertex") {
        const auto match = cross_validate({Graph(1), 0, 4});
        CHECK(match.size() == 1);
    }
    SUBCASE("small corpus, orders 2 and 3") {
        for (const Graph& base : test::connected_corpus(4))
            for (int z = 0; z < base.size(); ++z)
                for (int n : {2, 3}) CHECK_NOTHROW(cross_validate({base, z, n}));
    }
}
