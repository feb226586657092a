#include "raag/cocontract.hpp"

#include <stdexcept>

#include "raag/raag_words.hpp"

namespace raag {

namespace {

std::string merged_label(const Graph& g, VertexSet s) {
    std::string out;
    for (int v : set_vertices(s)) {
        if (!out.empty()) out += '+';
        out += g.label(v);
    }
    return out;
}

void check_set(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("contraction set must be nonempty");
    if (s & ~g.all_vertices()) throw std::out_of_range("contraction set exceeds graph");
}

}  // namespace

ContractionResult contraction(const Graph& g, VertexSet s) {
    check_set(g, s);
    const std::vector<int> rest = set_vertices(g.all_vertices() & ~s);
    std::vector<std::string> labels;
    for (int v : rest) labels.push_back(g.label(v));
    labels.push_back(merged_label(g, s));

    Graph out(static_cast<int>(rest.size()) + 1, std::move(labels));
    const int merged = out.size() - 1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (g.adjacent(rest[i], rest[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (g.neighbors(rest[i]) & s) out.add_edge(static_cast<int>(i), merged);
    }
    return {std::move(out), merged, s};
}

ContractionResult cocontraction(const Graph& g, VertexSet s) {
    check_set(g, s);
    ContractionResult inner = contraction(complement(g), s);
    return {complement(inner.graph), inner.merged_vertex, s};
}

namespace {

bool is_cut_vertex(const Graph& g, int v) {
    return !is_connected(induced_subgraph(g, g.all_vertices() & ~set_of(v)));
}

}  // namespace

std::vector<int> anti_connected_ordering(const Graph& g, VertexSet s) {
    if (!is_anti_connected(g, s)) throw std::invalid_argument("set is not anti-connected");
    std::vector<int> order(set_vertices(s).size());
    VertexSet remaining = s;
    for (int pos = static_cast<int>(order.size()) - 1; pos > 0; --pos) {
        const Graph comp = induced_subgraph(complement(g), remaining);
        const std::vector<int> verts = set_vertices(remaining);
        int chosen = -1;
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i)
            if (!is_cut_vertex(comp, i)) {
                chosen = verts[i];
                break;
            }
        order[pos] = chosen;
        remaining &= ~set_of(chosen);
    }
    order[0] = set_vertices(remaining)[0];
    return order;
}

EmbeddingWordMap embedding_words(const Graph& g, VertexSet s) {
    if (set_size(s) < 2) throw std::invalid_argument("embedding needs at least two vertices");
    const std::vector<int> order = anti_connected_ordering(g, s);

    // Pair case first, then fold in one vertex at a time per the
    // two-vertex reduction. merged_word stays over the generators of g.
    if (g.adjacent(order[0], order[1]))
        throw std::logic_error("first two vertices of an anti-connected ordering are adjacent");
    Word merged_word = free_reduce(conjugate({{order[0], 1}}, {{order[1], 1}}));
    VertexSet used = set_of(order[0]) | set_of(order[1]);
    for (std::size_t i = 2; i < order.size(); ++i) {
        const ContractionResult lambda = cocontraction(g, used);
        const int sn = lambda.graph.vertex_by_label(g.label(order[i])).value();
        if (lambda.graph.adjacent(sn, lambda.merged_vertex))
            throw std::logic_error("merged vertex adjacent to the next vertex; "
                                   "set cannot be anti-connected");
        // In the pair {s_n, v_S'} the lower-index vertex s_n conjugates.
        merged_word = free_reduce(conjugate({{order[i], 1}}, merged_word));
        used |= set_of(order[i]);
    }

    const ContractionResult result = cocontraction(g, s);
    EmbeddingWordMap map;
    map.words.resize(result.graph.size());
    const std::vector<int> rest = set_vertices(g.all_vertices() & ~s);
    for (std::size_t i = 0; i < rest.size(); ++i) map.words[i] = {{rest[i], 1}};
    map.words[result.merged_vertex] = merged_word;
    return map;
}

EmbeddingReport verify_embedding(const Graph& g, VertexSet s, const EmbeddingWordMap& m) {
    const ContractionResult result = cocontraction(g, s);
    if (m.words.size() != static_cast<std::size_t>(result.graph.size()))
        throw std::invalid_argument("word map does not cover the co-contraction");

    const RaagContext ctx{g};
    EmbeddingReport report;
    for (int u = 0; u < result.graph.size(); ++u)
        for (int v = u + 1; v < result.graph.size(); ++v) {
            const bool expect = result.graph.adjacent(u, v);
            if (commutes(ctx, m.words[u], m.words[v]) != expect)
                report.failures.push_back({u, v, expect});
        }
    return report;
}

}  // namespace raag
