#include "raag/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "raag/graph_io.hpp"

namespace raag {

std::vector<int> set_vertices(VertexSet s) {
    std::vector<int> out;
    for (VertexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

VertexSet make_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex out of range");
        s |= set_of(v);
    }
    return s;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex count out of range");
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i + 1));
}

Graph::Graph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex count out of range");
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + labels_[u]);
    adj_[u] |= set_of(v);
    adj_[v] |= set_of(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~set_of(v);
    adj_[v] &= ~set_of(u);
}

void Graph::toggle_edge(int u, int v) {
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

VertexSet Graph::all_vertices() const {
    return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_));
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    for (int i = 0; i < n_; ++i)
        if (i != v && labels_[i] == s)
            throw std::invalid_argument("duplicate vertex label: " + s);
    labels_[v] = std::move(s);
}

std::optional<int> Graph::vertex_by_label(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == name) return i;
    return std::nullopt;
}

bool same_adjacency(const Graph& g, const Graph& h) {
    if (g.size() != h.size()) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.neighbors(v) != h.neighbors(v)) return false;
    return true;
}

Graph complement(const Graph& g) {
    Graph out(g.size(), g.labels());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
    if (w & ~g.all_vertices()) throw std::out_of_range("vertex set exceeds graph");
    std::vector<int> verts = set_vertices(w);
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(g.label(v));
    Graph out(static_cast<int>(verts.size()), std::move(labels));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

VertexSet link(const Graph& g, int z) { return g.neighbors(z); }

VertexSet star(const Graph& g, int z) { return g.neighbors(z) | set_of(z); }

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    VertexSet seen = set_of(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet t = frontier; t; t &= t - 1) next |= g.neighbors(std::countr_zero(t));
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == g.all_vertices();
}

bool is_anti_connected(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("anti-connectivity of the empty set is undefined");
    return is_connected(induced_subgraph(complement(g), s));
}

namespace {

// DFS over induced paths; extending in ascending vertex order makes the
// first complete cycle the lexicographically least one of its length.
bool cycle_dfs(const Graph& g, int target_len, std::vector<int>& path, VertexSet used) {
    const int v0 = path.front();
    const int last = path.back();
    const bool closing = static_cast<int>(path.size()) == target_len - 1;
    for (int v = v0 + 1; v < g.size(); ++v) {
        if (set_contains(used, v)) continue;
        if (!g.adjacent(last, v)) continue;
        // path[1] shares the first cycle edge with v0; later vertices
        // may touch v0 only when they close the cycle.
        if (path.size() > 1 && g.adjacent(v0, v) != closing) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(path[i], v)) {
                chord = true;
                break;
            }
        if (chord) continue;
        path.push_back(v);
        if (closing) return true;
        if (cycle_dfs(g, target_len, path, used | set_of(v))) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<CycleWitness> find_induced_cycle(const Graph& g, int min_len) {
    if (min_len < 3) throw std::invalid_argument("cycle length must be at least 3");
    for (int len = min_len; len <= g.size(); ++len) {
        for (int v0 = 0; v0 + len <= g.size(); ++v0) {
            std::vector<int> path{v0};
            if (cycle_dfs(g, len, path, set_of(v0))) return CycleWitness{path};
        }
    }
    return std::nullopt;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    Graph g(n, std::move(labels));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complement_cycle(int n) { return complement(cycle_graph(n)); }

namespace {

struct CanonSearch {
    const Graph& g;
    std::vector<int> target_degree;     // required degree at each position
    std::vector<VertexSet> best_rows;   // bit (p-1-q) of row p = adjacency(pos p, pos q)
    std::vector<int> best_perm;         // position -> vertex
    std::vector<VertexSet> rows;
    std::vector<int> perm;
    VertexSet used = 0;

    explicit CanonSearch(const Graph& graph) : g(graph) {
        target_degree.reserve(g.size());
        for (int v = 0; v < g.size(); ++v) target_degree.push_back(g.degree(v));
        std::sort(target_degree.begin(), target_degree.end());
        rows.resize(g.size());
        perm.resize(g.size());
    }

    void run() { place(0, false); }

    // strictly_better: current prefix already beats best, no further pruning.
    void place(int p, bool strictly_better) {
        if (p == g.size()) {
            // The strictly_better flag can be stale once a descendant has
            // replaced the best, so compare the full matrix here.
            if (best_rows.empty() || rows < best_rows) {
                best_rows = rows;
                best_perm = perm;
            }
            return;
        }
        for (int v = 0; v < g.size(); ++v) {
            if (set_contains(used, v)) continue;
            if (g.degree(v) != target_degree[p]) continue;
            VertexSet row = 0;
            for (int q = 0; q < p; ++q)
                if (g.adjacent(perm[q], v)) row |= VertexSet{1} << (p - 1 - q);
            bool better = strictly_better;
            if (!better && !best_rows.empty()) {
                if (row > best_rows[p]) continue;
                if (row < best_rows[p]) better = true;
            }
            rows[p] = row;
            perm[p] = v;
            used |= set_of(v);
            place(p + 1, better);
            used &= ~set_of(v);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run();
    Graph canon(g.size());
    for (int p = 0; p < g.size(); ++p)
        for (int q = 0; q < p; ++q)
            if (search.best_rows[p] >> (p - 1 - q) & 1) canon.add_edge(p, q);
    return emit_graph6(canon);
}

std::optional<std::vector<int>> graph_isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size()) return std::nullopt;
    CanonSearch sg(g), sh(h);
    sg.run();
    sh.run();
    if (sg.best_rows != sh.best_rows) return std::nullopt;
    std::vector<int> map(g.size());
    for (int p = 0; p < g.size(); ++p) map[sg.best_perm[p]] = sh.best_perm[p];
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v]))
                throw std::logic_error("canonical labeling produced a non-isomorphism");
    return map;
}

}  // namespace raag
