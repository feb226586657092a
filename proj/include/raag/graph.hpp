#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace raag {

// Single-line graph6 caps the order at 62, which also lets one bitset
// word hold a full neighbor row.
constexpr int kMaxVertices = 62;

// Subset of {0..61}, bit i = vertex i.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_of(int v) { return VertexSet{1} << v; }

std::vector<int> set_vertices(VertexSet s);
VertexSet make_set(const std::vector<int>& vs);

// Simple graph: irreflexive symmetric adjacency plus distinct display labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return set_contains(adj_[u], v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    VertexSet neighbors(int v) const;
    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;
    VertexSet all_vertices() const;

    const std::string& label(int v) const;
    void set_label(int v, std::string s);
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> vertex_by_label(std::string_view name) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<std::string> labels_;
};

// Adjacency-only equality; labels ignored.
bool same_adjacency(const Graph& g, const Graph& h);

struct CycleWitness {
    std::vector<int> vertices;  // cyclic order, length >= 3
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet w);
VertexSet link(const Graph& g, int z);
VertexSet star(const Graph& g, int z);
bool is_connected(const Graph& g);
bool is_anti_connected(const Graph& g, VertexSet s);

// Smallest induced cycle of length >= min_len, minimal in
// (length, lexicographic vertex sequence).
std::optional<CycleWitness> find_induced_cycle(const Graph& g, int min_len = 5);

Graph cycle_graph(int n);
Graph complement_cycle(int n);

// Canonical graph6 string of the isomorphism class (labels ignored).
// Exhaustive labeling search with degree-partition and prefix pruning;
// intended for graphs up to ~12 vertices.
std::string canonical_form(const Graph& g);

// Adjacency-preserving bijection g -> h, or nullopt.
std::optional<std::vector<int>> graph_isomorphic(const Graph& g, const Graph& h);

}  // namespace raag
