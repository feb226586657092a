#pragma once

#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

struct ContractionResult {
    Graph graph;        // surviving vertices in original order, merged vertex last
    int merged_vertex;  // index of v_S in graph
    VertexSet origin;   // the set S that was replaced
};

// CO(g, S): replace S by one vertex adjacent to everything that was
// adjacent to some member of S. S need not induce a connected subgraph.
ContractionResult contraction(const Graph& g, VertexSet s);

// Complement of the contraction of the complement.
ContractionResult cocontraction(const Graph& g, VertexSet s);

// Ordering s_1..s_k of an anti-connected set such that every prefix is
// anti-connected: repeatedly assign to the last open slot the
// largest-index non-cut vertex of the remaining complement subgraph.
std::vector<int> anti_connected_ordering(const Graph& g, VertexSet s);

// Vertex of cocontraction(g, s) -> word over the generators of A(g).
struct EmbeddingWordMap {
    std::vector<Word> words;
};

EmbeddingWordMap embedding_words(const Graph& g, VertexSet s);

struct EmbeddingReport {
    struct Failure {
        int u, v;                // vertices of the co-contraction
        bool expected_commute;   // true: edge pair failed, false: non-edge pair commuted
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// Necessary-condition check: edge pairs of the co-contraction must
// commute in A(g) under the word map, non-edge pairs must not.
EmbeddingReport verify_embedding(const Graph& g, VertexSet s, const EmbeddingWordMap& m);

}  // namespace raag
