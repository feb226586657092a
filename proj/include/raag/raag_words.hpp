#pragma once

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

// Word-problem context: generators are the vertices of the graph,
// ordered by index.
struct RaagContext {
    Graph graph;
};

// Shortlex-least word equal to w in A(graph). Letters compare by
// (generator index, sign) with the positive letter first.
Word normal_form(const RaagContext& ctx, Word w);

bool words_equal(const RaagContext& ctx, const Word& w1, const Word& w2);
bool commutes(const RaagContext& ctx, const Word& w1, const Word& w2);

}  // namespace raag
