#include "raag/raag_words.hpp"

#include <stdexcept>

namespace raag {

namespace {

void check_letters(const RaagContext& ctx, const Word& w) {
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= ctx.graph.size())
            throw std::invalid_argument("word uses a generator outside the context graph");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    }
}

// Delete cancelling pairs x^e ... x^-e whose intermediate letters all
// commute with x, until none remain. The result is a RAAG geodesic.
Word raag_reduce(const RaagContext& ctx, Word w) {
    w = free_reduce(std::move(w));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[j].gen == w[i].gen) {
                    if (w[j].sign == -w[i].sign) {
                        w.erase(w.begin() + j);
                        w.erase(w.begin() + i);
                        changed = true;
                    }
                    break;  // same generator blocks any farther pairing
                }
                if (!ctx.graph.adjacent(w[i].gen, w[j].gen)) break;
            }
        }
        if (changed) w = free_reduce(std::move(w));
    }
    return w;
}

bool letter_less(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;  // positive before negative
}

}  // namespace

Word normal_form(const RaagContext& ctx, Word w) {
    check_letters(ctx, w);
    w = raag_reduce(ctx, std::move(w));
    // Greedy lex-min representative of the trace: repeatedly pull out the
    // least letter that commutes past everything before it.
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = 0;
        for (std::size_t p = 1; p < w.size(); ++p) {
            // position p is a candidate iff all earlier letters commute with it
            bool candidate = true;
            for (std::size_t q = 0; q < p; ++q) {
                if (w[q].gen == w[p].gen || !ctx.graph.adjacent(w[q].gen, w[p].gen)) {
                    candidate = false;
                    break;
                }
            }
            if (candidate && letter_less(w[p], w[best])) best = p;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

bool words_equal(const RaagContext& ctx, const Word& w1, const Word& w2) {
    return normal_form(ctx, w1) == normal_form(ctx, w2);
}

bool commutes(const RaagContext& ctx, const Word& w1, const Word& w2) {
    return words_equal(ctx, concat(w1, w2), concat(w2, w1));
}

}  // namespace raag
