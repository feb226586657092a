#pragma once

#include <functional>
#include <string>
#include <vector>

namespace raag {

// One signed generator occurrence. Generator ids are arbitrary ints;
// in RAAG contexts they coincide with vertex indices.
struct Letter {
    int gen;
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word conjugate(const Word& a, const Word& w);   // a w a^-1
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word power(int gen, int exponent);              // gen^exponent as letters

// Replace each letter by images[letter.gen] (sign-adjusted) and freely reduce.
Word substitute(const Word& w, const std::vector<Word>& images);

// "a b^-1 c" token syntax.
std::string word_to_string(const Word& w, const std::function<std::string(int)>& name);
Word parse_word(const std::string& text, const std::function<int(const std::string&)>& id_of);

struct GeneratorSymbol {
    int id;
    std::string display;
    bool operator==(const GeneratorSymbol&) const = default;
};

struct Presentation {
    std::vector<GeneratorSymbol> generators;
    std::vector<Word> relators;

    const GeneratorSymbol* find(int id) const;
    std::string display_of(int id) const;
    // "gens: a b c\nrel: a b a^-1 b^-1\n..."
    std::string to_text() const;
};

class Graph;
Presentation raag_presentation(const Graph& g);

}  // namespace raag
