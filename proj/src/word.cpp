#include "raag/word.hpp"

#include <sstream>
#include <stdexcept>

#include "raag/graph.hpp"

namespace raag {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word conjugate(const Word& a, const Word& w) { return concat(concat(a, w), inverse(a)); }

Word commutator(const Word& a, const Word& b) {
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word power(int gen, int exponent) {
    Word out;
    const int sign = exponent >= 0 ? 1 : -1;
    for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) out.push_back({gen, sign});
    return out;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (const Letter& l : w) {
        if (l.gen < 0 || l.gen >= static_cast<int>(images.size()))
            throw std::out_of_range("no substitution image for generator");
        const Word& img = l.sign > 0 ? images[l.gen] : inverse(images[l.gen]);
        out.insert(out.end(), img.begin(), img.end());
    }
    return free_reduce(out);
}

std::string word_to_string(const Word& w, const std::function<std::string(int)>& name) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += name(l.gen);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

Word parse_word(const std::string& text, const std::function<int(const std::string&)>& id_of) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            sign = -1;
            tok.resize(tok.size() - 3);
        }
        out.push_back({id_of(tok), sign});
    }
    return out;
}

const GeneratorSymbol* Presentation::find(int id) const {
    for (const GeneratorSymbol& g : generators)
        if (g.id == id) return &g;
    return nullptr;
}

std::string Presentation::display_of(int id) const {
    const GeneratorSymbol* g = find(id);
    if (!g) throw std::out_of_range("unknown generator id");
    return g->display;
}

std::string Presentation::to_text() const {
    std::string out = "gens:";
    for (const GeneratorSymbol& g : generators) {
        out += ' ';
        out += g.display;
    }
    out += '\n';
    for (const Word& r : relators) {
        out += "rel: ";
        out += word_to_string(r, [this](int id) { return display_of(id); });
        out += '\n';
    }
    return out;
}

Presentation raag_presentation(const Graph& g) {
    Presentation p;
    for (int v = 0; v < g.size(); ++v) p.generators.push_back({v, g.label(v)});
    for (int v = 0; v < g.size(); ++v)
        for (int w = v + 1; w < g.size(); ++w)
            if (g.adjacent(v, w)) p.relators.push_back(commutator({{v, 1}}, {{w, 1}}));
    return p;
}

}  // namespace raag
