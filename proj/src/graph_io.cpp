#include "raag/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace raag {

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 input", 0);

    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == kG6Hi) throw ParseError("graphs on more than 62 vertices are not supported", 0);
    if (head < kG6Lo || head > kG6Hi) throw ParseError("malformed graph6 header", 0);
    const int n = head - kG6Lo;

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body_len = (bits + 5) / 6;
    if (text.size() < 1 + body_len) throw ParseError("truncated graph6 body", text.size());
    if (text.size() > 1 + body_len) throw ParseError("trailing garbage after graph6 body", 1 + body_len);

    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte_index = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte_index]);
            if (c < kG6Lo || c > kG6Hi) throw ParseError("out-of-range graph6 byte", byte_index);
            if ((c - kG6Lo) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.size() + kG6Lo));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.size(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph parse_adjlist(std::string_view text) {
    struct Line {
        std::string head;
        std::vector<std::string> nbrs;
    };
    std::vector<Line> lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        const auto colon = raw.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("adjacency line missing ':': " + raw);
        Line line;
        {
            std::istringstream hs(raw.substr(0, colon));
            if (!(hs >> line.head)) throw std::invalid_argument("adjacency line missing label: " + raw);
            std::string extra;
            if (hs >> extra) throw std::invalid_argument("multiple labels before ':': " + raw);
        }
        for (const Line& seen : lines)
            if (seen.head == line.head) throw std::invalid_argument("duplicate label: " + line.head);
        std::istringstream ns(raw.substr(colon + 1));
        std::string nbr;
        while (ns >> nbr) {
            if (nbr == line.head)
                throw std::invalid_argument("vertex adjacent to itself: " + line.head);
            line.nbrs.push_back(nbr);
        }
        lines.push_back(std::move(line));
    }

    // Vertex order: head lines first, then labels that only ever appear
    // as neighbors, in first-mention order.
    std::vector<std::string> order;
    auto note_label = [&order](const std::string& s) {
        if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
    };
    for (const Line& line : lines) note_label(line.head);
    for (const Line& line : lines)
        for (const std::string& nbr : line.nbrs) note_label(nbr);

    Graph g(static_cast<int>(order.size()), order);
    for (const Line& line : lines) {
        const int u = *g.vertex_by_label(line.head);
        for (const std::string& nbr : line.nbrs) g.add_edge(u, *g.vertex_by_label(nbr));
    }
    return g;
}

std::string emit_adjlist(const Graph& g) {
    std::string out;
    for (int v = 0; v < g.size(); ++v) {
        out += g.label(v);
        out += ':';
        for (int u : set_vertices(g.neighbors(v))) {
            out += ' ';
            out += g.label(u);
        }
        out += '\n';
    }
    return out;
}

}  // namespace raag
