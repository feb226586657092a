#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "raag/graph.hpp"

namespace raag {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Single-line graph6, up to 62 vertices. Labels default to "v1".."vn".
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Lines of the form "label: label label ...". Missing reverse mentions
// are symmetrized; duplicate heads and self-adjacency are errors.
Graph parse_adjlist(std::string_view text);
std::string emit_adjlist(const Graph& g);

}  // namespace raag
