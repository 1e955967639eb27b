#pragma once

#include <stdexcept>
#include <string>

#include "gmw/graph.hpp"

namespace gmw {

// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Decode a graph6 string (optional ">>graph6<<" header, short or long order
// prefix, upper-triangle column-major edge bits).
Graph from_graph6(const std::string& text);

std::string to_graph6(const Graph& g);

}  // namespace gmw
