#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace qlap {

struct Graph6Error : std::runtime_error {
  size_t offset;
  Graph6Error(const std::string& what, size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// graph6 codec. One record per line: N(n) followed by the upper triangle of
// the adjacency matrix in column-major order, packed 6 bits per byte
// (MSB first) with zero padding, each group stored as value+63. Orders below
// 63 use the one-byte size; 63..258047 the four-byte '~' form. The optional
// ">>graph6<<" file header is accepted and skipped.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace qlap
