#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace jagg {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const;
  bool regular(std::size_t* degree = nullptr) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  void validate() const;  // no loops, no parallel edges, endpoints in range
};

// Graph whose edges are split into a rewarded set and a penalized set.
struct PvcGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> plus;
  std::vector<std::pair<std::size_t, std::size_t>> minus;
  std::vector<std::string> names;  // optional vertex labels
};

// Rows are judges / voters, columns are issues.
using Matrix = std::vector<std::vector<int>>;

}  // namespace jagg
