#include "jagg/structures.hpp"

#include <algorithm>
#include <set>

#include "jagg/error.hpp"

namespace jagg {

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool Graph::regular(std::size_t* degree) const {
  const auto d = degrees();
  if (d.empty()) {
    if (degree) *degree = 0;
    return true;
  }
  if (std::any_of(d.begin(), d.end(), [&](std::size_t x) { return x != d[0]; })) return false;
  if (degree) *degree = d[0];
  return true;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

void Graph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DataError("edge endpoint out of range");
    if (u == v) throw DataError("self-loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw DataError("parallel edges are not allowed");
  }
}

}  // namespace jagg
