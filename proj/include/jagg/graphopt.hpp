#pragma once

#include <cstddef>
#include <vector>

#include "jagg/rational.hpp"

namespace jagg {

class FlowNetwork {
 public:
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational capacity = 0;
    bool infinite = false;
  };

  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink);

  std::size_t add_arc(std::size_t from, std::size_t to, Rational capacity);
  std::size_t add_infinite_arc(std::size_t from, std::size_t to);

  std::size_t node_count() const { return nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Rational value = 0;
  std::vector<std::size_t> source_side;  // nodes reachable from the source in the residual graph
  std::vector<Rational> flow;             // per arc, in insertion order
};

MaxFlowResult max_flow(const FlowNetwork& net);

struct GainGraph {
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    Rational weight = 1;
  };
  std::vector<Rational> cost;
  std::vector<Edge> edges;
};

struct GainResult {
  Rational best = 0;
  std::vector<std::size_t> subset;
};

// Maximizes (weight of edges inside the subset) - (cost of the subset).
GainResult max_gain_subgraph(const GainGraph& g);
bool wmds_decide(const GainGraph& g);

}  // namespace jagg
