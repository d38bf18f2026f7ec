#include "jagg/graphopt.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

#include "jagg/error.hpp"

namespace jagg {

FlowNetwork::FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (source >= nodes || sink >= nodes) throw UsageError("source or sink outside the network");
  if (source == sink) throw UsageError("source and sink must differ");
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Rational capacity) {
  if (from >= nodes_ || to >= nodes_) throw UsageError("arc endpoint outside the network");
  if (capacity < 0) throw UsageError("negative capacity");
  arcs_.push_back({from, to, capacity, false});
  return arcs_.size() - 1;
}

std::size_t FlowNetwork::add_infinite_arc(std::size_t from, std::size_t to) {
  if (from >= nodes_ || to >= nodes_) throw UsageError("arc endpoint outside the network");
  arcs_.push_back({from, to, 0, true});
  return arcs_.size() - 1;
}

MaxFlowResult max_flow(const FlowNetwork& net) {
  // Infinite arcs get one more than everything finite can carry together.
  Rational surrogate = 1;
  for (const auto& a : net.arcs())
    if (!a.infinite) surrogate += a.capacity;

  struct Residual {
    std::size_t to;
    Rational cap;
  };
  std::vector<Residual> edges;
  std::vector<std::vector<std::size_t>> adj(net.node_count());
  for (const auto& a : net.arcs()) {
    adj[a.from].push_back(edges.size());
    edges.push_back({a.to, a.infinite ? surrogate : a.capacity});
    adj[a.to].push_back(edges.size());
    edges.push_back({a.from, 0});
  }

  const std::size_t none = std::numeric_limits<std::size_t>::max();
  MaxFlowResult result;
  std::vector<std::size_t> via(net.node_count());
  auto bfs = [&]() {
    std::fill(via.begin(), via.end(), none);
    std::deque<std::size_t> queue{net.source()};
    std::vector<bool> seen(net.node_count(), false);
    seen[net.source()] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : adj[v]) {
        std::size_t w = edges[e].to;
        if (seen[w] || edges[e].cap <= 0) continue;
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
    return seen;
  };

  for (;;) {
    std::vector<bool> seen = bfs();
    if (!seen[net.sink()]) {
      for (std::size_t v = 0; v < net.node_count(); ++v)
        if (seen[v]) result.source_side.push_back(v);
      break;
    }
    Rational push = -1;
    for (std::size_t v = net.sink(); v != net.source(); v = edges[via[v] ^ 1].to)
      if (push < 0 || edges[via[v]].cap < push) push = edges[via[v]].cap;
    for (std::size_t v = net.sink(); v != net.source(); v = edges[via[v] ^ 1].to) {
      edges[via[v]].cap -= push;
      edges[via[v] ^ 1].cap += push;
    }
    result.value += push;
  }

  result.flow.reserve(net.arcs().size());
  std::vector<Rational> balance(net.node_count(), 0);
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    Rational f = edges[2 * i + 1].cap;
    result.flow.push_back(f);
    balance[net.arcs()[i].from] -= f;
    balance[net.arcs()[i].to] += f;
  }
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (v != net.source() && v != net.sink() && balance[v] != Rational(0))
      throw std::logic_error("flow conservation violated");
  return result;
}

GainResult max_gain_subgraph(const GainGraph& g) {
  const std::size_t vertices = g.cost.size();
  for (const Rational& c : g.cost)
    if (c < 0) throw UsageError("max_gain_subgraph needs nonnegative costs");

  // Nodes: source, sink, one per vertex, one selector per edge.
  const std::size_t source = 0, sink = 1, first_vertex = 2, first_edge = 2 + vertices;
  FlowNetwork net(first_edge + g.edges.size(), source, sink);
  Rational supplies = 0;
  for (std::size_t v = 0; v < vertices; ++v) net.add_arc(first_vertex + v, sink, g.cost[v]);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.u >= vertices || edge.v >= vertices) throw UsageError("edge endpoint outside the graph");
    if (edge.weight < 0) throw UsageError("edge weights must be nonnegative");
    net.add_arc(source, first_edge + e, edge.weight);
    net.add_infinite_arc(first_edge + e, first_vertex + edge.u);
    net.add_infinite_arc(first_edge + e, first_vertex + edge.v);
    supplies += edge.weight;
  }

  MaxFlowResult flow = max_flow(net);
  GainResult result;
  result.best = supplies - flow.value;
  for (std::size_t node : flow.source_side)
    if (node >= first_vertex && node < first_edge) result.subset.push_back(node - first_vertex);
  return result;
}

bool wmds_decide(const GainGraph& g) { return max_gain_subgraph(g).best > 0; }

}  // namespace jagg
