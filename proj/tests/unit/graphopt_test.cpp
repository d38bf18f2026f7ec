#include <doctest.h>

#include "jagg/graphopt.hpp"
#include "support.hpp"

using namespace jagg;

TEST_CASE("max flow on small networks") {
  FlowNetwork one(2, 0, 1);
  one.add_arc(0, 1, 5);
  CHECK(max_flow(one).value == Rational(5));

  FlowNetwork diamond(4, 0, 3);
  diamond.add_arc(0, 1, 3);
  diamond.add_arc(0, 2, 2);
  diamond.add_arc(1, 3, 2);
  diamond.add_arc(2, 3, 3);
  const MaxFlowResult r = max_flow(diamond);
  CHECK(r.value == Rational(4));
  CHECK(r.flow.size() == 4);

  FlowNetwork apart(3, 0, 2);
  apart.add_arc(0, 1, 7);
  CHECK(max_flow(apart).value == Rational(0));
}

TEST_CASE("max-gain subgraph examples") {
  GainGraph triangle{{1, 1, 1}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}};
  CHECK(max_gain_subgraph(triangle).best == Rational(0));

  GainGraph edge{{Rational(1, 2), Rational(2, 5)}, {{0, 1, 1}}};
  const GainResult e = max_gain_subgraph(edge);
  CHECK(e.best == Rational(1, 10));
  CHECK(e.subset == std::vector<std::size_t>{0, 1});

  const GainResult none = max_gain_subgraph(GainGraph{});
  CHECK(none.best == Rational(0));
  CHECK(none.subset.empty());
}

TEST_CASE("density decision") {
  CHECK_FALSE(wmds_decide(GainGraph{{1, 0, 1}, {{0, 1, 1}, {1, 2, 1}}}));
  CHECK(wmds_decide(GainGraph{{2, 0, 0, 0}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}}));
  CHECK_FALSE(wmds_decide(GainGraph{{1}, {}}));
}

TEST_CASE("flow is conserved and cut capacity equals the value") {
  testkit::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testkit::uniform(rng, 2, 8);
    FlowNetwork net(n, 0, n - 1);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && testkit::coin(rng, 0.35))
          net.add_arc(u, v, Rational(static_cast<std::int64_t>(testkit::uniform(rng, 0, 9)), static_cast<std::int64_t>(testkit::uniform(rng, 1, 3))));
    const MaxFlowResult r = max_flow(net);
    std::vector<Rational> balance(n, Rational(0));
    for (std::size_t a = 0; a < net.arcs().size(); ++a) {
      const auto& arc = net.arcs()[a];
      CHECK(r.flow[a] >= 0);
      CHECK(r.flow[a] <= arc.capacity);
      balance[arc.from] -= r.flow[a];
      balance[arc.to] += r.flow[a];
    }
    for (std::size_t v = 1; v + 1 < n; ++v) CHECK(balance[v] == Rational(0));
    CHECK(balance[n - 1] == r.value);

    std::vector<bool> side(n, false);
    for (std::size_t v : r.source_side) side[v] = true;
    Rational cut = 0;
    for (const auto& arc : net.arcs())
      if (side[arc.from] && !side[arc.to]) cut += arc.capacity;
    CHECK(cut == r.value);
  }
}

TEST_CASE("scaling costs and rewards scales the optimum") {
  testkit::Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    GainGraph g;
    const std::size_t n = testkit::uniform(rng, 1, 8);
    for (std::size_t v = 0; v < n; ++v) g.cost.push_back(Rational(static_cast<std::int64_t>(testkit::uniform(rng, 0, 6)), 2));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (testkit::coin(rng, 0.5)) g.edges.push_back({u, v, 1});
    GainGraph scaled = g;
    const Rational f(3, 2);
    for (auto& c : scaled.cost) c *= f;
    for (auto& e : scaled.edges) e.weight *= f;
    CHECK(max_gain_subgraph(scaled).best == max_gain_subgraph(g).best * f);
  }
}
