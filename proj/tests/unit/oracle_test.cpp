#include <doctest.h>

#include "fixtures.hpp"
#include "jagg/error.hpp"
#include "jagg/oracle.hpp"
#include "jagg/reductions.hpp"
#include "support.hpp"

using namespace jagg;

TEST_CASE("manipulation oracle on the worked examples") {
  CHECK(oracle::manipulation(fixtures::doctrine(), Variant::Possible).feasible);
  CHECK_FALSE(oracle::manipulation(fixtures::hamming_example(), Variant::Hamming).feasible);

  ManipInstance met = fixtures::doctrine();
  met.desired = DesiredSet::empty_for(met.profile.agenda());
  met.desired.premise_goals[2] = true;  // m=1 is already in the outcome
  const auto exact = oracle::manipulation(met, Variant::Exact);
  CHECK(exact.feasible);
}

TEST_CASE("manipulation oracle respects its bound") {
  testkit::Rng rng(1);
  testkit::ManipParams p;
  p.min_premises = p.max_premises = 12;
  ManipInstance inst = testkit::random_manip(rng, p);
  bool exceeded = false;
  try {
    oracle::manipulation(inst, Variant::Exact, 0);
  } catch (const ResourceError&) {
    exceeded = true;
  }
  CHECK(exceeded == !decision_variables(inst.profile, inst.manipulator).empty());
}

TEST_CASE("bribery oracle small cases") {
  const BriberyInstance lob = gen_bribery_from_lobbying({{1, 1}, {0, 0}, {0, 0}}, 1);
  CHECK(oracle::bribery(lob).feasible);
  BriberyInstance none = lob;
  none.budget = 0;
  CHECK_FALSE(oracle::bribery(none).feasible);

  // Full budget, unanimous opposition, a single desired conclusion.
  const Agenda a({"x", "y"}, {{"g", Clause({{0, false}, {1, false}})}});
  Profile p(a, {JudgmentSet{{false, false}}, JudgmentSet{{false, false}}, JudgmentSet{{false, false}}}, Rational(1, 2));
  DesiredSet d = DesiredSet::empty_for(a);
  d.conclusion_goals[0] = true;
  CHECK(oracle::bribery(BriberyInstance{p, d, 3, BriberyMode::Bribery}).feasible);
  CHECK_FALSE(oracle::bribery(BriberyInstance{p, d, 1, BriberyMode::Bribery}).feasible);
  CHECK(oracle::microbribery(BriberyInstance{p, d, 2, BriberyMode::Microbribery}).feasible);
  CHECK(oracle::microbribery_entries(BriberyInstance{p, d, 2, BriberyMode::Microbribery}).feasible);
  CHECK_FALSE(oracle::microbribery(BriberyInstance{p, d, 1, BriberyMode::Microbribery}).feasible);
}

TEST_CASE("microbribery oracles agree on random 3x4 profiles") {
  testkit::Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const BriberyInstance inst = testkit::random_bribery(rng, 3, 4, testkit::uniform(rng, 1, 5), 3, testkit::ClauseKind::Any,
                                                         static_cast<int>(testkit::uniform(rng, 0, 4)), BriberyMode::Microbribery);
    CHECK(oracle::microbribery(inst).feasible == oracle::microbribery_entries(inst).feasible);
  }
  CHECK(oracle::microbribery(gen_microbribery_clique(testkit::complete_graph(5), 4)).feasible);
}

TEST_CASE("sat oracle") {
  CHECK_FALSE(oracle::sat(parse_cnf("1 0\n-1 0\n")).satisfiable);
  CHECK(oracle::sat(SatProblem{}).satisfiable);
  CHECK(oracle::sat(gen_sat_coloring(testkit::cycle_graph(3), 3)).satisfiable);
  CHECK(oracle::sat(parse_cnf("1 2 0\n-1 -2 0\n")).model == Assignment{false, true});
}

TEST_CASE("graph oracles") {
  const Graph k4 = testkit::complete_graph(4), c5 = testkit::cycle_graph(5);
  CHECK(oracle::colorable(c5, 3));
  CHECK_FALSE(oracle::colorable(c5, 2));
  CHECK(oracle::has_clique(k4, 4));
  CHECK_FALSE(oracle::has_clique(c5, 3));
  CHECK(oracle::has_vertex_cover(c5, 3));
  CHECK_FALSE(oracle::has_vertex_cover(c5, 2));
  CHECK(oracle::lobbying_yes({{1, 1}, {0, 0}, {0, 0}}, 1));
  CHECK_FALSE(oracle::lobbying_yes({{0, 0}, {0, 0}, {0, 0}}, 1));
}
