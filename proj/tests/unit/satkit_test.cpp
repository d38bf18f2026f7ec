#include <doctest.h>

#include "fixtures.hpp"
#include "jagg/error.hpp"
#include "jagg/oracle.hpp"
#include "jagg/reductions.hpp"
#include "jagg/satkit.hpp"
#include "support.hpp"

using namespace jagg;

namespace {
SatProblem cnf(const char* text) { return parse_cnf(text); }
}  // namespace

TEST_CASE("dpll returns the smallest model") {
  const SatVerdict v = solve(cnf("1 2 0\n-1 -2 0\n"), SatStrategy::Dpll);
  REQUIRE(v.satisfiable);
  CHECK(v.model == Assignment{false, true});
}

TEST_CASE("contradictions and empty formulas") {
  for (SatStrategy s : {SatStrategy::Auto, SatStrategy::Horn, SatStrategy::TwoSat, SatStrategy::Dpll})
    CHECK_FALSE(solve(cnf("1 0\n-1 0\n"), s).satisfiable);
  SatProblem empty;
  empty.variables = 3;
  CHECK(solve(empty).satisfiable);
  CHECK(solve(empty).model.size() == 3);
}

TEST_CASE("triangle coloring formula is satisfiable") {
  const SatProblem p = gen_sat_coloring(testkit::cycle_graph(3), 3);
  CHECK(p.variables == 9);
  CHECK(solve(p).satisfiable);
  CHECK(oracle::sat(p).satisfiable);
  CHECK_FALSE(solve(gen_sat_coloring(testkit::complete_graph(4), 3)).satisfiable);
}

TEST_CASE("explicit strategies refuse clause sets they do not cover") {
  const SatProblem three = cnf("1 2 3 0\n-1 -2 0\n");
  CHECK_THROWS_AS(solve(three, SatStrategy::TwoSat), UsageError);
  CHECK_THROWS_AS(solve(cnf("1 2 0\n"), SatStrategy::Horn), UsageError);
  CHECK(solve(three, SatStrategy::Auto).satisfiable);
}

TEST_CASE("frozen values act like substitution") {
  SatProblem p = cnf("1 2 0\n-2 3 0\nfreeze 1=0\n");
  const SatVerdict v = solve(p);
  REQUIRE(v.satisfiable);
  CHECK_FALSE(v.model[0]);
  CHECK(v.model[1]);
  CHECK(v.model[2]);

  p.frozen[2] = false;
  CHECK_FALSE(solve(p).satisfiable);
}

TEST_CASE("dpll budget exhaustion is reported, not guessed") {
  testkit::Rng rng(3);
  SatProblem hard;
  hard.variables = 60;
  for (int c = 0; c < 256; ++c) {
    std::vector<std::size_t> pool(60);
    for (std::size_t v = 0; v < 60; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    hard.clauses.emplace_back(std::vector<Literal>{{pool[0], testkit::coin(rng)}, {pool[1], testkit::coin(rng)}, {pool[2], testkit::coin(rng)}});
  }
  SatOptions tiny;
  tiny.node_budget = 5;
  CHECK_THROWS_AS(solve(hard, SatStrategy::Dpll, tiny), ResourceError);
}

TEST_CASE("desired-set consistency") {
  const Agenda a({"x", "y"}, {{"c", Clause({{0, false}, {1, false}})}});
  DesiredSet d = DesiredSet::empty_for(a);
  CHECK(consistency_check(d, a).satisfiable);
  d.conclusion_goals[0] = false;
  d.premise_goals[0] = true;
  CHECK_FALSE(consistency_check(d, a).satisfiable);

  const ManipInstance inst = fixtures::doctrine();
  const SatVerdict v = consistency_check(inst.desired, inst.profile.agenda());
  REQUIRE(v.satisfiable);
  CHECK(inst.profile.agenda().evaluate(v.model) == std::vector<bool>{true, true});
}

TEST_CASE("models satisfy the formula and extend frozen values") {
  testkit::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const SatProblem p = testkit::random_formula(rng, testkit::uniform(rng, 1, 10), testkit::uniform(rng, 1, 20), 3,
                                                 testkit::ClauseKind::Any, 0.2);
    const SatVerdict v = solve(p);
    CHECK(v.satisfiable == oracle::sat(p).satisfiable);
    if (!v.satisfiable) continue;
    for (const Clause& c : p.clauses) CHECK(c.holds(v.model));
    for (std::size_t x = 0; x < p.frozen.size(); ++x)
      if (p.frozen[x]) CHECK(v.model[x] == *p.frozen[x]);
  }
}
