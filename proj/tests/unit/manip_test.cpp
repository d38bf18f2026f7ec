#include <doctest.h>

#include "fixtures.hpp"
#include "jagg/manip.hpp"
#include "jagg/oracle.hpp"
#include "jagg/reductions.hpp"
#include "support.hpp"

using namespace jagg;

namespace {
SatProblem cnf(const char* text) { return parse_cnf(text); }
}  // namespace

TEST_CASE("doctrinal example: robustness and possible flip e through c") {
  const ManipInstance inst = fixtures::doctrine();
  for (const ManipVerdict& v : {solve_robustness(inst), solve_possible(inst)}) {
    REQUIRE(v.feasible());
    REQUIRE(v.witness);
    CHECK(v.witness->premise_values[1]);
    REQUIRE(v.gained_conclusion);
    CHECK(*v.gained_conclusion == 0);
  }
  CHECK(certifies(inst, Variant::Possible, *solve_possible(inst).witness));
}

TEST_CASE("doctrinal example: necessary and exact") {
  const ManipInstance inst = fixtures::doctrine();
  const ManipVerdict nec = solve_necessary(inst);
  REQUIRE(nec.feasible());
  CHECK(certifies(inst, Variant::Necessary, *nec.witness));
  const ManipVerdict ex = solve_exact(inst);
  REQUIRE(ex.feasible());
  CHECK(outcome_with_replacement(inst.profile, 2, *ex.witness).conclusion_values == std::vector<bool>{true, true});
}

TEST_CASE("empty or already-met goals") {
  ManipInstance inst = fixtures::doctrine();
  inst.desired = DesiredSet::empty_for(inst.profile.agenda());
  CHECK_FALSE(solve_robustness(inst).feasible());
  CHECK_FALSE(solve_possible(inst).feasible());
  CHECK_FALSE(solve_necessary(inst).feasible());
  const ManipVerdict ex = solve_exact(inst);
  REQUIRE(ex.feasible());
  CHECK(*ex.witness == inst.truthful());
}

TEST_CASE("goals on non-decision variables only cannot be influenced") {
  const ManipInstance inst = fixtures::manip(
      "judges 3\nquota 1/2\nvars a b c\nconc g = a b\njudge 1: a=1 b=0 c=1\njudge 2: a=1 b=0 c=0\n"
      "judge 3: a=0 b=0 c=1\nmanipulator 3\ndesired: g=0\n");
  CHECK(decision_variables(inst.profile, 2) == std::vector<std::size_t>{2});
  CHECK_FALSE(solve_robustness(inst).feasible());
  CHECK_FALSE(solve_exact(inst).feasible());
}

TEST_CASE("desired premise outside the truthful outcome rules out exact") {
  const ManipInstance inst = fixtures::manip(
      "judges 3\nquota 1/2\nvars a b\nconc g = a b\njudge 1: a=0 b=1\njudge 2: a=0 b=0\n"
      "judge 3: a=1 b=0\nmanipulator 3\ndesired: a=1\n");
  CHECK_FALSE(solve_exact(inst).feasible());
}

TEST_CASE("necessary on constructions from satisfiable and unsatisfiable formulas") {
  CHECK(solve_necessary(gen_necessary_mplus(cnf("1 2 0\n-1 -2 0\n"), 2)).feasible());
  CHECK_FALSE(solve_necessary(gen_necessary_mplus(cnf("1 0\n-1 0\n"), 2)).feasible());
  CHECK(solve_necessary(gen_necessary_mplus(SatProblem{2, {}, {}}, 2)).feasible());

  CHECK(solve_necessary(gen_necessary_m2p_m3m(cnf("1 2 0\n"))).feasible());
  const SatProblem unsat = cnf("1 2 0\n1 3 0\n2 3 0\n-1 -2 -3 0\n1 4 0\n-1 -2 -4 0\n-1 -3 -4 0\n-2 -3 -4 0\n2 4 0\n3 4 0\n");
  REQUIRE_FALSE(oracle::sat(unsat).satisfiable);
  const ManipInstance img = gen_necessary_m2p_m3m(unsat);
  CHECK_FALSE(solve_necessary(img).feasible());
  CHECK_FALSE(oracle::manipulation(img, Variant::Necessary).feasible);

  const SatProblem f = cnf("1 2 0\n-2 -3 0\n-1 -2 3 0\n");
  CHECK(solve_exact(gen_necessary_mms(f, 3, 1)).feasible());
  CHECK(solve_exact(gen_necessary_mms(f, 3, 2)).feasible());
}

TEST_CASE("variant implications on random instances") {
  testkit::Rng rng(23);
  testkit::ManipParams params;
  for (int t = 0; t < 300; ++t) {
    const ManipInstance inst = testkit::random_manip(rng, params);
    const bool rob = solve_robustness(inst).feasible();
    const bool pos = solve_possible(inst).feasible();
    const bool nec = solve_necessary(inst).feasible();
    if (pos) CHECK(rob);
    if (nec) CHECK(pos);
  }
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::Robustness, Variant::Possible, Variant::Necessary, Variant::Exact, Variant::Hamming})
    CHECK(parse_variant(to_string(v)) == v);
  CHECK_FALSE(parse_variant("bogus"));
}
