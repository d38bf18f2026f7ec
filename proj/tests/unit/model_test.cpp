#include <doctest.h>

#include "fixtures.hpp"
#include "jagg/error.hpp"
#include "jagg/model.hpp"
#include "support.hpp"

using namespace jagg;

TEST_CASE("thresholds use exact floors") {
  CHECK(thresholds(Rational(1, 2), 3) == ThresholdPair{2, 2});
  CHECK(thresholds(Rational(0), 5) == ThresholdPair{1, 5});
  CHECK(thresholds(Rational(2, 3), 4) == ThresholdPair{3, 2});
  CHECK_THROWS_AS(thresholds(Rational(1), 3), DataError);
  CHECK_THROWS_AS(thresholds(Rational(-1, 2), 3), DataError);
}

TEST_CASE("doctrinal paradox outcome") {
  const ManipInstance inst = fixtures::doctrine();
  const Outcome o = outcome(inst.profile);
  CHECK(o.premise_values == Assignment{true, false, true, true});
  CHECK(o.conclusion_values == std::vector<bool>{false, false});
}

TEST_CASE("decision variables of the third judge are c and m") {
  const ManipInstance inst = fixtures::doctrine();
  CHECK(decision_variables(inst.profile, 2) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("two judges at q=1/2: premises the other judge accepts are decided") {
  Agenda a({"x", "y"}, {});
  Profile p(a, {JudgmentSet{{true, false}}, JudgmentSet{{false, false}}}, Rational(1, 2));
  CHECK(p.thresholds().tau_pos == 2);
  CHECK(decision_variables(p, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("replacement recounts support") {
  const ManipInstance inst = fixtures::doctrine();
  JudgmentSet j = inst.truthful();
  j.premise_values[1] = true;
  const Outcome o = outcome_with_replacement(inst.profile, 2, j);
  CHECK(o.premise_values[1]);
  CHECK(o.conclusion_values[0]);
  CHECK(outcome_with_replacement(inst.profile, 2, inst.truthful()) == outcome(inst.profile));

  JudgmentSet off = inst.truthful();
  off.premise_values[0] = true;  // s is not decided by judge 3
  off.premise_values[3] = true;  // nor is h
  CHECK(outcome_with_replacement(inst.profile, 2, off) == outcome(inst.profile));
}

TEST_CASE("normalization turns premise goals into conclusions") {
  ManipInstance inst = fixtures::doctrine();
  inst.desired.premise_goals[0] = false;  // s=0 is in judge 3's set
  inst.desired.conclusion_goals[1] = std::nullopt;
  const ManipInstance norm = normalize_desired_set(inst);
  const Agenda& a = norm.profile.agenda();
  CHECK(is_normalized(norm.desired));
  CHECK(a.premise_count() == 5);
  REQUIRE(a.conclusion_count() == 2);
  CHECK(a.conclusions()[0].name == "e");
  const Clause& guard = a.conclusions()[1].clause;
  CHECK(guard.size() == 2);
  CHECK(guard.negatives() == 0);
  CHECK(*norm.desired.conclusion_goals[1] == false);
  for (const auto& j : norm.profile.judgments()) CHECK_FALSE(j.premise_values[4]);

  const ManipInstance again = normalize_desired_set(norm);
  CHECK(again.profile == norm.profile);
  CHECK(again.desired == norm.desired);
}

TEST_CASE("normalization at tau_pos = 1 uses a unit conclusion") {
  ManipInstance inst = fixtures::manip(
      "judges 3\nquota 0\nvars x y\nconc c = x y\njudge 1: x=0 y=0\njudge 2: x=0 y=0\njudge 3: x=1 y=0\n"
      "manipulator 3\ndesired: x=1\n");
  const ManipInstance norm = normalize_desired_set(inst);
  REQUIRE(norm.profile.agenda().conclusion_count() == 1);
  CHECK(norm.profile.agenda().conclusions()[0].clause.size() == 1);
}

TEST_CASE("clauses reject repeated variables") {
  CHECK_THROWS(Clause({{0, false}, {0, true}}));
  CHECK_THROWS(Clause({}));
}

TEST_CASE("outcome properties on random profiles") {
  testkit::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Agenda a = testkit::random_agenda(rng, testkit::uniform(rng, 1, 8), 3, 3);
    const std::size_t n = testkit::uniform(rng, 2, 6);
    const Rational q(static_cast<std::int64_t>(testkit::uniform(rng, 0, 5)), 6);
    const Profile p = testkit::random_profile(rng, a, n, q);
    const ThresholdPair th = p.thresholds();
    CHECK(th.tau_pos + th.tau_neg == static_cast<int>(n) + 1);

    const Outcome o = outcome(p);
    const std::size_t judge = testkit::uniform(rng, 0, n - 1);
    const auto decided = decision_variables(p, judge);
    for (std::size_t x = 0; x < a.premise_count(); ++x) {
      JudgmentSet raised = p.judgment(judge);
      raised.premise_values[x] = true;
      if (o.premise_values[x]) CHECK(outcome(p.with_judgment(judge, raised)).premise_values[x]);
    }
    // Non-decision variables never move, whatever the judge reports.
    const std::size_t np = a.premise_count();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << np); ++code) {
      JudgmentSet j{Assignment(np)};
      for (std::size_t x = 0; x < np; ++x) j.premise_values[x] = code >> x & 1;
      const Outcome r = outcome_with_replacement(p, judge, j);
      for (std::size_t x = 0; x < np; ++x)
        if (!std::binary_search(decided.begin(), decided.end(), x)) CHECK(r.premise_values[x] == o.premise_values[x]);
    }
  }
}
