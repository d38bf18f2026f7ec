#pragma once

// Random instance builders shared by the unit and acceptance suites. Every
// builder takes the generator explicitly so each suite controls its seed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jagg/bribe.hpp"
#include "jagg/model.hpp"
#include "jagg/satkit.hpp"
#include "jagg/structures.hpp"

namespace testkit {

using jagg::Agenda;
using jagg::Assignment;
using jagg::Clause;
using jagg::Conclusion;
using jagg::DesiredSet;
using jagg::JudgmentSet;
using jagg::Literal;
using jagg::ManipInstance;
using jagg::Profile;
using jagg::Rational;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Shape of the clauses a generator may emit.
enum class ClauseKind { Any, PositiveMonotone, Monotone, Horn, DualHorn, Binary };

inline Clause random_clause(Rng& rng, std::size_t vars, std::size_t max_len, ClauseKind kind) {
  const std::size_t len = uniform(rng, kind == ClauseKind::Binary ? std::min<std::size_t>(2, vars) : 1,
                                  std::min(max_len, vars));
  std::vector<std::size_t> pool(vars);
  for (std::size_t i = 0; i < vars; ++i) pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Literal> lits;
  const bool all_negative = coin(rng);
  const std::size_t odd_one = uniform(rng, 0, len - 1);
  for (std::size_t t = 0; t < len; ++t) {
    bool negated = false;
    switch (kind) {
      case ClauseKind::Any:
      case ClauseKind::Binary: negated = coin(rng); break;
      case ClauseKind::PositiveMonotone: negated = false; break;
      case ClauseKind::Monotone: negated = all_negative; break;
      case ClauseKind::Horn: negated = all_negative || t != odd_one; break;
      case ClauseKind::DualHorn: negated = !all_negative && t == odd_one; break;
    }
    lits.push_back({pool[t], negated});
  }
  return Clause(std::move(lits));
}

inline Agenda random_agenda(Rng& rng, std::size_t premises, std::size_t conclusions, std::size_t max_len,
                            ClauseKind kind = ClauseKind::Any) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < premises; ++i) names.push_back("p" + std::to_string(i + 1));
  std::vector<Conclusion> cs;
  for (std::size_t c = 0; c < conclusions; ++c) cs.push_back({"c" + std::to_string(c + 1), random_clause(rng, premises, max_len, kind)});
  return Agenda(std::move(names), std::move(cs));
}

inline Assignment random_assignment(Rng& rng, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = coin(rng);
  return a;
}

inline Profile random_profile(Rng& rng, const Agenda& agenda, std::size_t judges, Rational q) {
  std::vector<JudgmentSet> js;
  for (std::size_t j = 0; j < judges; ++j) js.push_back({random_assignment(rng, agenda.premise_count())});
  return Profile(agenda, std::move(js), q);
}

// Goals copied from one judge's set, each kept with probability p.
inline DesiredSet random_goals_from(Rng& rng, const Agenda& agenda, const Assignment& premises, double p_premise,
                                    double p_conclusion) {
  DesiredSet d = DesiredSet::empty_for(agenda);
  const auto values = agenda.evaluate(premises);
  for (std::size_t x = 0; x < premises.size(); ++x)
    if (coin(rng, p_premise)) d.premise_goals[x] = premises[x];
  for (std::size_t c = 0; c < values.size(); ++c)
    if (coin(rng, p_conclusion)) d.conclusion_goals[c] = values[c];
  return d;
}

struct ManipParams {
  std::size_t judges = 3;
  std::size_t min_premises = 2, max_premises = 6;
  std::size_t min_conclusions = 1, max_conclusions = 6;
  std::size_t max_len = 3;
  ClauseKind kind = ClauseKind::Any;
  Rational q = Rational(1, 2);
  double p_premise_goal = 0.2;
  double p_conclusion_goal = 0.7;
};

inline ManipInstance random_manip(Rng& rng, const ManipParams& p) {
  const std::size_t np = uniform(rng, p.min_premises, p.max_premises);
  const std::size_t nc = uniform(rng, p.min_conclusions, p.max_conclusions);
  const Agenda agenda = random_agenda(rng, np, nc, p.max_len, p.kind);
  Profile profile = random_profile(rng, agenda, p.judges, p.q);
  const std::size_t manipulator = p.judges - 1;
  DesiredSet d = random_goals_from(rng, agenda, profile.judgment(manipulator).premise_values, p.p_premise_goal,
                                   p.p_conclusion_goal);
  return ManipInstance{std::move(profile), manipulator, std::move(d)};
}

// Always consistent: goals are read off a random hidden assignment.
inline jagg::BriberyInstance random_bribery(Rng& rng, std::size_t judges, std::size_t premises, std::size_t conclusions,
                                             std::size_t max_len, ClauseKind kind, int budget, jagg::BriberyMode mode,
                                             double p_premise_goal = 0.2, double p_conclusion_goal = 0.8) {
  const Agenda agenda = random_agenda(rng, premises, conclusions, max_len, kind);
  Profile profile = random_profile(rng, agenda, judges, Rational(1, 2));
  DesiredSet d = random_goals_from(rng, agenda, random_assignment(rng, premises), p_premise_goal, p_conclusion_goal);
  return jagg::BriberyInstance{std::move(profile), std::move(d), budget, mode};
}

inline jagg::SatProblem random_formula(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t max_len,
                                       ClauseKind kind, double p_freeze = 0.0) {
  jagg::SatProblem p;
  p.variables = vars;
  for (std::size_t c = 0; c < clauses; ++c) p.clauses.push_back(random_clause(rng, vars, max_len, kind));
  if (p_freeze > 0) {
    p.frozen.assign(vars, std::nullopt);
    for (auto& f : p.frozen)
      if (coin(rng, p_freeze)) f = coin(rng);
  }
  return p;
}

inline jagg::Graph random_graph(Rng& rng, std::size_t n, double p) {
  jagg::Graph g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, p)) g.edges.emplace_back(u, v);
  return g;
}

inline jagg::Graph complete_graph(std::size_t n) {
  jagg::Graph g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

inline jagg::Graph cycle_graph(std::size_t n) {
  jagg::Graph g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u) g.edges.emplace_back(u, (u + 1) % n);
  return g;
}

// Random d-regular simple graph by the pairing model with restarts.
inline jagg::Graph random_regular_graph(Rng& rng, std::size_t n, std::size_t d) {
  for (;;) {
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t t = 0; t < d; ++t) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    jagg::Graph g;
    g.n = n;
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < points.size(); i += 2) {
      const std::size_t u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v)) ok = false;
      else g.edges.emplace_back(u, v);
    }
    if (ok) return g;
  }
}

// Random 0/1 matrix whose columns all have a strict majority of zeros.
inline jagg::Matrix random_lobbying_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  jagg::Matrix m(rows, std::vector<int>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t ones = uniform(rng, 0, (rows - 1) / 2);
    std::vector<std::size_t> order(rows);
    for (std::size_t r = 0; r < rows; ++r) order[r] = r;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t t = 0; t < ones; ++t) m[order[t]][c] = 1;
  }
  return m;
}

}  // namespace testkit
