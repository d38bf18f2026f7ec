#include "jagg/clausekit.hpp"

#include <algorithm>

#include "jagg/error.hpp"

namespace jagg {

ClauseShape classify_clause(const Clause& c) {
  return {static_cast<int>(c.size()), static_cast<int>(c.negatives())};
}

ClauseShape mirror(ClauseShape s) { return {s.length, s.length - s.negatives}; }

std::string to_string(ClauseShape s) {
  return "(" + std::to_string(s.length) + "," + std::to_string(s.negatives) + ")";
}

CtSet expand(Preset preset, int bound) {
  if (bound < 1) throw UsageError("preset bound must be at least 1");
  CtSet cs;
  for (int i = 1; i <= bound; ++i) {
    switch (preset) {
      case Preset::PositiveMonotone:
        cs.insert({i, 0});
        break;
      case Preset::Monotone:
        cs.insert({i, 0});
        cs.insert({i, i});
        break;
      case Preset::Horn:
        cs.insert({i, i});
        cs.insert({i, i - 1});
        break;
      case Preset::LengthAtMost:
        for (int j = 0; j <= i; ++j) cs.insert({i, j});
        break;
    }
  }
  return cs;
}

CtSet mirror(const CtSet& cs) {
  CtSet out;
  for (ClauseShape s : cs) out.insert(mirror(s));
  return out;
}

CtSet shapes_of(const std::vector<Clause>& clauses) {
  CtSet cs;
  for (const Clause& c : clauses) cs.insert(classify_clause(c));
  return cs;
}

FamilyReport family_membership(const Agenda& agenda) {
  FamilyReport r;
  for (const auto& c : agenda.conclusions()) r.shapes.insert(classify_clause(c.clause));
  auto all = [&](auto pred) { return std::all_of(r.shapes.begin(), r.shapes.end(), pred); };
  r.positive_monotone = all([](ClauseShape s) { return s.negatives == 0; });
  r.monotone = all([](ClauseShape s) { return s.negatives == 0 || s.negatives == s.length; });
  r.horn = all([](ClauseShape s) { return s.negatives >= s.length - 1; });
  for (ClauseShape s : r.shapes) r.max_length = std::max(r.max_length, s.length);
  r.length_at_most_2 = r.max_length <= 2;
  return r;
}

std::optional<SolverRoute> tractable_route(const CtSet& cs) {
  auto all = [&](auto pred) { return std::all_of(cs.begin(), cs.end(), pred); };
  if (all([](ClauseShape s) { return s.negatives >= 1; })) return SolverRoute::ZeroValid;
  if (all([](ClauseShape s) { return s.negatives <= s.length - 1; })) return SolverRoute::OneValid;
  if (all([](ClauseShape s) { return s.negatives >= s.length - 1; })) return SolverRoute::Horn;
  if (all([](ClauseShape s) { return s.negatives <= 1; })) return SolverRoute::DualHorn;
  if (all([](ClauseShape s) { return s.length <= 2; })) return SolverRoute::TwoSat;
  return std::nullopt;
}

DichotomyVerdict dichotomy(const CtSet& cs) {
  DichotomyVerdict v;
  const bool pos2 = cs.count({2, 0}) > 0;
  const bool neg2 = cs.count({2, 2}) > 0;
  if (pos2 && neg2) {
    for (ClauseShape s : cs) {
      if (s.length >= 3 && s.negatives > 0 && s.negatives < s.length) {
        v.complexity = Complexity::NpHard;
        v.condition = 1;
        v.witness = {{2, 0}, {2, 2}, s};
        return v;
      }
    }
  }
  for (ClauseShape p : cs) {
    if (p.negatives != 0 || p.length < 2) continue;
    for (ClauseShape m : cs) {
      if (m.negatives != m.length || m.length < 2) continue;
      if (std::max(p.length, m.length) >= 3) {
        v.complexity = Complexity::NpHard;
        v.condition = 2;
        v.witness = {p, m};
        return v;
      }
    }
  }
  v.route = tractable_route(cs);
  return v;
}

std::string to_string(SolverRoute route) {
  switch (route) {
    case SolverRoute::ZeroValid: return "zero-valid";
    case SolverRoute::OneValid: return "one-valid";
    case SolverRoute::Horn: return "horn";
    case SolverRoute::DualHorn: return "dual-horn";
    case SolverRoute::TwoSat: return "two-sat";
  }
  return "?";
}

std::string describe(const DichotomyVerdict& v) {
  std::string out;
  if (v.complexity == Complexity::NpHard) {
    out = "np-hard (condition " + std::to_string(v.condition) + ", shapes";
    for (ClauseShape s : v.witness) out += " " + to_string(s);
    return out + ")";
  }
  out = "polytime";
  out += v.route ? " (route " + to_string(*v.route) + ")" : " (no solver route covers this set)";
  return out;
}

}  // namespace jagg
