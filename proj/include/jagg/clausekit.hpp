#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jagg/model.hpp"

namespace jagg {

// (length, number of negative literals)
struct ClauseShape {
  int length = 1;
  int negatives = 0;

  auto operator<=>(const ClauseShape&) const = default;
};

ClauseShape classify_clause(const Clause& c);
ClauseShape mirror(ClauseShape s);
std::string to_string(ClauseShape s);

using CtSet = std::set<ClauseShape>;

enum class Preset { PositiveMonotone, Monotone, Horn, LengthAtMost };

CtSet expand(Preset preset, int bound);
CtSet mirror(const CtSet& cs);
CtSet shapes_of(const std::vector<Clause>& clauses);

struct FamilyReport {
  bool positive_monotone = false;
  bool monotone = false;
  bool horn = false;
  bool length_at_most_2 = false;
  int max_length = 0;
  CtSet shapes;
};

FamilyReport family_membership(const Agenda& agenda);

enum class Complexity { PolyTime, NpHard };

// Polynomial algorithm that covers every formula over a shape set.
enum class SolverRoute { ZeroValid, OneValid, Horn, DualHorn, TwoSat };

struct DichotomyVerdict {
  Complexity complexity = Complexity::PolyTime;
  int condition = 0;                  // 1 or 2 when NP-hard
  std::vector<ClauseShape> witness;   // shapes that realize the condition
  std::optional<SolverRoute> route;   // nullopt: no route covers the set
};

DichotomyVerdict dichotomy(const CtSet& cs);
std::optional<SolverRoute> tractable_route(const CtSet& cs);
std::string to_string(SolverRoute route);
std::string describe(const DichotomyVerdict& v);

}  // namespace jagg
