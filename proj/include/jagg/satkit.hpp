#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jagg/model.hpp"

namespace jagg {

enum class SatStrategy { Auto, Horn, TwoSat, Monotone, Dpll };

struct SatProblem {
  std::size_t variables = 0;
  std::vector<Clause> clauses;
  std::vector<std::optional<bool>> frozen;  // empty or one entry per variable
};

struct SatOptions {
  std::uint64_t node_budget = 1'000'000;
};

struct SatVerdict {
  bool satisfiable = false;
  Assignment model;
  SatStrategy strategy = SatStrategy::Auto;  // the path that produced the answer
};

// Frozen values are substituted first; the chosen path then works on the
// residual clauses. An explicit strategy that does not fit the residual
// throws UsageError; DPLL over budget throws ResourceError.
SatVerdict solve(const SatProblem& p, SatStrategy strategy = SatStrategy::Auto, const SatOptions& options = {});

SatVerdict consistency_check(const DesiredSet& desired, const Agenda& agenda);

std::string to_string(SatStrategy s);
std::optional<SatStrategy> parse_strategy(const std::string& name);

}  // namespace jagg
