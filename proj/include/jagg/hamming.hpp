#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jagg/graphopt.hpp"
#include "jagg/manip.hpp"
#include "jagg/model.hpp"

namespace jagg {

// First digit: manipulator's vote, second digit: truthful outcome.
enum class PremiseClass { P11, P10, P00, P01 };

struct HdAnalysis {
  std::vector<PremiseClass> classes;
  std::vector<std::size_t> decided;
  std::vector<std::size_t> useful;
  std::vector<std::size_t> good;  // conclusion indices
  std::vector<std::size_t> bad;
};

struct HdVerdict {
  Decision decision = Decision::No;
  std::vector<std::size_t> flips;       // premises whose outcome value changes
  std::optional<JudgmentSet> witness;   // over the caller's premises
  int delta = 0;
  std::string route;

  bool feasible() const { return decision == Decision::Yes; }
};

struct HdOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
};

std::size_t hd(const DesiredSet& desired, const Outcome& s);

// Needs a normalized instance (see normalize_desired_set).
HdAnalysis analyze(const ManipInstance& inst);
int hd_delta(const ManipInstance& inst, const HdAnalysis& analysis, const std::vector<std::size_t>& flips);

// Weighted graph over useful variables used by the polynomial path.
struct HdGraph {
  std::vector<std::size_t> vertices;  // premise index per graph vertex
  std::vector<int> weight;            // bad minus good occurrences
  GainGraph gain;
};
HdGraph build_hd_graph(const ManipInstance& inst, const HdAnalysis& analysis);

// Normalizes first when needed.
HdVerdict solve_hd(const ManipInstance& inst, const HdOptions& options = {});

std::string explain_hd(const ManipInstance& inst);
std::string to_string(PremiseClass c);

}  // namespace jagg
