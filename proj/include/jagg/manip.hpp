#pragma once

#include <optional>
#include <string>

#include "jagg/model.hpp"
#include "jagg/satkit.hpp"

namespace jagg {

enum class Variant { Robustness, Possible, Necessary, Exact, Hamming };

enum class Decision { Yes, No, Undecided };

struct ManipVerdict {
  Decision decision = Decision::No;
  std::optional<JudgmentSet> witness;
  std::optional<std::size_t> gained_conclusion;
  std::optional<int> hd_delta;  // Hamming variant only
  std::string note;

  bool feasible() const { return decision == Decision::Yes; }
};

ManipVerdict solve_robustness(const ManipInstance& inst);
ManipVerdict solve_possible(const ManipInstance& inst);
ManipVerdict solve_necessary(const ManipInstance& inst, const SatOptions& options = {});
ManipVerdict solve_exact(const ManipInstance& inst, const SatOptions& options = {});

// Replays `witness` and tests the variant's defining condition.
bool certifies(const ManipInstance& inst, Variant variant, const JudgmentSet& witness);

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& name);
std::string to_string(Decision d);

}  // namespace jagg
