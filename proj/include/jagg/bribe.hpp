#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jagg/manip.hpp"
#include "jagg/model.hpp"

namespace jagg {

enum class BriberyMode { Bribery, Microbribery };

struct BriberyInstance {
  Profile profile;
  DesiredSet desired;
  int budget = 0;
  BriberyMode mode = BriberyMode::Bribery;
};

// Minimum number of entry changes that move a premise's outcome to 1 / to 0.
struct FlipCost {
  int to_one = 0;
  int to_zero = 0;
};

std::vector<FlipCost> flip_costs(const Profile& profile);

struct EntryChange {
  std::size_t judge = 0;
  std::size_t premise = 0;
  bool value = false;

  friend bool operator==(const EntryChange&, const EntryChange&) = default;
};

struct BribeVerdict {
  Decision decision = Decision::No;
  std::vector<std::size_t> bribed_judges;  // bribery mode
  std::vector<EntryChange> changes;
  int delta = 0;
  std::string route;

  bool feasible() const { return decision == Decision::Yes; }
};

struct BribeOptions {
  std::uint64_t node_budget = std::uint64_t{1} << 22;
  std::size_t prop2_max_judges = 5;
};

BribeVerdict solve_bribery_fixed_k(const BriberyInstance& inst);
BribeVerdict solve_bribery_general(const BriberyInstance& inst, const BribeOptions& options = {});
BribeVerdict solve_microbribery(const BriberyInstance& inst, const BribeOptions& options = {});
// Picks the fixed-budget algorithm whenever the clause class allows it.
BribeVerdict solve_bribery(const BriberyInstance& inst, const BribeOptions& options = {});

Profile apply_changes(const Profile& profile, const std::vector<EntryChange>& changes);
// HD after the changes minus HD before.
int replay_delta(const BriberyInstance& inst, const std::vector<EntryChange>& changes);

// Premise goals become unit conclusions; conclusions without a goal are dropped.
BriberyInstance normalize_for_bribery(const BriberyInstance& inst);
bool fits_fixed_k(const Agenda& agenda);
void check_bribery_instance(const BriberyInstance& inst);

std::string to_string(BriberyMode m);

}  // namespace jagg
