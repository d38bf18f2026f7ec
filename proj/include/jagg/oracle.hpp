#pragma once

// Brute-force reference answers. Only the model types are shared with the
// production solvers; every search below is written out independently.

#include <cstdint>
#include <optional>
#include <vector>

#include "jagg/bribe.hpp"
#include "jagg/manip.hpp"
#include "jagg/model.hpp"
#include "jagg/satkit.hpp"
#include "jagg/structures.hpp"

namespace jagg::oracle {

struct ManipAnswer {
  bool feasible = false;
  std::optional<JudgmentSet> witness;
  int delta = 0;  // Hamming: distance change of the witness
};

// Enumerates every assignment of the decision variables, smallest first.
// For the Hamming variant above `bound` decision variables, variables that
// share no goal with one another are optimized separately per assignment of
// the rest.
ManipAnswer manipulation(const ManipInstance& inst, Variant variant, std::size_t bound = 20);

struct BribeAnswer {
  bool feasible = false;
  int delta = 0;
  std::vector<std::size_t> judges;       // bribery
  Assignment target;                     // premise outcome reached
  std::vector<EntryChange> entries;      // entry-level microbribery
};

BribeAnswer bribery(const BriberyInstance& inst, std::uint64_t bound = std::uint64_t{1} << 24);
// Premise subsets whose summed flip cost fits the budget.
BribeAnswer microbribery(const BriberyInstance& inst, std::size_t bound = 22);
// Every set of at most k entry changes; needs judges x premises <= max_entries.
BribeAnswer microbribery_entries(const BriberyInstance& inst, std::size_t max_entries = 12);

struct SatAnswer {
  bool satisfiable = false;
  Assignment model;
};
SatAnswer sat(const SatProblem& p, std::size_t bound = 22);

bool colorable(const Graph& g, int k);
bool has_vertex_cover(const Graph& g, std::size_t k);
bool has_clique(const Graph& g, std::size_t k);
bool pvc_yes(const PvcGraph& g);
bool lobbying_yes(const Matrix& m, std::size_t k);

}  // namespace jagg::oracle
