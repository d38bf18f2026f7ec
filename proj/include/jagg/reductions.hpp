#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jagg/bribe.hpp"
#include "jagg/clausekit.hpp"
#include "jagg/model.hpp"
#include "jagg/satkit.hpp"
#include "jagg/structures.hpp"

namespace jagg {

// Repeated conclusions: separate named copies, or one fresh partner each.
enum class CopyMode { Duplicates, FreshVariables };

ManipInstance quota_lift(const ManipInstance& inst3, const Rational& q);
// Every variable replaced by its negation, with the quota adjusted so the
// acceptance threshold of x becomes the threshold of not-x.
ManipInstance mirror_negate(const ManipInstance& inst);
Rational mirrored_quota(const Rational& q, std::size_t n);

SatProblem gen_sat_coloring(const Graph& g, int k);
ManipInstance gen_necessary_mplus(const SatProblem& f, std::size_t k2);
ManipInstance gen_necessary_m2p_m3m(const SatProblem& f);
ManipInstance gen_necessary_mms(const SatProblem& f, int i, int j);
SatProblem gen_constant_gadget(int k1, int k2, bool target);  // variable 0 is the constant
PvcGraph gen_pvc_from_cubic_vc(const Graph& g, std::size_t k);
ManipInstance gen_hamming_from_pvc(const PvcGraph& g);
ManipInstance gen_hamming_monotone_clique(const Graph& g, std::size_t k, CopyMode mode = CopyMode::Duplicates);

struct HornCliqueOptions {
  std::optional<std::size_t> gadget_size;  // even; default derived from the instance
  CopyMode mode = CopyMode::Duplicates;
  bool horn_form = true;                   // false: keep the dual-Horn form
};
ManipInstance gen_hamming_horn_clique(const Graph& g, std::size_t k, const HornCliqueOptions& options = {});
std::size_t default_gadget_size(const Graph& g, std::size_t k);

BriberyInstance gen_bribery_from_hamming(const ManipInstance& inst);
BriberyInstance gen_bribery_from_lobbying(const Matrix& m, std::size_t k);

struct MicroCliqueOptions {
  bool three_judge = false;
  CopyMode mode = CopyMode::Duplicates;
  // Many-judge form only: one extra copy of each pair family, which offsets
  // the premise goals of the complete desired set.
  bool compensate_premise_goals = true;
};
BriberyInstance gen_microbribery_clique(const Graph& g, std::size_t s, const MicroCliqueOptions& options = {});
ManipInstance gen_necessary_special_quota(const SatProblem& f, std::size_t n);

// ---- verification harness -------------------------------------------------

struct ReductionInput {
  std::optional<Graph> graph;
  std::optional<PvcGraph> pvc;
  std::optional<Matrix> matrix;
  std::optional<SatProblem> formula;
  std::optional<ManipInstance> instance;
  std::size_t k = 0;
  std::size_t s = 0;
  int i = 3;
  int j = 2;
  std::size_t n = 3;
  std::optional<std::size_t> gadget_size;
  Rational q = Rational(1, 2);
  bool target = true;
  bool three_judge = false;
  bool compensate = true;
  CopyMode mode = CopyMode::Duplicates;
};

using GeneratedInstance = std::variant<ManipInstance, BriberyInstance, SatProblem, PvcGraph>;

struct ReductionReport {
  std::string name;
  bool source_yes = false;
  bool image_yes = false;
  bool checks_ok = true;  // clause class and generator-specific side conditions
  std::string detail;

  bool agree() const { return source_yes == image_yes && checks_ok; }
};

const std::vector<std::string>& reduction_names();
GeneratedInstance generate(const std::string& name, const ReductionInput& in);
ReductionReport verify_reduction(const std::string& name, const ReductionInput& in);

}  // namespace jagg
