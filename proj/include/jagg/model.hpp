#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jagg/rational.hpp"

namespace jagg {

using Assignment = std::vector<bool>;

struct Literal {
  std::size_t var = 0;
  bool negated = false;

  bool holds(const Assignment& a) const { return a[var] != negated; }
  Literal operator~() const { return {var, !negated}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

// A non-empty disjunction in which every variable occurs at most once.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  std::size_t negatives() const;
  bool holds(const Assignment& a) const;
  bool mentions(std::size_t var) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

struct Conclusion {
  std::string name;
  Clause clause;

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

class Agenda {
 public:
  Agenda(std::vector<std::string> premises, std::vector<Conclusion> conclusions);

  const std::vector<std::string>& premises() const { return premises_; }
  const std::vector<Conclusion>& conclusions() const { return conclusions_; }
  std::size_t premise_count() const { return premises_.size(); }
  std::size_t conclusion_count() const { return conclusions_.size(); }

  std::optional<std::size_t> find_premise(const std::string& name) const;
  std::optional<std::size_t> find_conclusion(const std::string& name) const;

  std::vector<bool> evaluate(const Assignment& premises) const;

  friend bool operator==(const Agenda& a, const Agenda& b) {
    return a.premises_ == b.premises_ && a.conclusions_ == b.conclusions_;
  }

 private:
  std::vector<std::string> premises_;
  std::vector<Conclusion> conclusions_;
  std::unordered_map<std::string, std::size_t> premise_index_;
  std::unordered_map<std::string, std::size_t> conclusion_index_;
};

struct JudgmentSet {
  Assignment premise_values;

  friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;
};

struct ThresholdPair {
  int tau_pos = 0;
  int tau_neg = 0;

  friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
};

ThresholdPair thresholds(const Rational& q, std::size_t n);

class Profile {
 public:
  Profile(Agenda agenda, std::vector<JudgmentSet> judgments, Rational quota);

  const Agenda& agenda() const { return agenda_; }
  const std::vector<JudgmentSet>& judgments() const { return judgments_; }
  const JudgmentSet& judgment(std::size_t i) const { return judgments_.at(i); }
  const Rational& quota() const { return quota_; }
  std::size_t judge_count() const { return judgments_.size(); }
  ThresholdPair thresholds() const { return jagg::thresholds(quota_, judge_count()); }

  int support(std::size_t var) const;
  int support_without(std::size_t var, std::size_t judge) const;

  Profile with_judgment(std::size_t judge, JudgmentSet replacement) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Agenda agenda_;
  std::vector<JudgmentSet> judgments_;
  Rational quota_;
};

struct Outcome {
  Assignment premise_values;
  std::vector<bool> conclusion_values;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

Outcome complete_outcome(const Agenda& agenda, Assignment premises);
Outcome outcome(const Profile& profile);
Outcome outcome_with_replacement(const Profile& profile, std::size_t judge,
                                 const JudgmentSet& replacement);
std::vector<std::size_t> decision_variables(const Profile& profile, std::size_t judge);

// Partial goals over premises and conclusions; std::nullopt means "no goal".
struct DesiredSet {
  std::vector<std::optional<bool>> premise_goals;
  std::vector<std::optional<bool>> conclusion_goals;

  static DesiredSet empty_for(const Agenda& agenda);

  std::size_t goal_count() const;
  bool has_premise_goals() const;
  bool total_over_conclusions() const;
  bool complete() const;
  std::size_t unmet(const Outcome& s) const;
  bool contained_in(const Agenda& agenda, const JudgmentSet& judgment) const;

  friend bool operator==(const DesiredSet&, const DesiredSet&) = default;
};

struct ManipInstance {
  Profile profile;
  std::size_t manipulator = 0;
  DesiredSet desired;

  const JudgmentSet& truthful() const { return profile.judgment(manipulator); }
};

// Structural checks shared by every manipulation solver: index range,
// goal vector sizes, and the requirement that the goals are part of the
// manipulator's own judgment set. Consistency needs satkit and is checked
// separately.
void check_manip_shape(const ManipInstance& inst);

// Desired premises become conclusions and goal-less conclusions disappear.
ManipInstance normalize_desired_set(const ManipInstance& inst);
bool is_normalized(const DesiredSet& desired);

// Fresh name derived from `stem` that does not collide with any name in use.
std::string fresh_name(const Agenda& agenda, const std::string& stem);

}  // namespace jagg
