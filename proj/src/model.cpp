#include "jagg/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "jagg/error.hpp"

namespace jagg {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw DataError("empty clause");
  for (std::size_t i = 0; i < literals_.size(); ++i)
    for (std::size_t j = i + 1; j < literals_.size(); ++j)
      if (literals_[i].var == literals_[j].var)
        throw DataError("variable repeated inside one clause");
}

std::size_t Clause::negatives() const {
  return static_cast<std::size_t>(
      std::count_if(literals_.begin(), literals_.end(), [](const Literal& l) { return l.negated; }));
}

bool Clause::holds(const Assignment& a) const {
  return std::any_of(literals_.begin(), literals_.end(), [&](const Literal& l) { return l.holds(a); });
}

bool Clause::mentions(std::size_t var) const {
  return std::any_of(literals_.begin(), literals_.end(), [&](const Literal& l) { return l.var == var; });
}

Agenda::Agenda(std::vector<std::string> premises, std::vector<Conclusion> conclusions)
    : premises_(std::move(premises)), conclusions_(std::move(conclusions)) {
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if (premises_[i].empty()) throw DataError("empty premise name");
    if (!premise_index_.emplace(premises_[i], i).second)
      throw DataError("duplicate name '" + premises_[i] + "'");
  }
  for (std::size_t i = 0; i < conclusions_.size(); ++i) {
    const auto& c = conclusions_[i];
    if (c.name.empty()) throw DataError("empty conclusion name");
    if (premise_index_.count(c.name) || !conclusion_index_.emplace(c.name, i).second)
      throw DataError("duplicate name '" + c.name + "'");
    for (const Literal& l : c.clause.literals())
      if (l.var >= premises_.size())
        throw DataError("conclusion '" + c.name + "' references an undeclared premise");
  }
}

std::optional<std::size_t> Agenda::find_premise(const std::string& name) const {
  auto it = premise_index_.find(name);
  if (it == premise_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Agenda::find_conclusion(const std::string& name) const {
  auto it = conclusion_index_.find(name);
  if (it == conclusion_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<bool> Agenda::evaluate(const Assignment& premises) const {
  std::vector<bool> values(conclusions_.size());
  for (std::size_t i = 0; i < conclusions_.size(); ++i) values[i] = conclusions_[i].clause.holds(premises);
  return values;
}

ThresholdPair thresholds(const Rational& q, std::size_t n) {
  if (q < 0 || q >= 1) throw DataError("quota must lie in [0,1), got " + to_string(q));
  if (n == 0) throw DataError("at least one judge is required");
  Rational qn = q * static_cast<std::int64_t>(n);
  ThresholdPair t;
  t.tau_pos = static_cast<int>(floor_of(qn + 1));
  t.tau_neg = static_cast<int>(ceil_of(Rational(static_cast<std::int64_t>(n)) - qn));
  return t;
}

Profile::Profile(Agenda agenda, std::vector<JudgmentSet> judgments, Rational quota)
    : agenda_(std::move(agenda)), judgments_(std::move(judgments)), quota_(quota) {
  if (judgments_.size() < 2) throw DataError("a profile needs at least two judges");
  if (quota_ < 0 || quota_ >= 1) throw DataError("quota must lie in [0,1), got " + to_string(quota_));
  for (const auto& j : judgments_)
    if (j.premise_values.size() != agenda_.premise_count())
      throw DataError("judgment set size does not match the agenda");
}

int Profile::support(std::size_t var) const {
  int s = 0;
  for (const auto& j : judgments_) s += j.premise_values[var] ? 1 : 0;
  return s;
}

int Profile::support_without(std::size_t var, std::size_t judge) const {
  return support(var) - (judgments_.at(judge).premise_values[var] ? 1 : 0);
}

Profile Profile::with_judgment(std::size_t judge, JudgmentSet replacement) const {
  if (replacement.premise_values.size() != agenda_.premise_count())
    throw DataError("replacement judgment set size does not match the agenda");
  std::vector<JudgmentSet> js = judgments_;
  js.at(judge) = std::move(replacement);
  return Profile(agenda_, std::move(js), quota_);
}

Outcome complete_outcome(const Agenda& agenda, Assignment premises) {
  Outcome out;
  out.conclusion_values = agenda.evaluate(premises);
  out.premise_values = std::move(premises);
  return out;
}

Outcome outcome(const Profile& profile) {
  const int tau = profile.thresholds().tau_pos;
  Assignment accepted(profile.agenda().premise_count());
  for (std::size_t x = 0; x < accepted.size(); ++x) accepted[x] = profile.support(x) >= tau;
  return complete_outcome(profile.agenda(), std::move(accepted));
}

Outcome outcome_with_replacement(const Profile& profile, std::size_t judge,
                                 const JudgmentSet& replacement) {
  return outcome(profile.with_judgment(judge, replacement));
}

std::vector<std::size_t> decision_variables(const Profile& profile, std::size_t judge) {
  if (judge >= profile.judge_count()) throw UsageError("judge index out of range");
  const int tau = profile.thresholds().tau_pos;
  std::vector<std::size_t> decided;
  for (std::size_t x = 0; x < profile.agenda().premise_count(); ++x)
    if (profile.support_without(x, judge) == tau - 1) decided.push_back(x);
  return decided;
}

DesiredSet DesiredSet::empty_for(const Agenda& agenda) {
  DesiredSet d;
  d.premise_goals.assign(agenda.premise_count(), std::nullopt);
  d.conclusion_goals.assign(agenda.conclusion_count(), std::nullopt);
  return d;
}

std::size_t DesiredSet::goal_count() const {
  auto count = [](const auto& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& g) { return g.has_value(); }));
  };
  return count(premise_goals) + count(conclusion_goals);
}

bool DesiredSet::has_premise_goals() const {
  return std::any_of(premise_goals.begin(), premise_goals.end(), [](const auto& g) { return g.has_value(); });
}

bool DesiredSet::total_over_conclusions() const {
  return std::all_of(conclusion_goals.begin(), conclusion_goals.end(), [](const auto& g) { return g.has_value(); });
}

bool DesiredSet::complete() const {
  return total_over_conclusions() &&
         std::all_of(premise_goals.begin(), premise_goals.end(), [](const auto& g) { return g.has_value(); });
}

std::size_t DesiredSet::unmet(const Outcome& s) const {
  std::size_t missing = 0;
  for (std::size_t x = 0; x < premise_goals.size(); ++x)
    if (premise_goals[x] && *premise_goals[x] != s.premise_values[x]) ++missing;
  for (std::size_t c = 0; c < conclusion_goals.size(); ++c)
    if (conclusion_goals[c] && *conclusion_goals[c] != s.conclusion_values[c]) ++missing;
  return missing;
}

bool DesiredSet::contained_in(const Agenda& agenda, const JudgmentSet& judgment) const {
  return unmet(complete_outcome(agenda, judgment.premise_values)) == 0;
}

void check_manip_shape(const ManipInstance& inst) {
  const Agenda& agenda = inst.profile.agenda();
  if (inst.manipulator >= inst.profile.judge_count()) throw DataError("manipulator index out of range");
  if (inst.desired.premise_goals.size() != agenda.premise_count() ||
      inst.desired.conclusion_goals.size() != agenda.conclusion_count())
    throw DataError("desired set does not match the agenda");
  if (!inst.desired.contained_in(agenda, inst.truthful()))
    throw DataError("desired set is not part of the manipulator's judgment set");
}

bool is_normalized(const DesiredSet& desired) {
  return !desired.has_premise_goals() && desired.total_over_conclusions();
}

namespace {

class NamePool {
 public:
  explicit NamePool(const Agenda& agenda) {
    for (const auto& p : agenda.premises()) taken_.insert(p);
    for (const auto& c : agenda.conclusions()) taken_.insert(c.name);
  }

  std::string take(const std::string& stem) {
    std::string name = stem;
    for (int suffix = 2; taken_.count(name); ++suffix) name = stem + "_" + std::to_string(suffix);
    taken_.insert(name);
    return name;
  }

 private:
  std::unordered_set<std::string> taken_;
};

}  // namespace

std::string fresh_name(const Agenda& agenda, const std::string& stem) { return NamePool(agenda).take(stem); }

ManipInstance normalize_desired_set(const ManipInstance& inst) {
  check_manip_shape(inst);
  if (is_normalized(inst.desired)) return inst;

  const Agenda& agenda = inst.profile.agenda();
  NamePool names(agenda);

  std::vector<std::string> premises = agenda.premises();
  std::vector<Conclusion> conclusions;
  std::vector<std::optional<bool>> goals;
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c) {
    if (!inst.desired.conclusion_goals[c]) continue;
    conclusions.push_back(agenda.conclusions()[c]);
    goals.push_back(inst.desired.conclusion_goals[c]);
  }

  // A partner rejected by every judge is a constant only if the manipulator
  // cannot lift it to the threshold alone; with tau_pos = 1 the unit
  // conclusion (x) is used instead.
  const bool use_partner = inst.profile.thresholds().tau_pos >= 2;
  std::size_t partners = 0;
  for (std::size_t x = 0; x < agenda.premise_count(); ++x) {
    if (!inst.desired.premise_goals[x]) continue;
    std::vector<Literal> lits{{x, false}};
    if (use_partner) {
      premises.push_back(names.take(agenda.premises()[x] + "'"));
      lits.push_back({premises.size() - 1, false});
      ++partners;
    }
    conclusions.push_back({names.take(agenda.premises()[x] + "_goal"), Clause(std::move(lits))});
    goals.push_back(inst.desired.premise_goals[x]);
  }

  std::vector<JudgmentSet> judgments = inst.profile.judgments();
  for (auto& j : judgments) j.premise_values.resize(j.premise_values.size() + partners, false);

  Agenda next(std::move(premises), std::move(conclusions));
  DesiredSet desired = DesiredSet::empty_for(next);
  desired.conclusion_goals = std::move(goals);
  return ManipInstance{Profile(std::move(next), std::move(judgments), inst.profile.quota()), inst.manipulator,
                       std::move(desired)};
}

}  // namespace jagg
