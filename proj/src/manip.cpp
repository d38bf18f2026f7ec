#include "jagg/manip.hpp"

#include <algorithm>

#include "jagg/clausekit.hpp"
#include "jagg/error.hpp"

namespace jagg {
namespace {

struct Context {
  const ManipInstance& inst;
  Outcome truthful;
  std::vector<bool> decided;

  explicit Context(const ManipInstance& i) : inst(i), truthful(outcome(i.profile)) {
    check_manip_shape(i);
    decided.assign(i.profile.agenda().premise_count(), false);
    for (std::size_t x : decision_variables(i.profile, i.manipulator)) decided[x] = true;
  }

  const Agenda& agenda() const { return inst.profile.agenda(); }
  bool met(std::size_t c) const { return *inst.desired.conclusion_goals[c] == truthful.conclusion_values[c]; }
};

// Premise changes that give `clause` the value `target` when only decision
// variables may move; nullopt when no such change exists.
std::optional<std::vector<Literal>> attain(const Context& ctx, const Clause& clause, bool target) {
  const Assignment& now = ctx.truthful.premise_values;
  std::vector<Literal> changes;
  if (target) {
    for (Literal l : clause.literals()) {
      if (l.holds(now)) return changes;
      if (ctx.decided[l.var]) {
        changes.push_back(l);
        return changes;
      }
    }
    return std::nullopt;
  }
  for (Literal l : clause.literals()) {
    if (!l.holds(now)) continue;
    if (!ctx.decided[l.var]) return std::nullopt;
    changes.push_back(~l);
  }
  return changes;
}

JudgmentSet with_changes(const ManipInstance& inst, const std::vector<Literal>& changes) {
  JudgmentSet j = inst.truthful();
  for (Literal l : changes) j.premise_values[l.var] = !l.negated;
  return j;
}

ManipVerdict yes(JudgmentSet witness, std::optional<std::size_t> gained = std::nullopt) {
  ManipVerdict v;
  v.decision = Decision::Yes;
  v.witness = std::move(witness);
  v.gained_conclusion = gained;
  return v;
}

ManipVerdict scan(const ManipInstance& inst, bool allow_losses) {
  Context ctx(inst);
  const DesiredSet& d = inst.desired;
  if (allow_losses) {
    for (std::size_t x = 0; x < d.premise_goals.size(); ++x) {
      if (!d.premise_goals[x] || !ctx.decided[x]) continue;
      JudgmentSet j = inst.truthful();
      j.premise_values[x] = !j.premise_values[x];
      return yes(std::move(j));
    }
  }
  for (std::size_t c = 0; c < d.conclusion_goals.size(); ++c) {
    if (!d.conclusion_goals[c]) continue;
    const bool goal = *d.conclusion_goals[c];
    const bool met = ctx.met(c);
    if (met && !allow_losses) continue;
    if (auto changes = attain(ctx, ctx.agenda().conclusions()[c].clause, met ? !goal : goal))
      return yes(with_changes(inst, *changes), met ? std::nullopt : std::optional<std::size_t>(c));
  }
  return {};
}

std::string fallback_note(const Agenda& agenda, const std::vector<std::size_t>& members) {
  std::vector<Clause> clauses;
  for (std::size_t c : members) clauses.push_back(agenda.conclusions()[c].clause);
  DichotomyVerdict dv = dichotomy(shapes_of(clauses));
  if (dv.complexity == Complexity::NpHard) return "dpll fallback: clause class is " + describe(dv);
  return "dpll fallback: clause class is polytime, but frozen variables left residual clauses outside every polynomial route";
}

// Tries to satisfy every goal in `members` while only `free` variables move.
// Returns the witness, nullopt when impossible; throws ResourceError.
std::optional<JudgmentSet> realize(const Context& ctx, const std::vector<std::size_t>& members,
                                   const std::vector<bool>& free, const SatOptions& options, std::string& note) {
  const Agenda& agenda = ctx.agenda();
  SatProblem p;
  p.variables = agenda.premise_count();
  p.frozen.assign(p.variables, std::nullopt);
  for (std::size_t x = 0; x < p.variables; ++x)
    if (!free[x]) p.frozen[x] = ctx.truthful.premise_values[x];

  std::vector<std::optional<bool>> forced(p.variables);
  for (std::size_t c : members) {
    const Clause& clause = agenda.conclusions()[c].clause;
    if (*ctx.inst.desired.conclusion_goals[c]) {
      p.clauses.push_back(clause);
      continue;
    }
    for (Literal l : clause.literals()) {
      const bool value = l.negated;
      if (forced[l.var] && *forced[l.var] != value) return std::nullopt;
      if (p.frozen[l.var] && *p.frozen[l.var] != value) return std::nullopt;
      forced[l.var] = value;
    }
  }
  for (std::size_t x = 0; x < p.variables; ++x)
    if (forced[x]) p.frozen[x] = forced[x];

  SatVerdict sat = solve(p, SatStrategy::Auto, options);
  if (sat.strategy == SatStrategy::Dpll && note.empty()) note = fallback_note(agenda, members);
  if (!sat.satisfiable) return std::nullopt;
  JudgmentSet j = ctx.inst.truthful();
  for (std::size_t x = 0; x < p.variables; ++x)
    if (free[x]) j.premise_values[x] = sat.model[x];
  return j;
}

std::vector<bool> free_decision_variables(const Context& ctx) {
  std::vector<bool> free = ctx.decided;
  for (std::size_t x = 0; x < free.size(); ++x)
    if (ctx.inst.desired.premise_goals[x]) free[x] = false;
  return free;
}

}  // namespace

ManipVerdict solve_robustness(const ManipInstance& inst) { return scan(inst, true); }

ManipVerdict solve_possible(const ManipInstance& inst) { return scan(inst, false); }

ManipVerdict solve_necessary(const ManipInstance& inst, const SatOptions& options) {
  Context ctx(inst);
  const DesiredSet& d = inst.desired;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < d.conclusion_goals.size(); ++c)
    if (d.conclusion_goals[c] && ctx.met(c)) kept.push_back(c);
  const std::vector<bool> free = free_decision_variables(ctx);

  ManipVerdict verdict;
  bool undecided = false;
  for (std::size_t c = 0; c < d.conclusion_goals.size(); ++c) {
    if (!d.conclusion_goals[c] || ctx.met(c)) continue;
    std::vector<std::size_t> members = kept;
    members.push_back(c);
    try {
      if (auto j = realize(ctx, members, free, options, verdict.note)) {
        verdict.decision = Decision::Yes;
        verdict.witness = std::move(j);
        verdict.gained_conclusion = c;
        return verdict;
      }
    } catch (const ResourceError& e) {
      undecided = true;
      verdict.note = std::string("undecided (budget): ") + e.what();
    }
  }
  verdict.decision = undecided ? Decision::Undecided : Decision::No;
  return verdict;
}

ManipVerdict solve_exact(const ManipInstance& inst, const SatOptions& options) {
  Context ctx(inst);
  const DesiredSet& d = inst.desired;
  for (std::size_t x = 0; x < d.premise_goals.size(); ++x)
    if (d.premise_goals[x] && *d.premise_goals[x] != ctx.truthful.premise_values[x]) return {};

  std::vector<std::size_t> members;
  bool all_met = true;
  for (std::size_t c = 0; c < d.conclusion_goals.size(); ++c) {
    if (!d.conclusion_goals[c]) continue;
    members.push_back(c);
    all_met = all_met && ctx.met(c);
  }
  if (all_met) return yes(inst.truthful());

  ManipVerdict verdict;
  try {
    if (auto j = realize(ctx, members, free_decision_variables(ctx), options, verdict.note)) {
      verdict.decision = Decision::Yes;
      verdict.witness = std::move(j);
    }
  } catch (const ResourceError& e) {
    verdict.decision = Decision::Undecided;
    verdict.note = std::string("undecided (budget): ") + e.what();
  }
  return verdict;
}

bool certifies(const ManipInstance& inst, Variant variant, const JudgmentSet& witness) {
  const Agenda& agenda = inst.profile.agenda();
  const DesiredSet& d = inst.desired;
  Outcome before = outcome(inst.profile);
  Outcome after = outcome_with_replacement(inst.profile, inst.manipulator, witness);

  std::size_t gained = 0, lost = 0, missing = 0;
  auto tally = [&](const std::optional<bool>& goal, bool was, bool now) {
    if (!goal) return;
    bool had = *goal == was, has = *goal == now;
    gained += (!had && has) ? 1 : 0;
    lost += (had && !has) ? 1 : 0;
    missing += has ? 0 : 1;
  };
  for (std::size_t x = 0; x < agenda.premise_count(); ++x)
    tally(d.premise_goals[x], before.premise_values[x], after.premise_values[x]);
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    tally(d.conclusion_goals[c], before.conclusion_values[c], after.conclusion_values[c]);

  switch (variant) {
    case Variant::Robustness: return gained + lost > 0;
    case Variant::Possible: return gained > 0;
    case Variant::Necessary: return gained > 0 && lost == 0;
    case Variant::Exact: return missing == 0;
    case Variant::Hamming: return d.unmet(after) < d.unmet(before);
  }
  return false;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Robustness: return "robustness";
    case Variant::Possible: return "possible";
    case Variant::Necessary: return "necessary";
    case Variant::Exact: return "exact";
    case Variant::Hamming: return "hamming";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
  for (Variant v : {Variant::Robustness, Variant::Possible, Variant::Necessary, Variant::Exact, Variant::Hamming})
    if (to_string(v) == name) return v;
  return std::nullopt;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "feasible";
    case Decision::No: return "infeasible";
    case Decision::Undecided: return "undecided";
  }
  return "?";
}

}  // namespace jagg
