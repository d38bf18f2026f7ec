#include "jagg/bribe.hpp"

#include <algorithm>
#include <stdexcept>

#include "jagg/error.hpp"
#include "jagg/graphopt.hpp"
#include "jagg/satkit.hpp"

namespace jagg {
namespace {

// Next k-subset of {0..n-1} in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Premises that some goal depends on.
std::vector<std::size_t> relevant_premises(const Agenda& agenda, const DesiredSet& desired) {
  std::vector<bool> hit(agenda.premise_count(), false);
  for (std::size_t x = 0; x < hit.size(); ++x)
    if (desired.premise_goals[x]) hit[x] = true;
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    if (desired.conclusion_goals[c])
      for (Literal l : agenda.conclusions()[c].clause.literals()) hit[l.var] = true;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < hit.size(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

std::size_t distance(const BriberyInstance& inst, const Assignment& premises) {
  return inst.desired.unmet(complete_outcome(inst.profile.agenda(), premises));
}

// Bribed judges take the target value on every premise whose outcome moves.
std::vector<EntryChange> plan_for(const Profile& profile, const std::vector<std::size_t>& bribed, const Assignment& base,
                                  const Assignment& target) {
  std::vector<EntryChange> changes;
  for (std::size_t j : bribed)
    for (std::size_t x = 0; x < base.size(); ++x)
      if (base[x] != target[x] && profile.judgment(j).premise_values[x] != target[x])
        changes.push_back({j, x, target[x]});
  return changes;
}

BribeVerdict finish(const BriberyInstance& inst, BribeVerdict v) {
  v.delta = replay_delta(inst, v.changes);
  if (v.delta >= 0) throw std::logic_error("bribe plan does not lower the distance");
  v.decision = Decision::Yes;
  return v;
}

struct Subproblem {
  std::vector<std::size_t> vertices;
  std::vector<int> cost;  // may be negative
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Maximizes |E(S)| - cost(S). Vertices of negative effective cost belong to
// some optimal S, so they are absorbed first and the rest goes to the
// max-gain subgraph routine, which needs nonnegative costs.
std::pair<int, std::vector<std::size_t>> best_subset(const Subproblem& p) {
  const std::size_t n = p.vertices.size();
  std::vector<bool> in(n, false);
  std::vector<int> eff = p.cost;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i] || eff[i] >= 0) continue;
      in[i] = changed = true;
      for (auto [u, v] : p.edges) {
        if (u == i && !in[v]) --eff[v];
        if (v == i && !in[u]) --eff[u];
      }
    }
  }
  std::vector<std::size_t> rest;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) {
      slot[i] = rest.size();
      rest.push_back(i);
    }
  GainGraph g;
  for (std::size_t i : rest) g.cost.push_back(Rational(eff[i]));
  for (auto [u, v] : p.edges)
    if (!in[u] && !in[v]) g.edges.push_back({slot[u], slot[v], 1});
  GainResult extra = max_gain_subgraph(g);
  if (extra.best > 0)
    for (std::size_t i : extra.subset) in[rest[i]] = true;

  int gain = 0;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) {
      gain -= p.cost[i];
      chosen.push_back(p.vertices[i]);
    }
  for (auto [u, v] : p.edges)
    if (in[u] && in[v]) ++gain;
  return {gain, chosen};
}

// Best target outcome for one bribed set; `norm` is normalized. Variables
// whose clauses are all wanted true go to 1, then the better of "switch some
// 0s on" and "switch some 1s off" among the remaining changeable variables.
// Mixing the two sides never helps when the desired set is consistent.
Assignment fixed_k_round(const BriberyInstance& norm, const std::vector<bool>& changeable,
                                         const Assignment& base) {
  const Agenda& agenda = norm.profile.agenda();
  const auto& concl = agenda.conclusions();
  const std::size_t np = agenda.premise_count();
  auto goal = [&](std::size_t c) { return *norm.desired.conclusion_goals[c]; };

  std::vector<std::vector<std::size_t>> occurs(np);
  std::vector<bool> desired_zero(np, false);
  for (std::size_t c = 0; c < concl.size(); ++c)
    for (Literal l : concl[c].clause.literals()) {
      occurs[l.var].push_back(c);
      if (!goal(c)) desired_zero[l.var] = true;
    }

  Assignment cur = base;
  for (std::size_t x = 0; x < np; ++x) {
    if (!changeable[x] || desired_zero[x] || cur[x] || occurs[x].empty()) continue;
    cur[x] = true;
  }

  auto partner = [&](std::size_t c, std::size_t x) -> std::optional<std::size_t> {
    for (Literal l : concl[c].clause.literals())
      if (l.var != x) return l.var;
    return std::nullopt;
  };

  auto build = [&](bool side) {
    Subproblem p;
    std::vector<std::size_t> slot(np, SIZE_MAX);
    for (std::size_t x = 0; x < np; ++x)
      if (changeable[x] && desired_zero[x] && cur[x] == side) {
        slot[x] = p.vertices.size();
        p.vertices.push_back(x);
        p.cost.push_back(0);
      }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const std::size_t x = p.vertices[i];
      for (std::size_t c : occurs[x]) {
        auto y = partner(c, x);
        if (y && slot[*y] != SIZE_MAX) {
          if (goal(c)) throw DataError("desired set is inconsistent");
          if (*y > x) p.edges.emplace_back(i, slot[*y]);
          if (!side) ++p.cost[i];  // turning x on breaks the clause whatever the partner does
          continue;
        }
        const bool other = y ? cur[*y] : false;
        const bool before = side || other, after = !side || other;
        if (before == goal(c) && after != goal(c)) ++p.cost[i];
        if (before != goal(c) && after == goal(c)) --p.cost[i];
      }
    }
    return p;
  };

  auto apply = [&](Assignment a, const std::vector<std::size_t>& flips) {
    for (std::size_t x : flips) a[x] = !a[x];
    return a;
  };

  Assignment best = cur;
  int best_gain = 0;
  for (bool side : {false, true}) {
    auto [gain, flips] = best_subset(build(side));
    if (gain > best_gain) {
      best_gain = gain;
      best = apply(cur, flips);
    }
  }
  return best;
}

BribeVerdict subset_search(const BriberyInstance& inst, const BribeOptions& options, std::string route) {
  BribeVerdict v;
  v.route = std::move(route);
  const Profile& profile = inst.profile;
  const std::vector<FlipCost> costs = flip_costs(profile);
  const Assignment base = outcome(profile).premise_values;
  const std::size_t start = distance(inst, base);
  const std::vector<std::size_t> vars = relevant_premises(profile.agenda(), inst.desired);

  // Depth-first over include/exclude decisions, include first, cost-pruned.
  std::uint64_t nodes = 0;
  Assignment cur = base;
  std::vector<std::size_t> chosen;
  std::optional<std::vector<std::size_t>> found;
  bool exhausted = false;
  auto rec = [&](auto&& self, std::size_t i, int spent) -> void {
    if (found || exhausted) return;
    if (++nodes > options.node_budget) {
      exhausted = true;
      return;
    }
    if (!chosen.empty() && distance(inst, cur) < start) {
      found = chosen;
      return;
    }
    for (std::size_t j = i; j < vars.size(); ++j) {
      const std::size_t x = vars[j];
      const int c = base[x] ? costs[x].to_zero : costs[x].to_one;
      if (spent + c > inst.budget) continue;
      cur[x] = !cur[x];
      chosen.push_back(x);
      self(self, j + 1, spent + c);
      chosen.pop_back();
      cur[x] = !cur[x];
      if (found || exhausted) return;
    }
  };
  rec(rec, 0, 0);
  if (!found) {
    if (exhausted) v.decision = Decision::Undecided;
    return v;
  }
  for (std::size_t x : *found) {
    const bool to = !base[x];
    int need = to ? costs[x].to_one : costs[x].to_zero;
    for (std::size_t j = 0; j < profile.judge_count() && need > 0; ++j)
      if (profile.judgment(j).premise_values[x] != to) {
        v.changes.push_back({j, x, to});
        --need;
      }
  }
  std::sort(v.changes.begin(), v.changes.end(),
            [](const EntryChange& a, const EntryChange& b) { return std::tie(a.judge, a.premise) < std::tie(b.judge, b.premise); });
  return finish(inst, std::move(v));
}

bool positive_monotone(const Agenda& agenda) {
  return std::all_of(agenda.conclusions().begin(), agenda.conclusions().end(),
                     [](const Conclusion& c) { return c.clause.negatives() == 0; });
}

}  // namespace

std::vector<FlipCost> flip_costs(const Profile& profile) {
  const int tau = profile.thresholds().tau_pos;
  std::vector<FlipCost> out(profile.agenda().premise_count());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const int s = profile.support(x);
    out[x] = {std::max(0, tau - s), std::max(0, s - (tau - 1))};
  }
  return out;
}

Profile apply_changes(const Profile& profile, const std::vector<EntryChange>& changes) {
  std::vector<JudgmentSet> js = profile.judgments();
  for (const EntryChange& e : changes) {
    if (e.judge >= js.size() || e.premise >= profile.agenda().premise_count())
      throw DataError("bribe plan refers to an unknown judge or premise");
    js[e.judge].premise_values[e.premise] = e.value;
  }
  return Profile(profile.agenda(), std::move(js), profile.quota());
}

int replay_delta(const BriberyInstance& inst, const std::vector<EntryChange>& changes) {
  const int before = static_cast<int>(inst.desired.unmet(outcome(inst.profile)));
  const int after = static_cast<int>(inst.desired.unmet(outcome(apply_changes(inst.profile, changes))));
  return after - before;
}

void check_bribery_instance(const BriberyInstance& inst) {
  const Agenda& agenda = inst.profile.agenda();
  if (inst.desired.premise_goals.size() != agenda.premise_count() ||
      inst.desired.conclusion_goals.size() != agenda.conclusion_count())
    throw DataError("desired set does not match the agenda");
  if (inst.budget < 0) throw DataError("budget must be nonnegative");
  if (inst.mode == BriberyMode::Bribery && static_cast<std::size_t>(inst.budget) > inst.profile.judge_count())
    throw DataError("bribery budget exceeds the number of judges");
  if (!consistency_check(inst.desired, agenda).satisfiable) throw DataError("desired set is inconsistent");
}

BriberyInstance normalize_for_bribery(const BriberyInstance& inst) {
  const Agenda& agenda = inst.profile.agenda();
  std::vector<Conclusion> conclusions;
  std::vector<std::optional<bool>> goals;
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    if (inst.desired.conclusion_goals[c]) {
      conclusions.push_back(agenda.conclusions()[c]);
      goals.push_back(inst.desired.conclusion_goals[c]);
    }
  Agenda probe(agenda.premises(), conclusions);
  for (std::size_t x = 0; x < agenda.premise_count(); ++x)
    if (inst.desired.premise_goals[x]) {
      conclusions.push_back({fresh_name(probe, agenda.premises()[x] + "_goal"), Clause({{x, false}})});
      goals.push_back(inst.desired.premise_goals[x]);
      probe = Agenda(agenda.premises(), conclusions);
    }
  Agenda next(agenda.premises(), std::move(conclusions));
  DesiredSet desired = DesiredSet::empty_for(next);
  desired.conclusion_goals = std::move(goals);
  return BriberyInstance{Profile(std::move(next), inst.profile.judgments(), inst.profile.quota()), std::move(desired),
                         inst.budget, inst.mode};
}

bool fits_fixed_k(const Agenda& agenda) {
  return std::all_of(agenda.conclusions().begin(), agenda.conclusions().end(),
                     [](const Conclusion& c) { return c.clause.negatives() == 0 && c.clause.size() <= 2; });
}

BribeVerdict solve_bribery_fixed_k(const BriberyInstance& inst) {
  check_bribery_instance(inst);
  if (!fits_fixed_k(inst.profile.agenda()))
    throw UsageError("the fixed-budget algorithm needs positive monotone conclusions of length at most 2");
  BribeVerdict v;
  v.route = "fixed budget (" + std::to_string(inst.budget) + " bribed judges)";
  const std::size_t n = inst.profile.judge_count();
  const std::size_t k = static_cast<std::size_t>(inst.budget);
  if (k == 0) return v;

  const BriberyInstance norm = normalize_for_bribery(inst);
  const Profile& profile = norm.profile;
  const int tau = profile.thresholds().tau_pos;
  const Assignment base = outcome(profile).premise_values;
  const std::size_t np = profile.agenda().premise_count();

  std::vector<std::size_t> bribed = first_combination(k);
  do {
    std::vector<bool> changeable(np);
    for (std::size_t x = 0; x < np; ++x) {
      int rest = profile.support(x);
      for (std::size_t j : bribed) rest -= profile.judgment(j).premise_values[x] ? 1 : 0;
      changeable[x] = rest + static_cast<int>(k) >= tau && rest <= tau - 1;
    }
    const Assignment target = fixed_k_round(norm, changeable, base);
    const int moved = static_cast<int>(distance(norm, target)) - static_cast<int>(distance(norm, base));
    if (moved < 0) {
      v.bribed_judges = bribed;
      v.changes = plan_for(profile, bribed, base, target);
      return finish(inst, std::move(v));
    }
  } while (next_combination(bribed, n));
  return v;
}

BribeVerdict solve_bribery_general(const BriberyInstance& inst, const BribeOptions& options) {
  check_bribery_instance(inst);
  BribeVerdict v;
  v.route = "search over bribed judges and reachable outcomes";
  const Profile& profile = inst.profile;
  const std::size_t n = profile.judge_count();
  const std::size_t k = static_cast<std::size_t>(inst.budget);
  if (k == 0) return v;
  const int tau = profile.thresholds().tau_pos;
  const Assignment base = outcome(profile).premise_values;
  const std::size_t start = distance(inst, base);
  const std::vector<std::size_t> vars = relevant_premises(profile.agenda(), inst.desired);

  std::uint64_t nodes = 0;
  std::vector<std::size_t> bribed = first_combination(k);
  do {
    std::vector<std::size_t> free;
    for (std::size_t x : vars) {
      int rest = profile.support(x);
      for (std::size_t j : bribed) rest -= profile.judgment(j).premise_values[x] ? 1 : 0;
      if (rest + static_cast<int>(k) >= tau && rest <= tau - 1) free.push_back(x);
    }
    if (free.size() >= 63 || nodes + (std::uint64_t{1} << free.size()) > options.node_budget) {
      v.decision = Decision::Undecided;
      v.route += " (node budget exceeded)";
      return v;
    }
    nodes += std::uint64_t{1} << free.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
      Assignment target = base;
      for (std::size_t i = 0; i < free.size(); ++i) target[free[i]] = (code >> (free.size() - 1 - i)) & 1;
      if (distance(inst, target) < start) {
        v.bribed_judges = bribed;
        v.changes = plan_for(profile, bribed, base, target);
        return finish(inst, std::move(v));
      }
    }
  } while (next_combination(bribed, n));
  return v;
}

BribeVerdict solve_microbribery(const BriberyInstance& inst, const BribeOptions& options) {
  check_bribery_instance(inst);
  const Profile& profile = inst.profile;
  const bool prop2 = positive_monotone(profile.agenda()) && inst.desired.complete() &&
                     profile.judge_count() <= options.prop2_max_judges;
  if (!prop2 || static_cast<std::size_t>(inst.budget) < profile.judge_count())
    return subset_search(inst, options,
                         prop2 ? "complete desired set, few judges: bounded premise search" : "premise subset search");

  // With k >= n every single outcome flip is affordable.
  BribeVerdict v;
  v.route = "complete desired set, few judges: direct scan";
  const Assignment base = outcome(profile).premise_values;
  const std::vector<FlipCost> costs = flip_costs(profile);
  auto flip = [&](std::size_t x, bool to) {
    int need = to ? costs[x].to_one : costs[x].to_zero;
    for (std::size_t j = 0; j < profile.judge_count() && need > 0; ++j)
      if (profile.judgment(j).premise_values[x] != to) {
        v.changes.push_back({j, x, to});
        --need;
      }
    return finish(inst, std::move(v));
  };
  for (std::size_t x = 0; x < base.size(); ++x)
    if (*inst.desired.premise_goals[x] && !base[x]) return flip(x, true);
  for (std::size_t x = 0; x < base.size(); ++x)
    if (!*inst.desired.premise_goals[x] && base[x]) return flip(x, false);
  return v;
}

BribeVerdict solve_bribery(const BriberyInstance& inst, const BribeOptions& options) {
  if (inst.mode == BriberyMode::Microbribery) return solve_microbribery(inst, options);
  if (fits_fixed_k(inst.profile.agenda())) return solve_bribery_fixed_k(inst);
  return solve_bribery_general(inst, options);
}

std::string to_string(BriberyMode m) { return m == BriberyMode::Bribery ? "bribery" : "microbribery"; }

}  // namespace jagg
