#include "jagg/oracle.hpp"

#include <algorithm>

#include "jagg/error.hpp"

namespace jagg::oracle {
namespace {

struct GoalView {
  std::vector<bool> met;
  std::size_t unmet = 0;
};

GoalView goals_met(const DesiredSet& d, const Outcome& s) {
  GoalView v;
  for (std::size_t x = 0; x < d.premise_goals.size(); ++x)
    if (d.premise_goals[x]) v.met.push_back(*d.premise_goals[x] == s.premise_values[x]);
  for (std::size_t c = 0; c < d.conclusion_goals.size(); ++c)
    if (d.conclusion_goals[c]) v.met.push_back(*d.conclusion_goals[c] == s.conclusion_values[c]);
  v.unmet = static_cast<std::size_t>(std::count(v.met.begin(), v.met.end(), false));
  return v;
}

bool question_holds(Variant variant, const GoalView& before, const GoalView& after) {
  const std::size_t g = before.met.size();
  bool gained = false, lost = false, changed = false;
  for (std::size_t i = 0; i < g; ++i) {
    gained |= after.met[i] && !before.met[i];
    lost |= before.met[i] && !after.met[i];
    changed |= after.met[i] != before.met[i];
  }
  switch (variant) {
    case Variant::Robustness: return changed;
    case Variant::Possible: return gained;
    case Variant::Necessary: return gained && !lost;
    case Variant::Exact: return after.unmet == 0;
    case Variant::Hamming: return after.unmet < before.unmet;
  }
  return false;
}

std::size_t distance(const Agenda& agenda, const DesiredSet& d, const Assignment& premises) {
  Outcome s{premises, agenda.evaluate(premises)};
  return goals_met(d, s).unmet;
}

// Hamming search with independent satellites.
ManipAnswer hamming_split(const ManipInstance& inst, const std::vector<std::size_t>& decided, std::size_t bound) {
  const Agenda& agenda = inst.profile.agenda();
  const DesiredSet& d = inst.desired;
  const std::size_t np = agenda.premise_count();

  // Goals as variable lists: premise goals first, then conclusion goals.
  struct Goal {
    std::vector<std::size_t> vars;
    std::optional<std::size_t> premise, conclusion;
    bool value = false;
  };
  std::vector<Goal> goals;
  for (std::size_t x = 0; x < np; ++x)
    if (d.premise_goals[x]) goals.push_back({{x}, x, std::nullopt, *d.premise_goals[x]});
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    if (d.conclusion_goals[c]) {
      Goal g{{}, std::nullopt, c, *d.conclusion_goals[c]};
      for (Literal l : agenda.conclusions()[c].clause.literals()) g.vars.push_back(l.var);
      goals.push_back(std::move(g));
    }

  std::vector<std::vector<std::size_t>> touching(np);
  for (std::size_t i = 0; i < goals.size(); ++i)
    for (std::size_t x : goals[i].vars) touching[x].push_back(i);

  std::vector<std::size_t> order = decided;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return touching[a].size() < touching[b].size(); });
  std::vector<bool> satellite(np, false);
  std::vector<bool> goal_has_satellite(goals.size(), false);
  for (std::size_t x : order) {
    if (std::any_of(touching[x].begin(), touching[x].end(), [&](std::size_t g) { return goal_has_satellite[g]; }))
      continue;
    satellite[x] = true;
    for (std::size_t g : touching[x]) goal_has_satellite[g] = true;
  }
  std::vector<std::size_t> core, moons;
  for (std::size_t x : decided) (satellite[x] ? moons : core).push_back(x);
  if (core.size() > bound) throw ResourceError("oracle bound exceeded: " + std::to_string(core.size()) + " core decision variables");

  const Outcome truthful = outcome(inst.profile);
  const std::size_t base = goals_met(d, truthful).unmet;
  auto goal_met = [&](const Goal& g, const Assignment& a) {
    if (g.premise) return a[*g.premise] == g.value;
    return agenda.conclusions()[*g.conclusion].clause.holds(a) == g.value;
  };

  for (std::uint64_t code = 0; code < (std::uint64_t{1} << core.size()); ++code) {
    Assignment a = truthful.premise_values;
    for (std::size_t i = 0; i < core.size(); ++i) a[core[i]] = (code >> (core.size() - 1 - i)) & 1;
    std::size_t unmet = 0;
    for (std::size_t i = 0; i < goals.size(); ++i)
      if (!goal_has_satellite[i] && !goal_met(goals[i], a)) ++unmet;
    for (std::size_t x : moons) {
      std::size_t best = SIZE_MAX;
      bool pick = false;
      for (bool value : {false, true}) {
        a[x] = value;
        std::size_t here = 0;
        for (std::size_t g : touching[x]) here += goal_met(goals[g], a) ? 0 : 1;
        if (here < best) {
          best = here;
          pick = value;
        }
      }
      a[x] = pick;
      unmet += best;
    }
    if (unmet < base) {
      ManipAnswer ans;
      ans.feasible = true;
      JudgmentSet j = inst.truthful();
      for (std::size_t x : decided) j.premise_values[x] = a[x];
      ans.delta = static_cast<int>(unmet) - static_cast<int>(base);
      ans.witness = std::move(j);
      return ans;
    }
  }
  return {};
}

std::vector<FlipCost> costs_of(const Profile& p) {
  const int tau = p.thresholds().tau_pos;
  std::vector<FlipCost> out;
  for (std::size_t x = 0; x < p.agenda().premise_count(); ++x) {
    int s = 0;
    for (const auto& j : p.judgments()) s += j.premise_values[x] ? 1 : 0;
    out.push_back({std::max(0, tau - s), std::max(0, s - tau + 1)});
  }
  return out;
}

}  // namespace

ManipAnswer manipulation(const ManipInstance& inst, Variant variant, std::size_t bound) {
  const Profile& profile = inst.profile;
  const std::size_t n = profile.judge_count();
  const int tau = profile.thresholds().tau_pos;
  std::vector<std::size_t> decided;
  for (std::size_t x = 0; x < profile.agenda().premise_count(); ++x) {
    int others = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != inst.manipulator && profile.judgment(j).premise_values[x]) ++others;
    if (others == tau - 1) decided.push_back(x);
  }
  if (decided.size() > bound) {
    if (variant == Variant::Hamming) return hamming_split(inst, decided, bound);
    throw ResourceError("oracle bound exceeded: " + std::to_string(decided.size()) + " decision variables");
  }

  const GoalView before = goals_met(inst.desired, outcome(profile));
  const std::size_t k = decided.size();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    JudgmentSet j = inst.truthful();
    for (std::size_t i = 0; i < k; ++i) j.premise_values[decided[i]] = (code >> (k - 1 - i)) & 1;
    const GoalView after = goals_met(inst.desired, outcome(profile.with_judgment(inst.manipulator, j)));
    if (question_holds(variant, before, after)) {
      ManipAnswer ans;
      ans.feasible = true;
      ans.delta = static_cast<int>(after.unmet) - static_cast<int>(before.unmet);
      ans.witness = std::move(j);
      return ans;
    }
  }
  return {};
}

BribeAnswer bribery(const BriberyInstance& inst, std::uint64_t bound) {
  const Profile& p = inst.profile;
  const Agenda& agenda = p.agenda();
  const std::size_t n = p.judge_count(), np = agenda.premise_count();
  const int tau = p.thresholds().tau_pos;
  const Assignment start = outcome(p).premise_values;
  const std::size_t base = distance(agenda, inst.desired, start);
  const std::size_t kmax = std::min<std::size_t>(static_cast<std::size_t>(std::max(inst.budget, 0)), n);

  std::uint64_t work = 0;
  for (std::size_t t = 1; t <= kmax; ++t) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != t) continue;
      std::vector<std::size_t> judges;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) judges.push_back(j);
      std::vector<std::size_t> free;
      Assignment fixed = start;
      for (std::size_t x = 0; x < np; ++x) {
        int rest = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (!(mask >> j & 1) && p.judgment(j).premise_values[x]) ++rest;
        const bool can1 = rest + static_cast<int>(t) >= tau, can0 = rest <= tau - 1;
        if (can1 && can0) free.push_back(x);
        else fixed[x] = can1;
      }
      if (free.size() >= 40) throw ResourceError("oracle bound exceeded");
      work += std::uint64_t{1} << free.size();
      if (work > bound) throw ResourceError("oracle bound exceeded");
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
        Assignment a = fixed;
        for (std::size_t i = 0; i < free.size(); ++i) a[free[i]] = (code >> (free.size() - 1 - i)) & 1;
        const std::size_t now = distance(agenda, inst.desired, a);
        if (now < base) {
          BribeAnswer ans;
          ans.feasible = true;
          ans.delta = static_cast<int>(now) - static_cast<int>(base);
          ans.judges = judges;
          ans.target = a;
          return ans;
        }
      }
    }
  }
  return {};
}

BribeAnswer microbribery(const BriberyInstance& inst, std::size_t bound) {
  const Profile& p = inst.profile;
  const Agenda& agenda = p.agenda();
  const Assignment start = outcome(p).premise_values;
  const std::size_t base = distance(agenda, inst.desired, start);
  const std::vector<FlipCost> cost = costs_of(p);
  std::vector<std::size_t> cand;
  std::vector<int> price;
  for (std::size_t x = 0; x < start.size(); ++x) {
    const int c = start[x] ? cost[x].to_zero : cost[x].to_one;
    if (c <= inst.budget) {
      cand.push_back(x);
      price.push_back(c);
    }
  }
  if (cand.size() > bound) throw ResourceError("oracle bound exceeded: " + std::to_string(cand.size()) + " premises");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    int spent = 0;
    Assignment a = start;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) {
        spent += price[i];
        a[cand[i]] = !a[cand[i]];
      }
    if (spent > inst.budget) continue;
    const std::size_t now = distance(agenda, inst.desired, a);
    if (now < base) {
      BribeAnswer ans;
      ans.feasible = true;
      ans.delta = static_cast<int>(now) - static_cast<int>(base);
      ans.target = a;
      return ans;
    }
  }
  return {};
}

BribeAnswer microbribery_entries(const BriberyInstance& inst, std::size_t max_entries) {
  const Profile& p = inst.profile;
  const Agenda& agenda = p.agenda();
  const std::size_t n = p.judge_count(), np = agenda.premise_count(), total = n * np;
  if (total > max_entries) throw ResourceError("too many entries for the entry-level oracle");
  const std::size_t base = distance(agenda, inst.desired, outcome(p).premise_values);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
    if (__builtin_popcountll(mask) > inst.budget) continue;
    std::vector<JudgmentSet> js = p.judgments();
    std::vector<EntryChange> entries;
    for (std::size_t e = 0; e < total; ++e)
      if (mask >> e & 1) {
        const std::size_t j = e / np, x = e % np;
        js[j].premise_values[x] = !js[j].premise_values[x];
        entries.push_back({j, x, js[j].premise_values[x]});
      }
    const Assignment a = outcome(Profile(agenda, js, p.quota())).premise_values;
    const std::size_t now = distance(agenda, inst.desired, a);
    if (now < base) {
      BribeAnswer ans;
      ans.feasible = true;
      ans.delta = static_cast<int>(now) - static_cast<int>(base);
      ans.target = a;
      ans.entries = std::move(entries);
      return ans;
    }
  }
  return {};
}

SatAnswer sat(const SatProblem& p, std::size_t bound) {
  std::vector<std::size_t> free;
  Assignment a(p.variables, false);
  for (std::size_t v = 0; v < p.variables; ++v) {
    if (!p.frozen.empty() && p.frozen[v]) a[v] = *p.frozen[v];
    else free.push_back(v);
  }
  if (free.size() > bound) throw ResourceError("oracle bound exceeded: " + std::to_string(free.size()) + " free variables");
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
    for (std::size_t i = 0; i < free.size(); ++i) a[free[i]] = (code >> (free.size() - 1 - i)) & 1;
    if (std::all_of(p.clauses.begin(), p.clauses.end(), [&](const Clause& c) { return c.holds(a); })) return {true, a};
  }
  return {};
}

bool colorable(const Graph& g, int k) {
  if (k <= 0) return g.n == 0;
  std::vector<int> color(g.n, 0);
  // Odometer over all colorings.
  while (true) {
    bool ok = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return color[e.first] != color[e.second]; });
    if (ok) return true;
    std::size_t i = 0;
    while (i < g.n && ++color[i] == k) color[i++] = 0;
    if (i == g.n) return false;
  }
}

bool has_vertex_cover(const Graph& g, std::size_t k) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    if (std::all_of(g.edges.begin(), g.edges.end(),
                    [&](const auto& e) { return (mask >> e.first & 1) || (mask >> e.second & 1); }))
      return true;
  }
  return false;
}

bool has_clique(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    bool ok = true;
    for (std::size_t u = 0; u < g.n && ok; ++u)
      for (std::size_t v = u + 1; v < g.n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool pvc_yes(const PvcGraph& g) {
  if (g.n > 26) throw ResourceError("oracle bound exceeded: too many vertices");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
    auto covered = [&](const std::vector<std::pair<std::size_t, std::size_t>>& es) {
      long c = 0;
      for (auto [u, v] : es) c += ((mask >> u & 1) || (mask >> v & 1)) ? 1 : 0;
      return c;
    };
    if (covered(g.plus) > covered(g.minus)) return true;
  }
  return false;
}

bool lobbying_yes(const Matrix& m, std::size_t k) {
  const std::size_t rows = m.size();
  if (rows == 0) return false;
  const std::size_t cols = m[0].size();
  const std::size_t t = std::min(k, rows);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != t) continue;
    bool all = true;
    for (std::size_t c = 0; c < cols && all; ++c) {
      std::size_t ones = 0;
      for (std::size_t r = 0; r < rows; ++r) ones += ((mask >> r & 1) || m[r][c]) ? 1 : 0;
      all = 2 * ones > rows;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace jagg::oracle
