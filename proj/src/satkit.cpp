#include "jagg/satkit.hpp"

#include <algorithm>
#include <stdexcept>

#include "jagg/error.hpp"

namespace jagg {
namespace {

constexpr std::int8_t kUnset = -1;
using Partial = std::vector<std::int8_t>;
using Lits = std::vector<Literal>;

bool lit_true(const Partial& a, Literal l) { return a[l.var] != kUnset && (a[l.var] == 1) != l.negated; }
bool lit_false(const Partial& a, Literal l) { return a[l.var] != kUnset && (a[l.var] == 1) == l.negated; }
void set_true(Partial& a, Literal l) { a[l.var] = l.negated ? 0 : 1; }

std::size_t positives(const Lits& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Literal l) { return !l.negated; }));
}

struct Residual {
  std::size_t variables = 0;
  std::vector<Lits> clauses;
  Partial fixed;
  bool conflict = false;
};

Residual substitute(const SatProblem& p) {
  Residual r;
  r.variables = p.variables;
  r.fixed.assign(p.variables, kUnset);
  if (!p.frozen.empty() && p.frozen.size() != p.variables)
    throw UsageError("frozen mapping does not match the variable count");
  for (std::size_t v = 0; v < p.frozen.size(); ++v)
    if (p.frozen[v]) r.fixed[v] = *p.frozen[v] ? 1 : 0;
  for (const Clause& c : p.clauses) {
    Lits rest;
    bool satisfied = false;
    for (Literal l : c.literals()) {
      if (l.var >= p.variables) throw UsageError("clause references a variable beyond the declared count");
      if (lit_true(r.fixed, l)) satisfied = true;
      else if (!lit_false(r.fixed, l)) rest.push_back(l);
    }
    if (satisfied) continue;
    if (rest.empty()) r.conflict = true;
    r.clauses.push_back(std::move(rest));
  }
  return r;
}

// Plain fixpoint unit propagation; false on conflict.
bool propagate(const std::vector<Lits>& clauses, Partial& a) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const Lits& c : clauses) {
      std::size_t open = 0;
      Literal last{};
      bool satisfied = false;
      for (Literal l : c) {
        if (lit_true(a, l)) { satisfied = true; break; }
        if (!lit_false(a, l)) { ++open; last = l; }
      }
      if (satisfied) continue;
      if (open == 0) return false;
      if (open == 1) { set_true(a, last); changed = true; }
    }
  }
  return true;
}

bool all_hold(const std::vector<Lits>& clauses, const Partial& a) {
  return std::all_of(clauses.begin(), clauses.end(), [&](const Lits& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return lit_true(a, l); });
  });
}

// Unit propagation followed by a constant default: all-zeros when no
// residual clause is purely positive, all-ones in the dual case.
std::optional<std::optional<Partial>> monotone_direction(const Residual& r, bool default_value) {
  for (const Lits& c : r.clauses) {
    std::size_t wrong_sign = default_value ? c.size() - positives(c) : positives(c);
    if (c.size() >= 2 && wrong_sign == c.size()) return std::nullopt;
  }
  Partial a = r.fixed;
  if (!propagate(r.clauses, a)) return std::optional<Partial>{};
  for (auto& v : a)
    if (v == kUnset) v = default_value ? 1 : 0;
  if (!all_hold(r.clauses, a)) return std::nullopt;  // inconclusive
  return std::optional<Partial>{a};
}

std::optional<std::optional<Partial>> solve_monotone(const Residual& r) {
  if (auto zero = monotone_direction(r, false)) return zero;
  return monotone_direction(r, true);
}

bool fits_horn(const Residual& r) {
  return std::all_of(r.clauses.begin(), r.clauses.end(), [](const Lits& c) { return positives(c) <= 1; });
}

std::optional<Partial> solve_horn(const Residual& r) {
  Partial a = r.fixed;
  std::vector<std::vector<std::size_t>> watching(r.variables);  // clauses with ¬v
  std::vector<std::size_t> pending(r.clauses.size());
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < r.variables; ++v)
    if (a[v] == kUnset) a[v] = 0;
  auto fire = [&](std::size_t ci) -> bool {
    for (Literal l : r.clauses[ci])
      if (!l.negated) {
        if (a[l.var] == 0) { a[l.var] = 1; queue.push_back(l.var); }
        return true;
      }
    return false;
  };
  for (std::size_t ci = 0; ci < r.clauses.size(); ++ci) {
    for (Literal l : r.clauses[ci])
      if (l.negated) watching[l.var].push_back(ci);
    pending[ci] = r.clauses[ci].size() - positives(r.clauses[ci]);
  }
  for (std::size_t ci = 0; ci < r.clauses.size(); ++ci)
    if (pending[ci] == 0 && !fire(ci)) return std::nullopt;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    for (std::size_t ci : watching[v])
      if (--pending[ci] == 0 && !fire(ci)) return std::nullopt;
  }
  return a;
}

bool fits_two_sat(const Residual& r) {
  return std::all_of(r.clauses.begin(), r.clauses.end(), [](const Lits& c) { return c.size() <= 2; });
}

std::optional<Partial> solve_two_sat(const Residual& r) {
  const std::size_t nodes = 2 * r.variables;
  auto node = [](Literal l) { return 2 * l.var + (l.negated ? 1 : 0); };
  std::vector<std::vector<std::size_t>> out(nodes);
  for (const Lits& c : r.clauses) {
    Literal p = c[0];
    Literal q = c.size() == 2 ? c[1] : c[0];
    out[node(~p)].push_back(node(q));
    out[node(~q)].push_back(node(p));
  }

  // Iterative Tarjan; components come out in reverse topological order.
  std::vector<std::int64_t> index(nodes, -1), low(nodes, 0), comp(nodes, -1);
  std::vector<bool> on_stack(nodes, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::int64_t counter = 0, components = 0;
  for (std::size_t s = 0; s < nodes; ++s) {
    if (index[s] != -1) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == -1) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < out[v].size()) {
        std::size_t w = out[v][next++];
        if (index[w] == -1) call.push_back({w, 0});
        else if (on_stack[w]) low[v] = std::min(low[v], index[w]);
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  Partial a = r.fixed;
  for (std::size_t v = 0; v < r.variables; ++v) {
    if (a[v] != kUnset) continue;
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    a[v] = comp[2 * v] < comp[2 * v + 1] ? 1 : 0;
  }
  return a;
}

class Dpll {
 public:
  Dpll(const Residual& r, std::uint64_t budget) : r_(r), budget_(budget) {}

  std::optional<Partial> run() {
    Partial a = r_.fixed;
    if (search(a)) return a;
    return std::nullopt;
  }

 private:
  bool search(Partial& a) {
    if (!propagate(r_.clauses, a)) return false;
    eliminate_negative_pures(a);
    std::size_t branch = r_.variables;
    for (std::size_t v = 0; v < r_.variables; ++v)
      if (a[v] == kUnset) { branch = v; break; }
    if (branch == r_.variables) return all_hold(r_.clauses, a);
    if (all_hold(r_.clauses, a)) {
      for (auto& v : a)
        if (v == kUnset) v = 0;
      return true;
    }
    for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
      if (++nodes_ > budget_) throw ResourceError("DPLL node budget of " + std::to_string(budget_) + " exceeded");
      Partial child = a;
      child[branch] = value;
      if (search(child)) {
        a = std::move(child);
        return true;
      }
    }
    return false;
  }

  // A variable with no positive occurrence in any open clause is 0 in the
  // lexicographically smallest model extending the current assignment.
  void eliminate_negative_pures(Partial& a) const {
    std::vector<bool> positive(r_.variables, false);
    for (const Lits& c : r_.clauses) {
      if (std::any_of(c.begin(), c.end(), [&](Literal l) { return lit_true(a, l); })) continue;
      for (Literal l : c)
        if (!l.negated) positive[l.var] = true;
    }
    for (std::size_t v = 0; v < r_.variables; ++v)
      if (a[v] == kUnset && !positive[v]) a[v] = 0;
  }

  const Residual& r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

SatVerdict finish(const SatProblem& p, const std::optional<Partial>& a, SatStrategy used) {
  SatVerdict v;
  v.strategy = used;
  if (!a) return v;
  v.satisfiable = true;
  v.model.assign(p.variables, false);
  for (std::size_t i = 0; i < p.variables; ++i) v.model[i] = (*a)[i] == 1;
  for (std::size_t i = 0; i < p.frozen.size(); ++i)
    if (p.frozen[i] && *p.frozen[i] != v.model[i]) throw std::logic_error("model does not extend the frozen mapping");
  for (const Clause& c : p.clauses)
    if (!c.holds(v.model)) throw std::logic_error("model violates a clause");
  return v;
}

}  // namespace

SatVerdict solve(const SatProblem& p, SatStrategy strategy, const SatOptions& options) {
  Residual r = substitute(p);
  if (r.conflict) return finish(p, std::nullopt, strategy == SatStrategy::Auto ? SatStrategy::Monotone : strategy);

  switch (strategy) {
    case SatStrategy::Monotone: {
      auto result = solve_monotone(r);
      if (!result) throw UsageError("monotone path does not apply: a purely positive and a purely negative clause survive propagation");
      return finish(p, *result, strategy);
    }
    case SatStrategy::Horn:
      if (!fits_horn(r)) throw UsageError("horn path needs at most one positive literal per clause");
      return finish(p, solve_horn(r), strategy);
    case SatStrategy::TwoSat:
      if (!fits_two_sat(r)) throw UsageError("two-sat path needs clauses of length at most 2");
      return finish(p, solve_two_sat(r), strategy);
    case SatStrategy::Dpll:
      return finish(p, Dpll(r, options.node_budget).run(), strategy);
    case SatStrategy::Auto:
      break;
  }
  if (auto result = solve_monotone(r)) return finish(p, *result, SatStrategy::Monotone);
  if (fits_horn(r)) return finish(p, solve_horn(r), SatStrategy::Horn);
  if (fits_two_sat(r)) return finish(p, solve_two_sat(r), SatStrategy::TwoSat);
  return finish(p, Dpll(r, options.node_budget).run(), SatStrategy::Dpll);
}

SatVerdict consistency_check(const DesiredSet& desired, const Agenda& agenda) {
  SatProblem p;
  p.variables = agenda.premise_count();
  for (std::size_t x = 0; x < desired.premise_goals.size(); ++x)
    if (desired.premise_goals[x]) p.clauses.emplace_back(std::vector<Literal>{{x, !*desired.premise_goals[x]}});
  for (std::size_t c = 0; c < desired.conclusion_goals.size(); ++c) {
    if (!desired.conclusion_goals[c]) continue;
    const Clause& clause = agenda.conclusions()[c].clause;
    if (*desired.conclusion_goals[c]) {
      p.clauses.push_back(clause);
    } else {
      for (Literal l : clause.literals()) p.clauses.emplace_back(std::vector<Literal>{~l});
    }
  }
  return solve(p);
}

std::string to_string(SatStrategy s) {
  switch (s) {
    case SatStrategy::Auto: return "auto";
    case SatStrategy::Horn: return "horn";
    case SatStrategy::TwoSat: return "two-sat";
    case SatStrategy::Monotone: return "monotone";
    case SatStrategy::Dpll: return "dpll";
  }
  return "?";
}

std::optional<SatStrategy> parse_strategy(const std::string& name) {
  for (SatStrategy s : {SatStrategy::Auto, SatStrategy::Horn, SatStrategy::TwoSat, SatStrategy::Monotone, SatStrategy::Dpll})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

}  // namespace jagg
