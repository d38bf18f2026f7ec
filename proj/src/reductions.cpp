#include "jagg/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "jagg/error.hpp"
#include "jagg/oracle.hpp"

namespace jagg {
namespace {

Literal pos(std::size_t v) { return {v, false}; }
Literal neg(std::size_t v) { return {v, true}; }

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Collects premises column by column (one value per judge) and conclusions.
class Builder {
 public:
  explicit Builder(std::size_t judges) : judges_(judges) {}

  std::size_t var(std::string name, std::vector<bool> column) {
    if (column.size() != judges_) throw std::logic_error("column height differs from judge count");
    names_.push_back(std::move(name));
    columns_.push_back(std::move(column));
    return names_.size() - 1;
  }
  std::size_t var(std::string name, bool value) { return var(std::move(name), std::vector<bool>(judges_, value)); }

  void conc(std::string name, std::vector<Literal> lits) { conclusions_.push_back({std::move(name), Clause(std::move(lits))}); }

  Profile profile(const Rational& q) const {
    std::vector<JudgmentSet> js(judges_);
    for (std::size_t j = 0; j < judges_; ++j)
      for (const auto& col : columns_) js[j].premise_values.push_back(col[j]);
    return Profile(Agenda(names_, conclusions_), std::move(js), q);
  }

 private:
  std::size_t judges_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> columns_;
  std::vector<Conclusion> conclusions_;
};

// Conclusion goals read off one judge's set.
DesiredSet conclusions_of(const Profile& p, std::size_t judge) {
  DesiredSet d = DesiredSet::empty_for(p.agenda());
  const auto values = p.agenda().evaluate(p.judgment(judge).premise_values);
  for (std::size_t c = 0; c < values.size(); ++c) d.conclusion_goals[c] = values[c];
  return d;
}

DesiredSet all_true(const Agenda& agenda) {
  DesiredSet d = DesiredSet::empty_for(agenda);
  for (auto& g : d.conclusion_goals) g = true;
  return d;
}

void require_plain_formula(const SatProblem& f) {
  for (const auto& fr : f.frozen)
    if (fr) throw UsageError("source formula must not freeze variables");
  for (const Clause& c : f.clauses)
    for (Literal l : c.literals())
      if (l.var >= f.variables) throw DataError("clause refers to an undeclared variable");
}

enum class Polarity { Positive, Negative, Mixed };
Polarity polarity(const Clause& c) {
  if (c.negatives() == 0) return Polarity::Positive;
  if (c.negatives() == c.size()) return Polarity::Negative;
  return Polarity::Mixed;
}

std::vector<Literal> rename(const Clause& c, const std::vector<std::size_t>& to) {
  std::vector<Literal> out;
  for (Literal l : c.literals()) out.push_back({to[l.var], l.negated});
  return out;
}

std::vector<std::size_t> add_block(Builder& b, const std::string& stem, std::size_t count, std::vector<bool> column) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(b.var(stem + idx(i), column));
  return out;
}

void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  if (r > n) return;
  while (true) {
    f(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

std::size_t regular_degree(const Graph& g) {
  g.validate();
  std::size_t d = 0;
  if (!g.regular(&d)) throw UsageError("graph must be regular");
  return d;
}

}  // namespace

// ---- quota and polarity transformations ------------------------------------

ManipInstance quota_lift(const ManipInstance& src, const Rational& q) {
  if (q <= 0 || q >= 1) throw UsageError("quota lift needs 0 < q < 1");
  check_manip_shape(src);
  const std::int64_t a = ceil_of(Rational(1) / q), b = ceil_of(Rational(1) / (Rational(1) - q));
  const std::size_t n = static_cast<std::size_t>(std::max(a, b) + 1);
  const int tau = thresholds(q, n).tau_pos;

  const Profile& p = src.profile;
  const std::size_t np = p.agenda().premise_count();
  const auto decided = decision_variables(p, src.manipulator);
  const Outcome truthful = outcome(p);

  std::vector<JudgmentSet> js(n, JudgmentSet{Assignment(np, false)});
  for (std::size_t x = 0; x < np; ++x) {
    const bool is_decided = std::binary_search(decided.begin(), decided.end(), x);
    for (std::size_t j = 0; j + 1 < n; ++j)
      js[j].premise_values[x] = is_decided ? static_cast<int>(j) < tau - 1 : truthful.premise_values[x];
  }
  js[n - 1] = src.truthful();
  return ManipInstance{Profile(p.agenda(), std::move(js), q), n - 1, src.desired};
}

Rational mirrored_quota(const Rational& q, std::size_t n) {
  const Rational qn = q * static_cast<std::int64_t>(n);
  if (qn.denominator() == 1) return Rational(1) - q - Rational(1, static_cast<std::int64_t>(n));
  return Rational(1) - q;
}

ManipInstance mirror_negate(const ManipInstance& inst) {
  const Profile& p = inst.profile;
  const Agenda& agenda = p.agenda();
  std::vector<Conclusion> conclusions;
  for (const auto& c : agenda.conclusions()) {
    std::vector<Literal> lits;
    for (Literal l : c.clause.literals()) lits.push_back(~l);
    conclusions.push_back({c.name, Clause(std::move(lits))});
  }
  std::vector<JudgmentSet> js = p.judgments();
  for (auto& j : js) j.premise_values.flip();
  DesiredSet d = inst.desired;
  for (auto& g : d.premise_goals)
    if (g) g = !*g;
  return ManipInstance{Profile(Agenda(agenda.premises(), std::move(conclusions)), std::move(js),
                               mirrored_quota(p.quota(), p.judge_count())),
                       inst.manipulator, std::move(d)};
}

// ---- satisfiability side ---------------------------------------------------

SatProblem gen_sat_coloring(const Graph& g, int k) {
  if (k < 2) throw UsageError("coloring reduction needs k >= 2");
  g.validate();
  const std::size_t K = static_cast<std::size_t>(k);
  auto v = [&](std::size_t vertex, std::size_t color) { return vertex * K + color; };
  SatProblem p;
  p.variables = g.n * K;
  for (std::size_t i = 0; i < g.n; ++i) {
    std::vector<Literal> some;
    for (std::size_t s = 0; s < K; ++s) some.push_back(pos(v(i, s)));
    p.clauses.emplace_back(std::move(some));
    for (std::size_t s = 0; s < K; ++s)
      for (std::size_t t = s + 1; t < K; ++t) p.clauses.push_back(Clause({neg(v(i, s)), neg(v(i, t))}));
  }
  for (auto [a, b] : g.edges)
    for (std::size_t s = 0; s < K; ++s) p.clauses.push_back(Clause({neg(v(a, s)), neg(v(b, s))}));
  return p;
}

SatProblem gen_constant_gadget(int k1, int k2, bool target) {
  if (k1 < 2 || k2 < 2) throw UsageError("constant gadget needs k1, k2 >= 2");
  const std::size_t blocks = static_cast<std::size_t>(k1 - 1), width = static_cast<std::size_t>(k2);
  SatProblem p;
  p.variables = 1 + blocks * width;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<Literal> lits;
    for (std::size_t t = 0; t < width; ++t) lits.push_back(neg(1 + b * width + t));
    p.clauses.emplace_back(std::move(lits));
  }
  for_each_subset(blocks * width, blocks, [&](const std::vector<std::size_t>& pick) {
    std::vector<Literal> lits{pos(0)};
    for (std::size_t y : pick) lits.push_back(pos(1 + y));
    p.clauses.emplace_back(std::move(lits));
  });
  if (!target)
    for (Clause& c : p.clauses) {
      std::vector<Literal> lits;
      for (Literal l : c.literals()) lits.push_back(~l);
      c = Clause(std::move(lits));
    }
  return p;
}

// ---- necessary manipulation ------------------------------------------------

ManipInstance gen_necessary_mplus(const SatProblem& f, std::size_t k2) {
  if (k2 < 2) throw UsageError("the guard clause needs at least two y variables");
  require_plain_formula(f);
  Builder b(3);
  const auto x = add_block(b, "x", f.variables, {true, false, false});
  std::vector<std::size_t> y{b.var("y1", std::vector<bool>{true, false, true})};
  for (std::size_t t = 1; t < k2; ++t) y.push_back(b.var("y" + idx(t), std::vector<bool>{true, true, false}));
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    auto lits = rename(f.clauses[c], x);
    switch (polarity(f.clauses[c])) {
      case Polarity::Positive: lits.push_back(pos(y[0])); break;
      case Polarity::Negative: break;
      case Polarity::Mixed: throw UsageError("source formula must consist of monotone clauses");
    }
    b.conc("c" + idx(c), std::move(lits));
  }
  std::vector<Literal> guard;
  for (std::size_t v : y) guard.push_back(neg(v));
  b.conc("y_guard", std::move(guard));
  Profile p = b.profile(Rational(1, 2));
  DesiredSet d = all_true(p.agenda());
  return ManipInstance{std::move(p), 2, std::move(d)};
}

ManipInstance gen_necessary_m2p_m3m(const SatProblem& f) {
  require_plain_formula(f);
  Builder b(3);
  const auto x = add_block(b, "x", f.variables, {true, false, false});
  const auto y = add_block(b, "y", f.variables, {true, false, true});
  const auto z = add_block(b, "z", f.variables, {true, false, true});
  const std::size_t w = b.var("w", std::vector<bool>{true, false, false});
  const std::size_t v = b.var("v", std::vector<bool>{false, false, true});
  b.conc("wv", {pos(w), pos(v)});
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    switch (polarity(f.clauses[c])) {
      case Polarity::Positive: b.conc("c" + idx(c), rename(f.clauses[c], z)); break;
      case Polarity::Negative: b.conc("c" + idx(c), rename(f.clauses[c], x)); break;
      case Polarity::Mixed: throw UsageError("source formula must consist of monotone clauses");
    }
  }
  for (std::size_t i = 0; i < f.variables; ++i) {
    b.conc("xy" + idx(i), {pos(x[i]), pos(y[i])});
    b.conc("yz" + idx(i), {pos(y[i]), pos(z[i])});
    b.conc("xyw" + idx(i), {neg(x[i]), neg(y[i]), neg(w)});
    b.conc("yzw" + idx(i), {neg(y[i]), neg(z[i]), neg(w)});
  }
  Profile p = b.profile(Rational(1, 2));
  DesiredSet d = all_true(p.agenda());
  return ManipInstance{std::move(p), 2, std::move(d)};
}

ManipInstance gen_necessary_mms(const SatProblem& f, int i, int j) {
  if (i < 3 || j <= 0 || j >= i) throw UsageError("mixed clause shape needs i >= 3 and 0 < j < i");
  require_plain_formula(f);
  if (j == 1) {
    SatProblem flipped = f;
    for (Clause& c : flipped.clauses) {
      std::vector<Literal> lits;
      for (Literal l : c.literals()) lits.push_back(~l);
      c = Clause(std::move(lits));
    }
    return mirror_negate(gen_necessary_mms(flipped, i, i - 1));
  }
  Builder b(3);
  const auto x = add_block(b, "x", f.variables, {true, false, false});
  const auto y = add_block(b, "y", f.variables, {true, false, true});
  const auto z = add_block(b, "z", f.variables, {true, false, true});
  const std::size_t w = b.var("w", std::vector<bool>{true, false, true});
  const std::size_t v = b.var("v", std::vector<bool>{true, true, false});
  std::vector<Literal> padding;
  for (int t = 0; t < i - 3; ++t) {
    const bool accepted = t < j - 2;
    const std::size_t u = b.var("u" + std::to_string(t + 1), accepted);
    padding.push_back(accepted ? neg(u) : pos(u));
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    b.conc("c" + idx(c), rename(f.clauses[c], polarity(f.clauses[c]) == Polarity::Positive ? z : x));
  b.conc("wv", {neg(w), neg(v)});
  for (std::size_t k = 0; k < f.variables; ++k) {
    b.conc("xy" + idx(k), {pos(x[k]), pos(y[k])});
    b.conc("yz" + idx(k), {pos(y[k]), pos(z[k])});
    std::vector<Literal> a{neg(x[k]), neg(y[k]), pos(w)}, c{neg(y[k]), neg(z[k]), pos(w)};
    a.insert(a.end(), padding.begin(), padding.end());
    c.insert(c.end(), padding.begin(), padding.end());
    b.conc("xyw" + idx(k), std::move(a));
    b.conc("yzw" + idx(k), std::move(c));
  }
  Profile p = b.profile(Rational(1, 2));
  DesiredSet d = all_true(p.agenda());
  return ManipInstance{std::move(p), 2, std::move(d)};
}

ManipInstance gen_necessary_special_quota(const SatProblem& f, std::size_t n) {
  if (n < 2) throw UsageError("need at least two judges");
  require_plain_formula(f);
  Builder b(n);
  auto column = [&](bool others, bool last) {
    std::vector<bool> col(n, others);
    col[n - 1] = last;
    return col;
  };
  const auto x = add_block(b, "x", f.variables, column(true, true));
  const auto y = add_block(b, "y", f.variables, column(true, false));
  const auto z = add_block(b, "z", f.variables, column(true, false));
  const std::size_t w = b.var("w", column(true, true));
  const std::size_t v = b.var("v", column(true, false));
  const std::size_t u1 = b.var("u1", column(false, true));
  const std::size_t u2 = b.var("u2", column(false, true));
  b.conc("wv", {neg(w), neg(v)});
  b.conc("vu", {pos(v), pos(u1), pos(u2)});
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    switch (polarity(f.clauses[c])) {
      case Polarity::Positive: b.conc("c" + idx(c), rename(f.clauses[c], x)); break;
      case Polarity::Negative: b.conc("c" + idx(c), rename(f.clauses[c], z)); break;
      case Polarity::Mixed: throw UsageError("source formula must consist of monotone clauses");
    }
  }
  for (std::size_t i = 0; i < f.variables; ++i) {
    b.conc("xyw" + idx(i), {pos(x[i]), pos(y[i]), pos(w)});
    b.conc("yzw" + idx(i), {pos(y[i]), pos(z[i]), pos(w)});
    b.conc("xy" + idx(i), {neg(x[i]), neg(y[i])});
    b.conc("yz" + idx(i), {neg(y[i]), neg(z[i])});
  }
  Profile p = b.profile(Rational(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(n)));
  DesiredSet d = all_true(p.agenda());
  return ManipInstance{std::move(p), n - 1, std::move(d)};
}

// ---- Hamming manipulation --------------------------------------------------

PvcGraph gen_pvc_from_cubic_vc(const Graph& g, std::size_t k) {
  if (regular_degree(g) != 3 || g.n == 0) throw UsageError("graph must be 3-regular");
  const std::size_t n = g.n;
  if (2 * k < n || k > n) throw UsageError("cover size must lie between n/2 and n");
  if ((3 * n - 2 * k) % 4 != 0) throw UsageError("3n/4 - k/2 is not an integer for this input");
  const std::size_t p = (3 * n - 2 * k) / 4;

  PvcGraph out;
  auto add = [&](std::string name) {
    out.names.push_back(std::move(name));
    return out.n++;
  };
  std::vector<std::size_t> x, z;
  for (std::size_t i = 0; i < n; ++i) x.push_back(add("x" + idx(i)));
  const std::size_t y1 = add("y1"), y2 = add("y2"), y3 = add("y3");
  for (std::size_t j = 0; j < n - p; ++j) z.push_back(add("z" + idx(j)));
  const std::size_t w1 = add("w1"), w2 = add("w2"), w3 = add("w3");

  for (auto [a, b] : g.edges) out.plus.emplace_back(x[a], x[b]);
  for (std::size_t xi : x)
    for (std::size_t y : {y1, y2, y3}) out.minus.emplace_back(xi, y);
  out.plus.emplace_back(y1, y2);
  for (std::size_t zj : z) {
    out.plus.emplace_back(zj, y1);
    out.plus.emplace_back(zj, y2);
    for (std::size_t w : {w1, w2, w3}) out.minus.emplace_back(zj, w);
  }
  return out;
}

ManipInstance gen_hamming_from_pvc(const PvcGraph& g) {
  Builder b(3);
  std::vector<std::size_t> x;
  for (std::size_t i = 0; i < g.n; ++i)
    x.push_back(b.var(i < g.names.size() ? g.names[i] : "x" + idx(i), std::vector<bool>{true, false, false}));
  const std::size_t y = b.var(fresh_name(Agenda(std::vector<std::string>(g.names), {}), "y"), std::vector<bool>{false, false, true});
  const std::size_t z = b.var(fresh_name(Agenda(std::vector<std::string>(g.names), {}), "z"), std::vector<bool>{false, false, false});
  for (std::size_t e = 0; e < g.plus.size(); ++e) b.conc("plus" + idx(e), {pos(x[g.plus[e].first]), pos(x[g.plus[e].second]), pos(y)});
  for (std::size_t e = 0; e < g.minus.size(); ++e)
    b.conc("minus" + idx(e), {pos(x[g.minus[e].first]), pos(x[g.minus[e].second]), pos(z)});
  Profile p = b.profile(Rational(1, 2));
  DesiredSet d = conclusions_of(p, 2);
  return ManipInstance{std::move(p), 2, std::move(d)};
}

namespace {

// Shared clique part: x_i, x*, the pair families and their partners.
struct CliqueVars {
  std::vector<std::size_t> x;
  std::size_t star = 0;
};

void add_copies(Builder& b, CopyMode mode, const std::string& stem, std::size_t lhs, std::size_t copies,
                const std::vector<bool>& partner_column, std::optional<std::size_t>& shared) {
  for (std::size_t c = 0; c < copies; ++c) {
    std::size_t partner;
    if (mode == CopyMode::FreshVariables) {
      partner = b.var("y" + stem + "_" + idx(c), partner_column);
    } else {
      if (!shared) shared = b.var("y" + stem, partner_column);
      partner = *shared;
    }
    b.conc("xy" + stem + "_" + idx(c), {pos(lhs), pos(partner)});
  }
}

}  // namespace

std::size_t default_gadget_size(const Graph& g, std::size_t k) {
  std::size_t d = 0;
  g.regular(&d);
  const std::size_t n = g.n;
  const std::size_t others = n * (n - 1) / 2 + g.edges.size() + n + n * (d + 1) + (n - k + 1);
  return 2 * (others + 2);
}

ManipInstance gen_hamming_monotone_clique(const Graph& g, std::size_t k, CopyMode mode) {
  const std::size_t d = regular_degree(g), n = g.n;
  if (k < 1 || k > n) throw UsageError("clique size must lie between 1 and the vertex count");
  Builder b(3);
  const auto x = add_block(b, "x", n, {true, false, false});
  const std::size_t star = b.var("x_star", std::vector<bool>{true, false, false});
  const std::vector<bool> partner{false, false, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.conc("nx" + idx(i) + "_" + idx(j), {neg(x[i]), neg(x[j])});
  for (auto [u, v] : g.edges) b.conc("edge" + idx(std::min(u, v)) + "_" + idx(std::max(u, v)), {pos(x[u]), pos(x[v])});
  for (std::size_t i = 0; i < n; ++i) b.conc("xs" + idx(i), {pos(x[i]), pos(star)});
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> shared;
    add_copies(b, mode, idx(i), x[i], d + 1, partner, shared);
  }
  std::optional<std::size_t> shared;
  add_copies(b, mode, "_star", star, n - k + 1, partner, shared);
  Profile p = b.profile(Rational(1, 2));
  DesiredSet desired = conclusions_of(p, 2);
  return ManipInstance{std::move(p), 2, std::move(desired)};
}

ManipInstance gen_hamming_horn_clique(const Graph& g, std::size_t k, const HornCliqueOptions& options) {
  const std::size_t d = regular_degree(g), n = g.n;
  if (k < 1 || k > n) throw UsageError("clique size must lie between 1 and the vertex count");
  const std::size_t N = options.gadget_size.value_or(default_gadget_size(g, k));
  if (N < 2 || N % 2 != 0) throw UsageError("gadget size must be a positive even number");

  Builder b(3);
  const auto x = add_block(b, "x", n, {true, false, false});
  std::vector<std::size_t> xp;
  for (std::size_t i = 0; i < n; ++i) xp.push_back(b.var("x" + idx(i) + "p", std::vector<bool>{true, false, true}));
  const std::size_t star = b.var("x_star", std::vector<bool>{true, false, false});
  const std::vector<bool> partner{false, false, true};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.conc("pp" + idx(i) + "_" + idx(j), {pos(xp[i]), pos(xp[j])});
  for (auto [u, v] : g.edges) b.conc("edge" + idx(std::min(u, v)) + "_" + idx(std::max(u, v)), {pos(x[u]), pos(x[v])});
  for (std::size_t i = 0; i < n; ++i) b.conc("xs" + idx(i), {pos(x[i]), pos(star)});
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> shared;
    add_copies(b, options.mode, idx(i), x[i], d + 1, partner, shared);
  }
  std::optional<std::size_t> shared;
  add_copies(b, options.mode, "_star", star, n - k + 1, partner, shared);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t e = b.var("e" + idx(i) + "_" + idx(j), std::vector<bool>{true, false, false});
      b.conc("ge" + idx(i) + "_" + idx(j), {pos(x[i]), pos(e)});
      b.conc("gp" + idx(i) + "_" + idx(j), {pos(xp[i]), pos(e)});
    }
    for (std::size_t j = 0; j < N / 2; ++j) {
      const std::size_t f = b.var("f" + idx(i) + "_" + idx(j), std::vector<bool>{false, false, true});
      b.conc("gf" + idx(i) + "_" + idx(j), {pos(x[i]), pos(f)});
      b.conc("gn" + idx(i) + "_" + idx(j), {neg(xp[i]), pos(f)});
    }
  }
  Profile p = b.profile(Rational(1, 2));
  DesiredSet desired = conclusions_of(p, 2);
  ManipInstance inst{std::move(p), 2, std::move(desired)};
  return options.horn_form ? mirror_negate(inst) : inst;
}

// ---- bribery ---------------------------------------------------------------

BriberyInstance gen_bribery_from_hamming(const ManipInstance& inst) {
  check_manip_shape(inst);
  const Profile& p = inst.profile;
  const int tau = p.thresholds().tau_pos;
  if (tau < 2 || tau > static_cast<int>(p.judge_count()) - 1)
    throw UsageError("transfer needs 2 <= tau_pos <= n-1 so a single bribed judge cannot move fixed premises");
  const auto decided = decision_variables(p, inst.manipulator);
  const Outcome truthful = outcome(p);
  std::vector<JudgmentSet> js = p.judgments();
  for (std::size_t x = 0; x < p.agenda().premise_count(); ++x) {
    if (std::binary_search(decided.begin(), decided.end(), x)) continue;
    for (auto& j : js) j.premise_values[x] = truthful.premise_values[x];
  }
  return BriberyInstance{Profile(p.agenda(), std::move(js), p.quota()), inst.desired, 1, BriberyMode::Bribery};
}

BriberyInstance gen_bribery_from_lobbying(const Matrix& m, std::size_t k) {
  const std::size_t rows = m.size();
  if (rows < 2) throw UsageError("lobbying matrix needs at least two rows");
  const std::size_t cols = m[0].size();
  if (cols == 0) throw UsageError("lobbying matrix needs at least one column");
  for (const auto& r : m) {
    if (r.size() != cols) throw DataError("lobbying matrix rows differ in length");
    for (int v : r)
      if (v != 0 && v != 1) throw DataError("lobbying matrix entries must be 0 or 1");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t zeros = 0;
    for (const auto& r : m) zeros += r[c] == 0 ? 1 : 0;
    if (2 * zeros <= rows) throw UsageError("every column needs a strict majority of zeros");
  }
  if (k < 1 || k > rows / 2) throw UsageError("budget must lie between 1 and floor(rows/2)");

  Builder b(rows);
  std::vector<std::size_t> x;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<bool> col;
    for (const auto& r : m) col.push_back(r[c] == 1);
    x.push_back(b.var("x" + idx(c), col));
  }
  const std::size_t y1 = b.var("y1", false), y2 = b.var("y2", false);
  for (std::size_t i = 0; i < cols; ++i) b.conc("a" + idx(i), {pos(x[i]), pos(y1)});
  for (std::size_t i = 0; i < cols; ++i) b.conc("b" + idx(i), {pos(x[i]), pos(y2)});
  for (std::size_t j = 1; j < cols; ++j) b.conc("c" + idx(j), {pos(x[0]), pos(x[j])});
  Profile p = b.profile(Rational(1, 2));
  DesiredSet d = DesiredSet::empty_for(p.agenda());
  for (std::size_t i = 0; i < cols; ++i) d.premise_goals[x[i]] = false;
  d.premise_goals[y1] = d.premise_goals[y2] = true;
  for (std::size_t c = 0; c < p.agenda().conclusion_count(); ++c) d.conclusion_goals[c] = c < 2 * cols;
  return BriberyInstance{std::move(p), std::move(d), static_cast<int>(k), BriberyMode::Bribery};
}

BriberyInstance gen_microbribery_clique(const Graph& g, std::size_t s, const MicroCliqueOptions& options) {
  g.validate();
  if (s < 2 || s % 2 != 0) throw UsageError("clique size must be even and at least 2");
  const std::size_t n = g.n;
  const std::size_t m = s + 1;
  const std::size_t judges = options.three_judge ? 3 : 2 * m + 1;
  const std::size_t heavy = options.three_judge ? 2 : m + 1;
  const bool extra = options.compensate_premise_goals && !options.three_judge;
  const std::size_t pair_copies = s / 2 + (extra ? 1 : 0);
  const std::size_t star_copies = s / 2 - 1 + (extra ? 1 : 0);

  std::vector<bool> accepted(judges, false);
  std::fill(accepted.begin(), accepted.begin() + static_cast<std::ptrdiff_t>(heavy), true);
  const std::vector<bool> rejected(judges, false);

  Builder b(judges);
  std::vector<std::size_t> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(b.var("x" + idx(i), accepted));
  const std::size_t star = b.var("x_star", accepted);
  for (auto [u, v] : g.edges) b.conc("edge" + idx(std::min(u, v)) + "_" + idx(std::max(u, v)), {pos(x[u]), pos(x[v])});
  for (std::size_t i = 0; i < n; ++i) b.conc("xs" + idx(i), {pos(x[i]), pos(star)});
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> shared;
    add_copies(b, options.mode, idx(i), x[i], pair_copies, rejected, shared);
  }
  std::optional<std::size_t> shared;
  add_copies(b, options.mode, "_star", star, star_copies, rejected, shared);

  Profile p = b.profile(Rational(1, 2));
  const Agenda& agenda = p.agenda();
  DesiredSet d = DesiredSet::empty_for(agenda);
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c) d.conclusion_goals[c] = agenda.conclusions()[c].name.rfind("xy", 0) == 0;
  if (!options.three_judge)
    for (std::size_t v = 0; v < agenda.premise_count(); ++v) d.premise_goals[v] = agenda.premises()[v][0] == 'y';
  return BriberyInstance{std::move(p), std::move(d), static_cast<int>(s + 1), BriberyMode::Microbribery};
}

// ---- verification ----------------------------------------------------------

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{
      "sat-coloring",        "constant-gadget",      "necessary-mplus",        "necessary-m2p-m3m",
      "necessary-mms",       "necessary-special-quota", "pvc-from-cubic-vc",   "hamming-from-pvc",
      "hamming-monotone-clique", "hamming-horn-clique", "bribery-from-hamming", "bribery-from-lobbying",
      "microbribery-clique", "quota-lift",           "mirror-negate"};
  return names;
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw UsageError(std::string("this reduction needs ") + what);
  return *v;
}

CtSet conclusion_shapes(const Agenda& agenda) {
  CtSet out;
  for (const auto& c : agenda.conclusions()) out.insert(classify_clause(c.clause));
  return out;
}

bool subset_of(const CtSet& a, const CtSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void note_shapes(ReductionReport& r, const CtSet& got, const CtSet& allowed) {
  if (subset_of(got, allowed)) return;
  r.checks_ok = false;
  r.detail += "conclusion shapes outside the claimed class:";
  for (ClauseShape s : got)
    if (!allowed.count(s)) r.detail += " " + to_string(s);
  r.detail += "\n";
}

bool manip_yes(const ManipInstance& inst, Variant v) { return oracle::manipulation(inst, v).feasible; }

}  // namespace

GeneratedInstance generate(const std::string& name, const ReductionInput& in) {
  if (name == "sat-coloring") return gen_sat_coloring(need(in.graph, "a graph"), static_cast<int>(in.k));
  if (name == "constant-gadget") return gen_constant_gadget(in.i, in.j, in.target);
  if (name == "necessary-mplus") return gen_necessary_mplus(need(in.formula, "a formula"), in.k);
  if (name == "necessary-m2p-m3m") return gen_necessary_m2p_m3m(need(in.formula, "a formula"));
  if (name == "necessary-mms") return gen_necessary_mms(need(in.formula, "a formula"), in.i, in.j);
  if (name == "necessary-special-quota") return gen_necessary_special_quota(need(in.formula, "a formula"), in.n);
  if (name == "pvc-from-cubic-vc") return gen_pvc_from_cubic_vc(need(in.graph, "a graph"), in.k);
  if (name == "hamming-from-pvc") return gen_hamming_from_pvc(need(in.pvc, "a signed graph"));
  if (name == "hamming-monotone-clique") return gen_hamming_monotone_clique(need(in.graph, "a graph"), in.k, in.mode);
  if (name == "hamming-horn-clique")
    return gen_hamming_horn_clique(need(in.graph, "a graph"), in.k, {in.gadget_size, in.mode, true});
  if (name == "bribery-from-hamming") return gen_bribery_from_hamming(need(in.instance, "a manipulation instance"));
  if (name == "bribery-from-lobbying") return gen_bribery_from_lobbying(need(in.matrix, "a 0/1 matrix"), in.k);
  if (name == "microbribery-clique")
    return gen_microbribery_clique(need(in.graph, "a graph"), in.s, {in.three_judge, in.mode, in.compensate});
  if (name == "quota-lift") return quota_lift(need(in.instance, "a manipulation instance"), in.q);
  if (name == "mirror-negate") return mirror_negate(need(in.instance, "a manipulation instance"));
  throw UsageError("unknown reduction '" + name + "'");
}

ReductionReport verify_reduction(const std::string& name, const ReductionInput& in) {
  ReductionReport r;
  r.name = name;
  const GeneratedInstance image = generate(name, in);

  if (name == "sat-coloring") {
    const Graph& g = *in.graph;
    r.source_yes = oracle::colorable(g, static_cast<int>(in.k));
    const SatProblem& p = std::get<SatProblem>(image);
    r.image_yes = oracle::sat(p).satisfiable;
    note_shapes(r, shapes_of(p.clauses), {{static_cast<int>(in.k), 0}, {2, 2}});
  } else if (name == "constant-gadget") {
    const SatProblem& p = std::get<SatProblem>(image);
    r.source_yes = true;
    SatProblem forced = p, flipped = p;
    forced.frozen.assign(p.variables, std::nullopt);
    flipped.frozen.assign(p.variables, std::nullopt);
    forced.frozen[0] = in.target;
    flipped.frozen[0] = !in.target;
    r.image_yes = oracle::sat(forced).satisfiable && !oracle::sat(flipped).satisfiable;
    const std::size_t expected = static_cast<std::size_t>(in.i - 1);
    std::size_t blocks = (static_cast<std::size_t>(in.i) - 1) * static_cast<std::size_t>(in.j), binom = 1;
    for (std::size_t t = 0; t < expected; ++t) binom = binom * (blocks - t) / (t + 1);
    if (p.clauses.size() != expected + binom) {
      r.checks_ok = false;
      r.detail += "clause count differs from k1-1+C((k1-1)k2,k1-1)\n";
    }
  } else if (name == "pvc-from-cubic-vc") {
    r.source_yes = oracle::has_vertex_cover(*in.graph, in.k);
    r.image_yes = oracle::pvc_yes(std::get<PvcGraph>(image));
  } else if (std::holds_alternative<ManipInstance>(image)) {
    const ManipInstance& img = std::get<ManipInstance>(image);
    const CtSet got = conclusion_shapes(img.profile.agenda());
    if (name == "necessary-mplus" || name == "necessary-m2p-m3m" || name == "necessary-mms" ||
        name == "necessary-special-quota") {
      const SatProblem& f = *in.formula;
      r.source_yes = oracle::sat(f).satisfiable;
      r.image_yes = manip_yes(img, Variant::Necessary);
      if (r.image_yes != manip_yes(img, Variant::Exact)) {
        r.checks_ok = false;
        r.detail += "necessary and exact disagree on the image\n";
      }
      CtSet allowed;
      if (name == "necessary-mplus") {
        for (const Clause& c : f.clauses) {
          ClauseShape s = classify_clause(c);
          allowed.insert(s.negatives == 0 ? ClauseShape{s.length + 1, 0} : s);
        }
        allowed.insert({static_cast<int>(in.k), static_cast<int>(in.k)});
      } else {
        allowed = shapes_of(f.clauses);
        if (name == "necessary-m2p-m3m") allowed.insert({{2, 0}, {3, 3}});
        if (name == "necessary-mms") allowed.insert({{2, 0}, {2, 2}, {in.i, in.j}});
        if (name == "necessary-special-quota") {
          allowed.insert({{3, 0}, {2, 2}});
          if (img.profile.thresholds().tau_pos != static_cast<int>(img.profile.judge_count())) {
            r.checks_ok = false;
            r.detail += "threshold is not unanimity\n";
          }
        }
      }
      note_shapes(r, got, allowed);
    } else if (name == "hamming-from-pvc") {
      r.source_yes = oracle::pvc_yes(*in.pvc);
      r.image_yes = manip_yes(img, Variant::Hamming);
      note_shapes(r, got, {{3, 0}});
    } else if (name == "hamming-monotone-clique" || name == "hamming-horn-clique") {
      r.source_yes = oracle::has_clique(*in.graph, in.k);
      r.image_yes = manip_yes(img, Variant::Hamming);
      if (name == "hamming-monotone-clique") note_shapes(r, got, {{2, 0}, {2, 2}});
      else note_shapes(r, got, {{2, 1}, {2, 2}});
    } else {  // quota-lift, mirror-negate
      const ManipInstance& src = *in.instance;
      r.source_yes = manip_yes(src, Variant::Necessary);
      r.image_yes = manip_yes(img, Variant::Necessary);
      for (Variant v : {Variant::Robustness, Variant::Possible, Variant::Exact, Variant::Hamming})
        if (manip_yes(src, v) != manip_yes(img, v)) {
          r.checks_ok = false;
          r.detail += "verdicts differ for " + to_string(v) + "\n";
        }
      if (name == "mirror-negate") {
        note_shapes(r, got, mirror(conclusion_shapes(src.profile.agenda())));
        if (src.profile.thresholds().tau_pos != img.profile.thresholds().tau_neg) {
          r.checks_ok = false;
          r.detail += "threshold identity fails\n";
        }
      } else {
        const std::size_t np = src.profile.agenda().premise_count();
        if (np <= 12)
          for (std::uint64_t code = 0; code < (std::uint64_t{1} << np); ++code) {
            JudgmentSet j{Assignment(np)};
            for (std::size_t x = 0; x < np; ++x) j.premise_values[x] = code >> x & 1;
            if (outcome_with_replacement(src.profile, src.manipulator, j) !=
                outcome_with_replacement(img.profile, img.manipulator, j)) {
              r.checks_ok = false;
              r.detail += "outcomes differ for some replacement judgment set\n";
              break;
            }
          }
      }
    }
  } else {
    const BriberyInstance& img = std::get<BriberyInstance>(image);
    const CtSet got = conclusion_shapes(img.profile.agenda());
    if (name == "bribery-from-hamming") {
      r.source_yes = manip_yes(*in.instance, Variant::Hamming);
      r.image_yes = oracle::bribery(img).feasible;
    } else if (name == "bribery-from-lobbying") {
      r.source_yes = oracle::lobbying_yes(*in.matrix, in.k);
      r.image_yes = oracle::bribery(img).feasible;
      note_shapes(r, got, {{2, 0}});
    } else {
      r.source_yes = oracle::has_clique(*in.graph, in.s);
      r.image_yes = oracle::microbribery(img).feasible;
      note_shapes(r, got, {{2, 0}});
    }
  }
  if (r.source_yes != r.image_yes)
    r.detail += std::string("source is ") + (r.source_yes ? "yes" : "no") + " but image is " + (r.image_yes ? "yes" : "no") + "\n";
  return r;
}

}  // namespace jagg
