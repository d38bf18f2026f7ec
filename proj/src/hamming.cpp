#include "jagg/hamming.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jagg/clausekit.hpp"
#include "jagg/error.hpp"

namespace jagg {
namespace {

bool positive_monotone(const Agenda& agenda, std::size_t max_length) {
  return std::all_of(agenda.conclusions().begin(), agenda.conclusions().end(), [&](const Conclusion& c) {
    return c.clause.negatives() == 0 && c.clause.size() <= max_length;
  });
}

HdVerdict replay(const ManipInstance& original, const ManipInstance& norm, std::vector<std::size_t> flips,
                 std::string route) {
  HdVerdict v;
  v.route = std::move(route);
  std::sort(flips.begin(), flips.end());
  JudgmentSet j = norm.truthful();
  for (std::size_t x : flips) j.premise_values[x] = !j.premise_values[x];
  Outcome before = outcome(norm.profile);
  Outcome after = outcome_with_replacement(norm.profile, norm.manipulator, j);
  v.delta = static_cast<int>(hd(norm.desired, after)) - static_cast<int>(hd(norm.desired, before));
  if (v.delta >= 0) throw std::logic_error("hamming witness does not lower the distance");
  v.decision = Decision::Yes;
  v.flips = std::move(flips);
  j.premise_values.resize(original.profile.agenda().premise_count());
  v.witness = std::move(j);
  return v;
}

HdVerdict polynomial_path(const ManipInstance& original, const ManipInstance& norm) {
  const HdAnalysis a = analyze(norm);
  const HdGraph g = build_hd_graph(norm, a);
  const std::string route = "polynomial (max-gain subgraph)";

  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.weight[i] < 0) return replay(original, norm, {g.vertices[i]}, route);
  for (const auto& e : g.gain.edges)
    if (g.weight[e.u] == 0 && g.weight[e.v] == 0) return replay(original, norm, {g.vertices[e.u], g.vertices[e.v]}, route);

  GainResult best = max_gain_subgraph(g.gain);
  HdVerdict v;
  v.route = route;
  if (best.best <= 0) return v;
  std::vector<std::size_t> flips;
  for (std::size_t i : best.subset) flips.push_back(g.vertices[i]);
  v = replay(original, norm, flips, route);
  if (Rational(-v.delta) != best.best) throw std::logic_error("graph gain disagrees with the replayed distance");
  return v;
}

// Lexicographic enumeration of candidate values, first candidate most significant.
HdVerdict search_path(const ManipInstance& original, const ManipInstance& norm, const std::vector<std::size_t>& candidates,
                      bool subsets_only, const HdOptions& options) {
  HdVerdict v;
  v.route = subsets_only ? "search over useful-variable subsets" : "search over decision-variable assignments";
  const std::size_t k = candidates.size();
  if (k >= 63 || (std::uint64_t{1} << k) > options.budget) {
    v.decision = Decision::Undecided;
    v.route += " (budget of " + std::to_string(options.budget) + " assignments exceeded)";
    return v;
  }
  const Outcome truthful = outcome(norm.profile);
  const std::size_t base = hd(norm.desired, truthful);
  const Assignment& start = norm.truthful().premise_values;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    Assignment premises = truthful.premise_values;
    std::vector<std::size_t> flips;
    for (std::size_t i = 0; i < k; ++i) {
      const bool bit = (code >> (k - 1 - i)) & 1;
      const std::size_t x = candidates[i];
      premises[x] = subsets_only ? (bit ? !start[x] : start[x]) : bit;
      if (premises[x] != truthful.premise_values[x]) flips.push_back(x);
    }
    if (hd(norm.desired, complete_outcome(norm.profile.agenda(), std::move(premises))) < base)
      return replay(original, norm, flips, v.route);
  }
  return v;
}

}  // namespace

std::size_t hd(const DesiredSet& desired, const Outcome& s) { return desired.unmet(s); }

HdAnalysis analyze(const ManipInstance& inst) {
  check_manip_shape(inst);
  if (!is_normalized(inst.desired))
    throw UsageError("hamming analysis needs a normalized desired set; call normalize_desired_set first");
  const Agenda& agenda = inst.profile.agenda();
  const Outcome out = outcome(inst.profile);
  const Assignment& mine = inst.truthful().premise_values;

  HdAnalysis a;
  a.decided = decision_variables(inst.profile, inst.manipulator);
  for (std::size_t x = 0; x < agenda.premise_count(); ++x) {
    const bool in_vote = mine[x], in_outcome = out.premise_values[x];
    a.classes.push_back(in_vote ? (in_outcome ? PremiseClass::P11 : PremiseClass::P10)
                                : (in_outcome ? PremiseClass::P01 : PremiseClass::P00));
  }
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c) {
    if (out.conclusion_values[c]) continue;
    (*inst.desired.conclusion_goals[c] ? a.good : a.bad).push_back(c);
  }
  std::vector<bool> decided(agenda.premise_count(), false);
  for (std::size_t x : a.decided) decided[x] = true;
  std::vector<bool> useful(agenda.premise_count(), false);
  for (std::size_t c : a.good)
    for (Literal l : agenda.conclusions()[c].clause.literals())
      if (decided[l.var]) useful[l.var] = true;
  for (std::size_t x = 0; x < useful.size(); ++x)
    if (useful[x]) a.useful.push_back(x);

  if (positive_monotone(agenda, agenda.premise_count() + 1))
    for (std::size_t x : a.useful)
      if (a.classes[x] != PremiseClass::P00) throw std::logic_error("useful variable outside P00");
  return a;
}

int hd_delta(const ManipInstance& inst, const HdAnalysis& analysis, const std::vector<std::size_t>& flips) {
  for (std::size_t x : flips)
    if (!std::binary_search(analysis.useful.begin(), analysis.useful.end(), x))
      throw UsageError("hd_delta expects a subset of the useful variables");
  const Agenda& agenda = inst.profile.agenda();
  auto touched = [&](std::size_t c) {
    const Clause& clause = agenda.conclusions()[c].clause;
    return std::any_of(flips.begin(), flips.end(), [&](std::size_t x) { return clause.mentions(x); });
  };
  int delta = 0;
  for (std::size_t c : analysis.bad) delta += touched(c) ? 1 : 0;
  for (std::size_t c : analysis.good) delta -= touched(c) ? 1 : 0;
  return delta;
}

HdGraph build_hd_graph(const ManipInstance& inst, const HdAnalysis& analysis) {
  const Agenda& agenda = inst.profile.agenda();
  HdGraph g;
  std::vector<std::size_t> slot(agenda.premise_count(), SIZE_MAX);
  for (std::size_t x : analysis.useful) {
    slot[x] = g.vertices.size();
    g.vertices.push_back(x);
    g.weight.push_back(0);
  }
  for (std::size_t c : analysis.good) {
    int seen = 0;
    for (Literal l : agenda.conclusions()[c].clause.literals())
      if (slot[l.var] != SIZE_MAX) {
        --g.weight[slot[l.var]];
        ++seen;
      }
    if (seen > 1 && agenda.conclusions()[c].clause.size() == 2)
      throw std::logic_error("good length-2 conclusion with two useful variables");
  }
  for (std::size_t c : analysis.bad) {
    std::vector<std::size_t> ends;
    for (Literal l : agenda.conclusions()[c].clause.literals())
      if (slot[l.var] != SIZE_MAX) {
        ++g.weight[slot[l.var]];
        ends.push_back(slot[l.var]);
      }
    if (ends.size() == 2) g.gain.edges.push_back({ends[0], ends[1], 1});
  }
  for (int w : g.weight) g.gain.cost.push_back(Rational(std::max(w, 0)));
  return g;
}

HdVerdict solve_hd(const ManipInstance& inst, const HdOptions& options) {
  const ManipInstance norm = is_normalized(inst.desired) ? inst : normalize_desired_set(inst);
  const Agenda& agenda = norm.profile.agenda();
  if (positive_monotone(agenda, 2)) return polynomial_path(inst, norm);
  if (positive_monotone(agenda, agenda.premise_count() + 1))
    return search_path(inst, norm, analyze(norm).useful, true, options);
  return search_path(inst, norm, decision_variables(norm.profile, norm.manipulator), false, options);
}

std::string to_string(PremiseClass c) {
  switch (c) {
    case PremiseClass::P11: return "P11";
    case PremiseClass::P10: return "P10";
    case PremiseClass::P00: return "P00";
    case PremiseClass::P01: return "P01";
  }
  return "?";
}

std::string explain_hd(const ManipInstance& inst) {
  const ManipInstance norm = is_normalized(inst.desired) ? inst : normalize_desired_set(inst);
  const Agenda& agenda = norm.profile.agenda();
  const HdAnalysis a = analyze(norm);
  std::ostringstream out;
  for (PremiseClass k : {PremiseClass::P11, PremiseClass::P10, PremiseClass::P00, PremiseClass::P01}) {
    out << to_string(k) << ":";
    for (std::size_t x = 0; x < a.classes.size(); ++x)
      if (a.classes[x] == k) out << " " << agenda.premises()[x];
    out << "\n";
  }
  auto list = [&](const char* label, const std::vector<std::size_t>& items, bool premises) {
    out << label << ":";
    for (std::size_t i : items) out << " " << (premises ? agenda.premises()[i] : agenda.conclusions()[i].name);
    out << "\n";
  };
  list("decided", a.decided, true);
  list("useful", a.useful, true);
  list("good", a.good, false);
  list("bad", a.bad, false);
  if (!positive_monotone(agenda, 2)) {
    out << "graph: not built (conclusions are not positive monotone of length at most 2)\n";
    return out.str();
  }
  HdGraph g = build_hd_graph(norm, a);
  out << "graph hd {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  " << agenda.premises()[g.vertices[i]] << " [weight=" << g.weight[i] << "];\n";
  for (const auto& e : g.gain.edges)
    out << "  " << agenda.premises()[g.vertices[e.u]] << " -- " << agenda.premises()[g.vertices[e.v]] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace jagg
