#include "jagg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "jagg/bribe.hpp"
#include "jagg/clausekit.hpp"
#include "jagg/error.hpp"
#include "jagg/hamming.hpp"
#include "jagg/manip.hpp"
#include "jagg/oracle.hpp"
#include "jagg/reductions.hpp"
#include "jagg/satkit.hpp"
#include "jagg/text_format.hpp"

namespace jagg {
namespace {

using Json = nlohmann::ordered_json;

struct Report {
  std::ostringstream text;
  Json json = Json::object();
  int code = kExitTrue;
};

int decision_code(Decision d) {
  switch (d) {
    case Decision::Yes: return kExitTrue;
    case Decision::No: return kExitFalse;
    case Decision::Undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

std::string verdict_word(Decision d) {
  switch (d) {
    case Decision::Yes: return "feasible";
    case Decision::No: return "infeasible";
    case Decision::Undecided: return "undecided";
  }
  return "undecided";
}

std::string assignment_text(const Agenda& agenda, const Outcome& o) {
  std::string s;
  for (std::size_t x = 0; x < agenda.premise_count(); ++x)
    s += (s.empty() ? "" : " ") + agenda.premises()[x] + "=" + (o.premise_values[x] ? "1" : "0");
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    s += " " + agenda.conclusions()[c].name + "=" + (o.conclusion_values[c] ? "1" : "0");
  return s;
}

Json assignment_json(const Agenda& agenda, const Outcome& o) {
  Json premises = Json::object(), conclusions = Json::object();
  for (std::size_t x = 0; x < agenda.premise_count(); ++x) premises[agenda.premises()[x]] = o.premise_values[x] ? 1 : 0;
  for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
    conclusions[agenda.conclusions()[c].name] = o.conclusion_values[c] ? 1 : 0;
  return Json{{"premises", premises}, {"conclusions", conclusions}};
}

// Rows of 0/1 under premise and conclusion headers, one row per judge and
// a final row for the collective outcome.
void profile_table(std::ostream& out, const Profile& p, const Outcome& result) {
  const Agenda& agenda = p.agenda();
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < p.judge_count(); ++j) labels.push_back("judge " + std::to_string(j + 1));
  labels.push_back("outcome");
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());

  auto cell = [](std::ostream& o, const std::string& v, std::size_t width) { o << " " << std::string(width - v.size(), ' ') << v; };
  auto row = [&](const std::string& label, const Outcome& o) {
    out << label << std::string(label_width - label.size(), ' ');
    for (std::size_t x = 0; x < agenda.premise_count(); ++x)
      cell(out, o.premise_values[x] ? "1" : "0", agenda.premises()[x].size());
    out << " |";
    for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
      cell(out, o.conclusion_values[c] ? "1" : "0", agenda.conclusions()[c].name.size());
    out << "\n";
  };
  out << std::string(label_width, ' ');
  for (const auto& name : agenda.premises()) out << " " << name;
  out << " |";
  for (const auto& c : agenda.conclusions()) out << " " << c.name;
  out << "\n";
  for (std::size_t j = 0; j < p.judge_count(); ++j) row(labels[j], complete_outcome(agenda, p.judgment(j).premise_values));
  row(labels.back(), result);
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

// ---- subcommands -----------------------------------------------------------

void cmd_outcome(const std::string& path, Report& r) {
  const InstanceFile f = load_instance(path);
  const Outcome o = outcome(f.profile);
  profile_table(r.text, f.profile, o);
  r.text << "outcome: " << assignment_text(f.profile.agenda(), o) << "\n";
  r.json["command"] = "outcome";
  r.json["outcome"] = assignment_json(f.profile.agenda(), o);
}

void cmd_decide(const std::string& path, std::size_t judge, Report& r) {
  const InstanceFile f = load_instance(path);
  if (judge < 1 || judge > f.profile.judge_count()) throw UsageError("--judge must lie between 1 and the judge count");
  const auto decided = decision_variables(f.profile, judge - 1);
  Json names = Json::array();
  std::string list;
  for (std::size_t x : decided) {
    names.push_back(f.profile.agenda().premises()[x]);
    list += (list.empty() ? "" : ", ") + f.profile.agenda().premises()[x];
  }
  r.text << "decision variables of judge " << judge << ": " << (list.empty() ? "(none)" : list) << "\n";
  r.json["command"] = "decide";
  r.json["judge"] = judge;
  r.json["decision_variables"] = names;
}

struct ManipRun {
  Decision decision = Decision::No;
  std::optional<JudgmentSet> witness;
  std::optional<int> delta;
  std::string note;
};

ManipRun solve_manip(const ManipInstance& inst, Variant v, std::uint64_t nodes) {
  ManipRun run;
  if (v == Variant::Hamming) {
    HdVerdict h = solve_hd(inst, HdOptions{nodes});
    run.decision = h.decision;
    run.witness = h.witness;
    run.delta = h.delta;
    run.note = h.route;
    return run;
  }
  ManipVerdict m;
  switch (v) {
    case Variant::Robustness: m = solve_robustness(inst); break;
    case Variant::Possible: m = solve_possible(inst); break;
    case Variant::Necessary: m = solve_necessary(inst, SatOptions{nodes}); break;
    default: m = solve_exact(inst, SatOptions{nodes}); break;
  }
  run.decision = m.decision;
  run.witness = m.witness;
  run.delta = m.hd_delta;
  run.note = m.note;
  return run;
}

void cmd_manipulate(const std::string& path, const std::string& variant_name, bool explain, std::uint64_t nodes, Report& r) {
  const auto variant = parse_variant(variant_name);
  if (!variant) throw UsageError("unknown variant '" + variant_name + "'");
  const ManipInstance inst = to_manip(load_instance(path));
  const ManipRun run = solve_manip(inst, *variant, nodes);
  const Agenda& agenda = inst.profile.agenda();

  r.code = decision_code(run.decision);
  r.text << "variant: " << to_string(*variant) << "\n";
  r.text << "verdict: " << verdict_word(run.decision) << "\n";
  r.json["command"] = "manipulate";
  r.json["variant"] = to_string(*variant);
  r.json["verdict"] = verdict_word(run.decision);
  if (run.witness) {
    const Outcome reported = complete_outcome(agenda, run.witness->premise_values);
    const Outcome after = outcome_with_replacement(inst.profile, inst.manipulator, *run.witness);
    std::string premises;
    for (std::size_t x = 0; x < agenda.premise_count(); ++x)
      premises += (premises.empty() ? "" : " ") + agenda.premises()[x] + "=" + (reported.premise_values[x] ? "1" : "0");
    r.text << "report: " << premises << "\n";
    r.text << "outcome: " << assignment_text(agenda, after) << "\n";
    r.json["report"] = assignment_json(agenda, reported)["premises"];
    r.json["outcome"] = assignment_json(agenda, after);
  }
  if (run.delta) {
    r.text << "distance change: " << *run.delta << "\n";
    r.json["distance_change"] = *run.delta;
  }
  if (!run.note.empty()) {
    r.text << "note: " << run.note << "\n";
    r.json["note"] = run.note;
  }
  if (explain) {
    std::string dump;
    if (*variant == Variant::Hamming) {
      dump = explain_hd(inst);
    } else {
      std::string list;
      for (std::size_t x : decision_variables(inst.profile, inst.manipulator))
        list += (list.empty() ? "" : ", ") + agenda.premises()[x];
      dump = "decision variables: " + (list.empty() ? std::string("(none)") : list) + "\n";
      std::vector<Clause> clauses;
      for (const auto& c : agenda.conclusions()) clauses.push_back(c.clause);
      dump += "dichotomy: " + describe(dichotomy(shapes_of(clauses))) + "\n";
    }
    r.text << dump;
    r.json["explain"] = dump;
  }
}

void cmd_bribe(const std::string& path, const std::string& mode_name, std::optional<int> budget, bool plan, Report& r) {
  BriberyMode mode;
  if (mode_name == "bribery") mode = BriberyMode::Bribery;
  else if (mode_name == "microbribery") mode = BriberyMode::Microbribery;
  else throw UsageError("unknown bribery variant '" + mode_name + "'");
  InstanceFile f = load_instance(path);
  if (budget) f.budget = *budget;
  if (!f.budget) throw UsageError("no budget: give --budget or a 'budget' line");
  const BriberyInstance inst = to_bribery(f, mode);
  const BribeVerdict v = mode == BriberyMode::Bribery ? solve_bribery(inst) : solve_microbribery(inst);
  const Agenda& agenda = inst.profile.agenda();

  r.code = decision_code(v.decision);
  r.text << "variant: " << to_string(mode) << "\n";
  r.text << "budget: " << inst.budget << "\n";
  r.text << "verdict: " << verdict_word(v.decision) << "\n";
  r.json["command"] = "bribe";
  r.json["variant"] = to_string(mode);
  r.json["budget"] = inst.budget;
  r.json["verdict"] = verdict_word(v.decision);
  if (v.feasible()) {
    r.text << "distance change: " << v.delta << "\n";
    r.json["distance_change"] = v.delta;
    if (mode == BriberyMode::Bribery) {
      std::string judges;
      Json list = Json::array();
      for (std::size_t j : v.bribed_judges) {
        judges += (judges.empty() ? "" : " ") + std::to_string(j + 1);
        list.push_back(j + 1);
      }
      r.text << "bribed judges: " << judges << "\n";
      r.json["bribed_judges"] = list;
    }
    r.text << "outcome: " << assignment_text(agenda, outcome(apply_changes(inst.profile, v.changes))) << "\n";
    r.json["outcome"] = assignment_json(agenda, outcome(apply_changes(inst.profile, v.changes)));
    if (plan) {
      Json triples = Json::array();
      r.text << "plan:\n";
      for (const EntryChange& c : v.changes) {
        r.text << "  judge " << c.judge + 1 << " " << agenda.premises()[c.premise] << " " << (c.value ? 1 : 0) << "\n";
        triples.push_back(Json{{"judge", c.judge + 1}, {"premise", agenda.premises()[c.premise]}, {"value", c.value ? 1 : 0}});
      }
      r.json["plan"] = triples;
    }
  }
  r.text << "route: " << v.route << "\n";
  r.json["route"] = v.route;
}

void cmd_sat(const std::string& path, const std::string& strategy_name, std::uint64_t nodes, Report& r) {
  const auto strategy = parse_strategy(strategy_name);
  if (!strategy) throw UsageError("unknown strategy '" + strategy_name + "'");
  const SatProblem p = parse_cnf(read_file(path));
  r.json["command"] = "sat";
  try {
    const SatVerdict v = solve(p, *strategy, SatOptions{nodes});
    r.code = v.satisfiable ? kExitTrue : kExitFalse;
    r.text << (v.satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
    r.json["verdict"] = v.satisfiable ? "satisfiable" : "unsatisfiable";
    if (v.satisfiable) {
      std::string model;
      Json values = Json::array();
      for (std::size_t x = 0; x < p.variables; ++x) {
        model += (v.model[x] ? "" : "-") + std::to_string(x + 1) + " ";
        values.push_back(v.model[x] ? 1 : 0);
      }
      r.text << "model: " << model << "0\n";
      r.json["model"] = values;
    }
    r.text << "path: " << to_string(v.strategy) << "\n";
    r.json["path"] = to_string(v.strategy);
  } catch (const ResourceError& e) {
    r.code = kExitUndecided;
    r.text << "undecided\nnote: " << e.what() << "\n";
    r.json["verdict"] = "undecided";
    r.json["note"] = e.what();
  }
}

void cmd_classify(const std::string& path, bool cnf, Report& r) {
  std::vector<Clause> clauses;
  if (cnf) {
    clauses = parse_cnf(read_file(path)).clauses;
  } else {
    for (const auto& c : load_instance(path).profile.agenda().conclusions()) clauses.push_back(c.clause);
  }
  const CtSet shapes = shapes_of(clauses);
  int max_length = 0;
  for (ClauseShape s : shapes) max_length = std::max(max_length, s.length);
  auto within = [&](Preset p) {
    if (shapes.empty()) return true;
    const CtSet family = expand(p, max_length);
    return std::includes(family.begin(), family.end(), shapes.begin(), shapes.end());
  };
  std::string shape_list;
  Json shape_json = Json::array();
  for (ClauseShape s : shapes) {
    shape_list += " " + to_string(s);
    shape_json.push_back({s.length, s.negatives});
  }
  const bool pm = within(Preset::PositiveMonotone), mono = within(Preset::Monotone), horn = within(Preset::Horn);
  const bool two = max_length <= 2;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  r.text << "shapes:" << shape_list << "\n";
  r.text << "positive monotone: " << yn(pm) << "\n";
  r.text << "monotone: " << yn(mono) << "\n";
  r.text << "horn: " << yn(horn) << "\n";
  r.text << "length at most 2: " << yn(two) << "\n";
  r.json["command"] = "classify";
  r.json["shapes"] = shape_json;
  r.json["positive_monotone"] = pm;
  r.json["monotone"] = mono;
  r.json["horn"] = horn;
  r.json["length_at_most_2"] = two;
  if (!shapes.empty()) {
    const DichotomyVerdict v = dichotomy(shapes);
    std::string witness;
    for (ClauseShape s : v.witness) witness += " " + to_string(s);
    r.text << "necessary/exact: " << describe(v) << "\n";
    r.json["dichotomy"] = Json{{"complexity", v.complexity == Complexity::PolyTime ? "polytime" : "np-hard"},
                               {"condition", v.condition},
                               {"witness", witness.empty() ? "" : witness.substr(1)},
                               {"route", v.route ? to_string(*v.route) : ""}};
  }
}

// ---- generators ------------------------------------------------------------

enum class Source { None, Graph, Cnf, Pvc, Matrix, Instance };

Source source_kind(const std::string& name) {
  if (name == "sat-coloring" || name == "pvc-from-cubic-vc" || name == "hamming-monotone-clique" ||
      name == "hamming-horn-clique" || name == "microbribery-clique")
    return Source::Graph;
  if (name.rfind("necessary-", 0) == 0) return Source::Cnf;
  if (name == "hamming-from-pvc") return Source::Pvc;
  if (name == "bribery-from-lobbying") return Source::Matrix;
  if (name == "bribery-from-hamming" || name == "quota-lift" || name == "mirror-negate") return Source::Instance;
  if (name == "constant-gadget") return Source::None;
  throw UsageError("unknown reduction '" + name + "'");
}

struct GenParams {
  std::string name;
  std::string in;
  std::string out;
  std::size_t k = 0, s = 0, n = 3;
  int i = 3, j = 2;
  std::optional<std::size_t> gadget;
  std::string q = "1/2";
  int target = 1;
  bool three_judge = false, no_compensate = false, fresh_vars = false;
};

ReductionInput load_source(const GenParams& g) {
  ReductionInput in;
  in.k = g.k;
  in.s = g.s;
  in.n = g.n;
  in.i = g.i;
  in.j = g.j;
  in.gadget_size = g.gadget;
  in.q = parse_rational(g.q);
  in.target = g.target != 0;
  in.three_judge = g.three_judge;
  in.compensate = !g.no_compensate;
  in.mode = g.fresh_vars ? CopyMode::FreshVariables : CopyMode::Duplicates;
  const Source kind = source_kind(g.name);
  if (kind == Source::None) return in;
  if (g.in.empty()) throw UsageError("reduction '" + g.name + "' needs --in");
  const std::string text = read_file(g.in);
  switch (kind) {
    case Source::Graph: in.graph = parse_graph(text); break;
    case Source::Cnf: in.formula = parse_cnf(text); break;
    case Source::Pvc: in.pvc = parse_pvc(text); break;
    case Source::Matrix: in.matrix = parse_matrix(text); break;
    case Source::Instance: in.instance = to_manip(parse_instance(text)); break;
    case Source::None: break;
  }
  return in;
}

std::string print_generated(const GeneratedInstance& g) {
  struct Printer {
    std::string operator()(const ManipInstance& m) const { return print_instance(from_manip(m)); }
    std::string operator()(const BriberyInstance& b) const { return print_instance(from_bribery(b)); }
    std::string operator()(const SatProblem& p) const { return print_cnf(p); }
    std::string operator()(const PvcGraph& p) const { return print_pvc(p); }
  };
  return std::visit(Printer{}, g);
}

void cmd_gen(const GenParams& g, Report& r) {
  const ReductionInput in = load_source(g);
  const GeneratedInstance image = generate(g.name, in);
  const std::string body = print_generated(image);
  r.json["command"] = "gen";
  r.json["reduction"] = g.name;
  if (g.out.empty() || g.out == "-") {
    r.text << body;
    r.json["instance"] = body;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + g.out + "'");
  file << body;
  r.text << "wrote " << g.out << "\n";
  r.json["out"] = g.out;
}

void cmd_verify_reduction(const GenParams& g, Report& r) {
  const ReductionReport rep = verify_reduction(g.name, load_source(g));
  r.code = rep.agree() ? kExitTrue : kExitFalse;
  r.text << "reduction: " << rep.name << "\n";
  r.text << "source: " << (rep.source_yes ? "yes" : "no") << "\n";
  r.text << "image: " << (rep.image_yes ? "yes" : "no") << "\n";
  r.text << "side conditions: " << (rep.checks_ok ? "ok" : "violated") << "\n";
  r.text << "agreement: " << (rep.agree() ? "yes" : "no") << "\n";
  r.text << rep.detail;
  r.json["command"] = "verify";
  r.json["reduction"] = rep.name;
  r.json["source_yes"] = rep.source_yes;
  r.json["image_yes"] = rep.image_yes;
  r.json["checks_ok"] = rep.checks_ok;
  r.json["agree"] = rep.agree();
  r.json["detail"] = rep.detail;
}

void cmd_verify_instance(const std::string& path, const std::string& variant_name, std::optional<int> budget, Report& r) {
  InstanceFile f = load_instance(path);
  bool production = false, reference = false;
  Decision decision = Decision::No;
  if (variant_name == "bribery" || variant_name == "microbribery") {
    if (budget) f.budget = *budget;
    const BriberyMode mode = variant_name == "bribery" ? BriberyMode::Bribery : BriberyMode::Microbribery;
    const BriberyInstance inst = to_bribery(f, mode);
    const BribeVerdict v = mode == BriberyMode::Bribery ? solve_bribery(inst) : solve_microbribery(inst);
    decision = v.decision;
    production = v.feasible();
    reference = mode == BriberyMode::Bribery ? oracle::bribery(inst).feasible : oracle::microbribery(inst).feasible;
  } else {
    const auto variant = parse_variant(variant_name);
    if (!variant) throw UsageError("unknown variant '" + variant_name + "'");
    const ManipInstance inst = to_manip(f);
    const ManipRun run = solve_manip(inst, *variant, 1'000'000);
    decision = run.decision;
    production = run.decision == Decision::Yes;
    reference = oracle::manipulation(inst, *variant).feasible;
  }
  r.json["command"] = "verify";
  r.json["variant"] = variant_name;
  r.json["solver"] = verdict_word(decision);
  r.json["oracle"] = reference ? "feasible" : "infeasible";
  r.text << "variant: " << variant_name << "\n";
  r.text << "solver: " << verdict_word(decision) << "\n";
  r.text << "oracle: " << (reference ? "feasible" : "infeasible") << "\n";
  if (decision == Decision::Undecided) {
    r.code = kExitUndecided;
    r.json["agree"] = nullptr;
    r.text << "agreement: unknown\n";
    return;
  }
  r.code = production == reference ? kExitTrue : kExitFalse;
  r.json["agree"] = production == reference;
  r.text << "agreement: " << (production == reference ? "yes" : "no") << "\n";
}

void add_gen_options(CLI::App* cmd, GenParams& g) {
  cmd->add_option("--in", g.in, "source file (graph, cnf, signed graph, matrix or instance)");
  cmd->add_option("--k", g.k, "cover, clique, coloring or budget size");
  cmd->add_option("--s", g.s, "clique size for microbribery-clique");
  cmd->add_option("--i", g.i, "clause length (necessary-mms) or k1 (constant-gadget)");
  cmd->add_option("--j", g.j, "negative literals (necessary-mms) or k2 (constant-gadget)");
  cmd->add_option("--n", g.n, "judge count for necessary-special-quota");
  cmd->add_option("--gadget-size", g.gadget, "gadget copies for hamming-horn-clique");
  cmd->add_option("--q", g.q, "target quota for quota-lift");
  cmd->add_option("--target", g.target, "forced constant for constant-gadget (0 or 1)");
  cmd->add_flag("--three-judge", g.three_judge, "three-judge microbribery form");
  cmd->add_flag("--no-compensate", g.no_compensate, "skip the extra copies that offset premise goals");
  cmd->add_flag("--fresh-vars", g.fresh_vars, "fresh partner variables instead of duplicate conclusions");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Premise-based judgment aggregation: outcomes, manipulation, bribery and reductions", "jagg"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  std::string file, variant = "", strategy = "auto";
  std::size_t judge = 0;
  bool explain = false, plan = false, cnf = false;
  std::optional<int> budget;
  std::uint64_t nodes = 1'000'000;
  GenParams g;
  std::string reduction;

  auto* c_outcome = app.add_subcommand("outcome", "collective outcome of a profile");
  c_outcome->add_option("file", file)->required();
  auto* c_decide = app.add_subcommand("decide", "decision variables of one judge");
  c_decide->add_option("file", file)->required();
  c_decide->add_option("--judge", judge, "1-based judge")->required();
  auto* c_manip = app.add_subcommand("manipulate", "decide a manipulation variant");
  c_manip->add_option("file", file)->required();
  c_manip->add_option("--variant", variant, "robustness, possible, necessary, exact or hamming")->required();
  c_manip->add_flag("--explain", explain, "print the analysis behind the verdict");
  c_manip->add_option("--nodes", nodes, "search budget");
  auto* c_bribe = app.add_subcommand("bribe", "decide bribery or microbribery");
  c_bribe->add_option("file", file)->required();
  c_bribe->add_option("--variant", variant, "bribery or microbribery")->required();
  c_bribe->add_option("--budget", budget, "overrides the file's budget");
  c_bribe->add_flag("--plan", plan, "print the changes as judge/premise/value triples");
  auto* c_sat = app.add_subcommand("sat", "solve a clause list");
  c_sat->add_option("file", file)->required();
  c_sat->add_option("--strategy", strategy, "auto, horn, two-sat, monotone or dpll");
  c_sat->add_option("--nodes", nodes, "search budget");
  auto* c_classify = app.add_subcommand("classify", "clause families and the necessary/exact dichotomy");
  c_classify->add_option("file", file)->required();
  c_classify->add_flag("--cnf", cnf, "read a clause list instead of an instance file");
  auto* c_gen = app.add_subcommand("gen", "generate a reduction image");
  c_gen->add_option("name", g.name, "reduction name")->required();
  c_gen->add_option("--out", g.out, "output file (default: standard output)");
  add_gen_options(c_gen, g);
  auto* c_verify = app.add_subcommand("verify", "compare a solver or a reduction against brute force");
  c_verify->add_option("file", file, "instance file");
  c_verify->add_option("--variant", variant, "manipulation variant, bribery or microbribery");
  c_verify->add_option("--budget", budget, "overrides the file's budget");
  c_verify->add_option("--reduction", reduction, "reduction name; the source comes from --in");
  add_gen_options(c_verify, g);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitTrue;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Report r;
  try {
    if (c_outcome->parsed()) cmd_outcome(file, r);
    else if (c_decide->parsed()) cmd_decide(file, judge, r);
    else if (c_manip->parsed()) cmd_manipulate(file, variant, explain, nodes, r);
    else if (c_bribe->parsed()) cmd_bribe(file, variant, budget, plan, r);
    else if (c_sat->parsed()) cmd_sat(file, strategy, nodes, r);
    else if (c_classify->parsed()) cmd_classify(file, cnf, r);
    else if (c_gen->parsed()) cmd_gen(g, r);
    else if (c_verify->parsed()) {
      if (!reduction.empty()) {
        g.name = reduction;
        cmd_verify_reduction(g, r);
      } else {
        if (file.empty() || variant.empty()) throw UsageError("verify needs FILE --variant V or --reduction NAME --in SOURCE");
        cmd_verify_instance(file, variant, budget, r);
      }
    }
  } catch (const UsageError& e) {
    err << "jagg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "jagg: " << e.what() << "\n";
    return kExitData;
  } catch (const ResourceError& e) {
    err << "jagg: " << e.what() << "\n";
    return kExitUndecided;
  }
  if (json) {
    r.json["exit_code"] = r.code;
    out << r.json.dump(2) << "\n";
  } else {
    out << r.text.str();
  }
  return r.code;
}

}  // namespace jagg
