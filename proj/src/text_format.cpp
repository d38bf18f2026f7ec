#include "jagg/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jagg/error.hpp"

namespace jagg {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, bool dimacs_comments = false) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (dimacs_comments && !line.tokens.empty() && line.tokens[0] == "c") line.tokens.clear();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw DataError("line " + std::to_string(line) + ": " + message);
}

long long to_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::size_t to_index(const std::string& tok, std::size_t line, std::size_t count, const char* what) {
  const long long v = to_int(tok, line);
  if (v < 1 || static_cast<std::size_t>(v) > count)
    fail(line, std::string(what) + " " + tok + " is out of range 1.." + std::to_string(count));
  return static_cast<std::size_t>(v - 1);
}

bool to_bit(const std::string& tok, std::size_t line) {
  if (tok == "1") return true;
  if (tok == "0") return false;
  fail(line, "expected 0 or 1, got '" + tok + "'");
}

std::pair<std::string, bool> split_assignment(const std::string& tok, std::size_t line) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0) fail(line, "expected name=value, got '" + tok + "'");
  return {tok.substr(0, eq), to_bit(tok.substr(eq + 1), line)};
}

bool valid_name(const std::string& s) {
  if (s.empty() || s[0] == '-') return false;
  return s.find_first_of("=:#") == std::string::npos;
}

void need_args(const Line& l, std::size_t count) {
  if (l.tokens.size() != count + 1) fail(l.number, "'" + l.tokens[0] + "' takes " + std::to_string(count) + " argument(s)");
}

std::string bit(bool b) { return b ? "1" : "0"; }

}  // namespace

// ---- instance files --------------------------------------------------------

InstanceFile parse_instance(std::string_view text) {
  std::optional<std::size_t> judges, manipulator_line, budget_line, desired_line;
  std::optional<Rational> quota;
  std::optional<Line> vars;
  std::vector<Line> concs;
  std::map<std::size_t, Line> judge_lines;
  Line manipulator, budget, desired;

  for (const Line& l : tokenize(text)) {
    const std::string& key = l.tokens[0];
    auto once = [&](bool seen) {
      if (seen) fail(l.number, "'" + key + "' given twice");
    };
    if (key == "judges") {
      once(judges.has_value());
      need_args(l, 1);
      const long long n = to_int(l.tokens[1], l.number);
      if (n < 2) fail(l.number, "a profile needs at least two judges");
      judges = static_cast<std::size_t>(n);
    } else if (key == "quota") {
      once(quota.has_value());
      need_args(l, 1);
      try {
        quota = parse_rational(l.tokens[1]);
      } catch (const DataError& e) {
        fail(l.number, e.what());
      }
      if (*quota < 0 || *quota >= 1) fail(l.number, "quota must lie in [0,1)");
    } else if (key == "vars") {
      once(vars.has_value());
      if (l.tokens.size() < 2) fail(l.number, "'vars' needs at least one name");
      vars = l;
    } else if (key == "conc") {
      if (l.tokens.size() < 4 || l.tokens[2] != "=") fail(l.number, "expected 'conc NAME = LITERAL...'");
      concs.push_back(l);
    } else if (key == "judge") {
      if (l.tokens.size() < 2 || l.tokens[1].size() < 2 || l.tokens[1].back() != ':')
        fail(l.number, "expected 'judge N: name=value ...'");
      const long long j = to_int(l.tokens[1].substr(0, l.tokens[1].size() - 1), l.number);
      if (j < 1) fail(l.number, "judge numbers start at 1");
      if (!judge_lines.emplace(static_cast<std::size_t>(j), l).second) fail(l.number, "judge " + std::to_string(j) + " given twice");
    } else if (key == "manipulator") {
      once(manipulator_line.has_value());
      need_args(l, 1);
      manipulator_line = l.number;
      manipulator = l;
    } else if (key == "desired:") {
      once(desired_line.has_value());
      desired_line = l.number;
      desired = l;
    } else if (key == "budget") {
      once(budget_line.has_value());
      need_args(l, 1);
      budget_line = l.number;
      budget = l;
    } else {
      fail(l.number, "unknown key '" + key + "'");
    }
  }
  if (!judges) throw DataError("missing 'judges' line");
  if (!quota) throw DataError("missing 'quota' line");
  if (!vars) throw DataError("missing 'vars' line");

  std::vector<std::string> premises(vars->tokens.begin() + 1, vars->tokens.end());
  std::map<std::string, std::size_t> premise_index;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!valid_name(premises[i])) fail(vars->number, "bad name '" + premises[i] + "'");
    if (!premise_index.emplace(premises[i], i).second) fail(vars->number, "duplicate name '" + premises[i] + "'");
  }

  std::vector<Conclusion> conclusions;
  std::set<std::string> conclusion_names;
  for (const Line& l : concs) {
    const std::string& name = l.tokens[1];
    if (!valid_name(name)) fail(l.number, "bad name '" + name + "'");
    if (premise_index.count(name) || !conclusion_names.insert(name).second) fail(l.number, "duplicate name '" + name + "'");
    std::vector<Literal> lits;
    for (std::size_t t = 3; t < l.tokens.size(); ++t) {
      std::string tok = l.tokens[t];
      const bool negated = tok[0] == '-';
      if (negated) tok = tok.substr(1);
      auto it = premise_index.find(tok);
      if (it == premise_index.end()) fail(l.number, "unknown premise '" + tok + "'");
      lits.push_back({it->second, negated});
    }
    try {
      conclusions.push_back({name, Clause(std::move(lits))});
    } catch (const DataError& e) {
      fail(l.number, e.what());
    }
  }
  Agenda agenda(premises, conclusions);

  std::vector<JudgmentSet> js;
  for (std::size_t j = 1; j <= *judges; ++j) {
    auto it = judge_lines.find(j);
    if (it == judge_lines.end()) throw DataError("missing judgment set for judge " + std::to_string(j));
    const Line& l = it->second;
    Assignment a(premises.size());
    std::vector<bool> seen(premises.size(), false);
    for (std::size_t t = 2; t < l.tokens.size(); ++t) {
      auto [name, value] = split_assignment(l.tokens[t], l.number);
      auto p = premise_index.find(name);
      if (p == premise_index.end()) fail(l.number, "unknown premise '" + name + "'");
      if (seen[p->second]) fail(l.number, "premise '" + name + "' given twice");
      seen[p->second] = true;
      a[p->second] = value;
    }
    for (std::size_t x = 0; x < premises.size(); ++x)
      if (!seen[x]) fail(l.number, "no value for premise '" + premises[x] + "'");
    js.push_back({std::move(a)});
  }
  if (!judge_lines.empty() && judge_lines.rbegin()->first > *judges)
    fail(judge_lines.rbegin()->second.number, "judge number exceeds the declared count");

  InstanceFile file{Profile(agenda, std::move(js), *quota), DesiredSet::empty_for(agenda), std::nullopt, std::nullopt};

  if (desired_line) {
    for (std::size_t t = 1; t < desired.tokens.size(); ++t) {
      auto [name, value] = split_assignment(desired.tokens[t], desired.number);
      std::optional<bool>* slot = nullptr;
      if (auto p = agenda.find_premise(name)) slot = &file.desired.premise_goals[*p];
      else if (auto c = agenda.find_conclusion(name)) slot = &file.desired.conclusion_goals[*c];
      else fail(desired.number, "unknown formula '" + name + "'");
      if (slot->has_value()) fail(desired.number, "goal for '" + name + "' given twice");
      *slot = value;
    }
    if (!consistency_check(file.desired, agenda).satisfiable) fail(desired.number, "desired set is inconsistent");
  }
  if (manipulator_line) {
    file.manipulator = to_index(manipulator.tokens[1], manipulator.number, *judges, "manipulator");
    if (!file.desired.contained_in(agenda, file.profile.judgment(*file.manipulator)))
      fail(desired_line.value_or(manipulator.number), "desired set is not part of the manipulator's judgment set");
  }
  if (budget_line) {
    const long long k = to_int(budget.tokens[1], budget.number);
    if (k < 0) fail(budget.number, "budget must be non-negative");
    file.budget = static_cast<int>(k);
  }
  return file;
}

std::string print_instance(const InstanceFile& f) {
  const Agenda& agenda = f.profile.agenda();
  std::ostringstream out;
  out << "judges " << f.profile.judge_count() << "\n";
  out << "quota " << to_string(f.profile.quota()) << "\n";
  out << "vars";
  for (const auto& p : agenda.premises()) out << " " << p;
  out << "\n";
  for (const auto& c : agenda.conclusions()) {
    out << "conc " << c.name << " =";
    for (Literal l : c.clause.literals()) out << " " << (l.negated ? "-" : "") << agenda.premises()[l.var];
    out << "\n";
  }
  for (std::size_t j = 0; j < f.profile.judge_count(); ++j) {
    out << "judge " << j + 1 << ":";
    for (std::size_t x = 0; x < agenda.premise_count(); ++x)
      out << " " << agenda.premises()[x] << "=" << bit(f.profile.judgment(j).premise_values[x]);
    out << "\n";
  }
  if (f.manipulator) out << "manipulator " << *f.manipulator + 1 << "\n";
  if (f.desired.goal_count() > 0) {
    out << "desired:";
    for (std::size_t x = 0; x < agenda.premise_count(); ++x)
      if (f.desired.premise_goals[x]) out << " " << agenda.premises()[x] << "=" << bit(*f.desired.premise_goals[x]);
    for (std::size_t c = 0; c < agenda.conclusion_count(); ++c)
      if (f.desired.conclusion_goals[c]) out << " " << agenda.conclusions()[c].name << "=" << bit(*f.desired.conclusion_goals[c]);
    out << "\n";
  }
  if (f.budget) out << "budget " << *f.budget << "\n";
  return out.str();
}

ManipInstance to_manip(const InstanceFile& file) {
  if (!file.manipulator) throw UsageError("instance file has no 'manipulator' line");
  return ManipInstance{file.profile, *file.manipulator, file.desired};
}

BriberyInstance to_bribery(const InstanceFile& file, BriberyMode mode) {
  if (!file.budget) throw UsageError("instance file has no 'budget' line");
  return BriberyInstance{file.profile, file.desired, *file.budget, mode};
}

InstanceFile from_manip(const ManipInstance& inst) { return {inst.profile, inst.desired, inst.manipulator, std::nullopt}; }

InstanceFile from_bribery(const BriberyInstance& inst) { return {inst.profile, inst.desired, std::nullopt, inst.budget}; }

// ---- clause lists ----------------------------------------------------------

SatProblem parse_cnf(std::string_view text) {
  std::optional<std::size_t> declared_vars, declared_clauses;
  std::size_t header_line = 0;
  std::vector<std::pair<std::size_t, std::vector<long long>>> raw;
  std::vector<std::pair<std::size_t, std::string>> freezes;
  for (const Line& l : tokenize(text, true)) {
    if (l.tokens[0] == "p") {
      if (declared_vars) fail(l.number, "header given twice");
      if (!raw.empty() || !freezes.empty()) fail(l.number, "header must come first");
      if (l.tokens.size() != 4 || l.tokens[1] != "cnf") fail(l.number, "expected 'p cnf VARIABLES CLAUSES'");
      const long long v = to_int(l.tokens[2], l.number), c = to_int(l.tokens[3], l.number);
      if (v < 0 || c < 0) fail(l.number, "negative counts in header");
      declared_vars = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      header_line = l.number;
    } else if (l.tokens[0] == "freeze") {
      if (l.tokens.size() < 2) fail(l.number, "expected 'freeze v=b ...'");
      for (std::size_t t = 1; t < l.tokens.size(); ++t) freezes.emplace_back(l.number, l.tokens[t]);
    } else {
      std::vector<long long> lits;
      for (const auto& tok : l.tokens) lits.push_back(to_int(tok, l.number));
      if (lits.back() != 0) fail(l.number, "clause must end with 0");
      lits.pop_back();
      if (lits.empty()) fail(l.number, "empty clause");
      for (long long v : lits)
        if (v == 0) fail(l.number, "0 inside a clause");
      raw.emplace_back(l.number, std::move(lits));
    }
  }
  std::size_t max_var = 0;
  for (const auto& [line, lits] : raw)
    for (long long v : lits) max_var = std::max(max_var, static_cast<std::size_t>(v < 0 ? -v : v));
  SatProblem p;
  p.variables = declared_vars.value_or(max_var);
  if (max_var > p.variables) fail(header_line, "clauses use more variables than declared");
  if (declared_clauses && *declared_clauses != raw.size()) fail(header_line, "clause count differs from header");
  for (const auto& [line, lits] : raw) {
    std::vector<Literal> c;
    for (long long v : lits) c.push_back({static_cast<std::size_t>((v < 0 ? -v : v) - 1), v < 0});
    try {
      p.clauses.emplace_back(std::move(c));
    } catch (const DataError& e) {
      fail(line, e.what());
    }
  }
  if (!freezes.empty()) {
    p.frozen.assign(p.variables, std::nullopt);
    for (const auto& [line, tok] : freezes) {
      auto [name, value] = split_assignment(tok, line);
      const std::size_t v = to_index(name, line, p.variables, "variable");
      if (p.frozen[v]) fail(line, "variable " + name + " frozen twice");
      p.frozen[v] = value;
    }
  }
  return p;
}

std::string print_cnf(const SatProblem& p) {
  std::ostringstream out;
  out << "p cnf " << p.variables << " " << p.clauses.size() << "\n";
  for (const Clause& c : p.clauses) {
    for (Literal l : c.literals()) out << (l.negated ? "-" : "") << l.var + 1 << " ";
    out << "0\n";
  }
  bool any = false;
  for (std::size_t v = 0; v < p.frozen.size(); ++v)
    if (p.frozen[v]) {
      out << (any ? " " : "freeze ") << v + 1 << "=" << bit(*p.frozen[v]);
      any = true;
    }
  if (any) out << "\n";
  return out.str();
}

// ---- graphs ----------------------------------------------------------------

namespace {

std::size_t vertex_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw DataError("missing 'vertices N' line");
  const Line& h = lines[0];
  if (h.tokens[0] != "vertices" || h.tokens.size() != 2) fail(h.number, "expected 'vertices N'");
  const long long n = to_int(h.tokens[1], h.number);
  if (n < 0) fail(h.number, "negative vertex count");
  return static_cast<std::size_t>(n);
}

std::pair<std::size_t, std::size_t> read_edge(const Line& l, std::size_t first, std::size_t n,
                                              std::set<std::pair<std::size_t, std::size_t>>& seen) {
  if (l.tokens.size() != first + 2) fail(l.number, "expected an edge 'u v'");
  const std::size_t u = to_index(l.tokens[first], l.number, n, "vertex");
  const std::size_t v = to_index(l.tokens[first + 1], l.number, n, "vertex");
  if (u == v) fail(l.number, "self-loop");
  if (!seen.insert({std::min(u, v), std::max(u, v)}).second) fail(l.number, "edge given twice");
  return {u, v};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  Graph g;
  g.n = vertex_header(lines);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) g.edges.push_back(read_edge(lines[i], 0, g.n, seen));
  return g;
}

std::string print_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.n << "\n";
  for (auto [u, v] : g.edges) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

PvcGraph parse_pvc(std::string_view text) {
  const auto lines = tokenize(text);
  PvcGraph g;
  g.n = vertex_header(lines);
  std::set<std::pair<std::size_t, std::size_t>> plus, minus;
  std::vector<std::string> names(g.n);
  bool labelled = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "+") {
      g.plus.push_back(read_edge(l, 1, g.n, plus));
    } else if (l.tokens[0] == "-") {
      g.minus.push_back(read_edge(l, 1, g.n, minus));
    } else if (l.tokens[0] == "label") {
      if (l.tokens.size() != 3) fail(l.number, "expected 'label v name'");
      const std::size_t v = to_index(l.tokens[1], l.number, g.n, "vertex");
      if (!valid_name(l.tokens[2])) fail(l.number, "bad name '" + l.tokens[2] + "'");
      if (!names[v].empty()) fail(l.number, "vertex labelled twice");
      names[v] = l.tokens[2];
      labelled = true;
    } else {
      fail(l.number, "expected '+ u v', '- u v' or 'label v name'");
    }
  }
  if (labelled) {
    for (std::size_t v = 0; v < g.n; ++v)
      if (names[v].empty()) throw DataError("vertex " + std::to_string(v + 1) + " has no label");
    g.names = std::move(names);
  }
  return g;
}

std::string print_pvc(const PvcGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.n << "\n";
  for (std::size_t v = 0; v < g.names.size(); ++v) out << "label " << v + 1 << " " << g.names[v] << "\n";
  for (auto [u, v] : g.plus) out << "+ " << u + 1 << " " << v + 1 << "\n";
  for (auto [u, v] : g.minus) out << "- " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Matrix parse_matrix(std::string_view text) {
  Matrix m;
  std::size_t width_line = 0;
  for (const Line& l : tokenize(text)) {
    std::vector<int> row;
    for (const auto& tok : l.tokens)
      for (char ch : tok) {
        if (ch != '0' && ch != '1') fail(l.number, "matrix entries must be 0 or 1");
        row.push_back(ch - '0');
      }
    if (!m.empty() && row.size() != m[0].size())
      fail(l.number, "row length " + std::to_string(row.size()) + " differs from line " + std::to_string(width_line));
    if (m.empty()) width_line = l.number;
    m.push_back(std::move(row));
  }
  if (m.empty()) throw DataError("empty matrix");
  return m;
}

std::string print_matrix(const Matrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jagg
