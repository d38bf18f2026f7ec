#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jagg/bribe.hpp"
#include "jagg/model.hpp"
#include "jagg/satkit.hpp"
#include "jagg/structures.hpp"

namespace jagg {

// Everything an instance file can hold. Manipulation files carry a
// manipulator, bribery files a budget; a file may carry both or neither.
struct InstanceFile {
  Profile profile;
  DesiredSet desired;
  std::optional<std::size_t> manipulator;  // 0-based
  std::optional<int> budget;
};

// Parse errors are DataError with a "line N: " prefix.
InstanceFile parse_instance(std::string_view text);
std::string print_instance(const InstanceFile& file);

ManipInstance to_manip(const InstanceFile& file);
BriberyInstance to_bribery(const InstanceFile& file, BriberyMode mode);
InstanceFile from_manip(const ManipInstance& inst);
InstanceFile from_bribery(const BriberyInstance& inst);

// Clause list: optional "p cnf V C" header, one clause per line as
// 1-based signed integers closed by 0, optional "freeze v=b" lines.
SatProblem parse_cnf(std::string_view text);
std::string print_cnf(const SatProblem& p);

// "vertices N" followed by one 1-based "u v" pair per edge.
Graph parse_graph(std::string_view text);
std::string print_graph(const Graph& g);

// "vertices N", then "+ u v" / "- u v" edges and optional "label v name".
PvcGraph parse_pvc(std::string_view text);
std::string print_pvc(const PvcGraph& g);

// One row of 0/1 entries per line, separated by spaces or written together.
Matrix parse_matrix(std::string_view text);
std::string print_matrix(const Matrix& m);

std::string read_file(const std::string& path);

}  // namespace jagg
