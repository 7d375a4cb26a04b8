#pragma once

// Driver behind the hatq command line tool.

#include <iosfwd>
#include <string>
#include <vector>

#include "hat/families.hpp"

namespace hat {

/// Parses "3", "2..6", "3,5,7,9" and mixtures such as "2..4,6" into a sorted
/// list without duplicates. "" and reversed ranges give an empty list.
/// Throws BadParameter on malformed input.
std::vector<int> parse_parameter_list(const std::string& text);

/// Parses "1", "2", "3", "full" or a comma list of them.
std::vector<Orientation> parse_orientation_list(const std::string& text);

struct RunConfig {
  std::string command;
  std::string which;  // tables: table2 | table3 | table4 | remark14c
  std::vector<int> x, y, z;
  std::vector<Orientation> ks;
  bool k_given = false;
  std::string subgroup;  // quotient
  std::string ambient = "aut";  // orientations: aut | grid
  std::string format = "text";
  std::size_t cap_elements = 4096;
  std::size_t cap_subgroups = 400;
  int jobs = 0;
  std::string out;
};

/// Family pairs selected by the config in canonical order (family, parameter,
/// k). Invalid combinations such as Y(3) with k=1 are skipped and named in
/// `skipped`.
std::vector<FamilySpec> selected_specs(const RunConfig& cfg, std::vector<std::string>* skipped = nullptr);

/// Runs the tool. Returns 0 when every check passed, 1 when some check
/// failed, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hat
