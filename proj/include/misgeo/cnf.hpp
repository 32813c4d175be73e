#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace misgeo {

struct cnf_formula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;

  std::size_t m() const { return clauses.size(); }
  friend bool operator==(const cnf_formula&, const cnf_formula&) = default;
};

/// Empty on success, otherwise a description of the first problem found.
std::string cnf_problem(const cnf_formula& f);

/// Value of variable v (1-based) under assignment bits, bit v-1.
bool clause_satisfied(const std::vector<int>& clause, unsigned long long assignment);

cnf_formula parse_dimacs(std::istream& in);
cnf_formula parse_dimacs_string(const std::string& text);
std::string serialize_dimacs(const cnf_formula& f);

}  // namespace misgeo
