#include "misgeo/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "misgeo/io.hpp"

namespace misgeo {

std::string cnf_problem(const cnf_formula& f) {
  if (f.var_count < 0) return "negative variable count";
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.empty()) return "empty clause " + std::to_string(c + 1);
    std::set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.var_count)
        return "literal " + std::to_string(lit) + " out of range in clause " + std::to_string(c + 1);
      if (!seen.insert(lit).second) return "duplicate literal in clause " + std::to_string(c + 1);
    }
  }
  return {};
}

bool clause_satisfied(const std::vector<int>& clause, unsigned long long assignment) {
  for (int lit : clause) {
    bool value = (assignment >> (std::abs(lit) - 1)) & 1ull;
    if ((lit > 0) == value) return true;
  }
  return false;
}

cnf_formula parse_dimacs(std::istream& in) {
  cnf_formula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(ss >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw parse_error(line_no, "bad 'p cnf' header");
      header = true;
      f.var_count = static_cast<int>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header) throw parse_error(line_no, "clause before 'p cnf' header");
    std::istringstream body(line);
    for (std::string tok; body >> tok;) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error(line_no, "bad literal '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!header) throw parse_error(line_no, "missing 'p cnf' header");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != declared)
    throw parse_error(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                   std::to_string(f.clauses.size()));
  if (auto p = cnf_problem(f); !p.empty()) throw parse_error(line_no, p);
  return f;
}

cnf_formula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const cnf_formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace misgeo
