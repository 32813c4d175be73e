#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "misgeo/cnf.hpp"
#include "misgeo/reductions.hpp"
#include "misgeo/representations.hpp"

namespace misgeo {

inline constexpr int k_sat_var_limit = 24;

/// Exhaustive satisfiability check. Throws size_guard_error above 24 variables.
bool sat_brute_force(const cnf_formula& f);

struct generate_params {
  std::string kind;  // circle, overlap, lshape, rect, bounded-strings, cnf
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::int64_t box = 0;    // lshape / rect coordinate box, default 2n
  bool mixed = false;      // lshape: all four kinds instead of UL only
  std::int64_t kappa = 2;  // bounded-strings
  std::int64_t width = 0;  // bounded-strings ground range, default 2n + kappa
  std::int64_t span = 0;   // overlap endpoint range, default 4n
  int vars = 4;            // cnf
  std::size_t clauses = 6;
  int k = 3;
  weight_t max_weight = 0;  // > 0 attaches weights uniform in [1, max_weight]
};

/// Deterministic instance text for the given parameters.
std::string generate_instance(const generate_params& p);

struct reduce_output {
  std::string text;
  nlohmann::json sidecar;
};

/// Legal pairs: circle->overlap, overlap->gseg, overlap->squarel,
/// circle->squarel, cnf->outerstring.
reduce_output reduce_text(const std::string& from, const std::string& to, const std::string& input);

nlohmann::json to_json(const shift_list& shifts);
nlohmann::json to_json(const gadget_layout& layout);
gadget_layout gadget_layout_from_json(const nlohmann::json& j);

struct verify_outcome {
  bool equal = false;
  std::vector<edge_diff> diffs;  // first 10 differing pairs
};

/// Throws std::invalid_argument("vertex mismatch") when the id sets differ.
verify_outcome verify_reps(const any_rep& a, const any_rep& b, gseg_mode mode = gseg_mode::implicit);

/// Deterministic SVG 1.1 drawing. Clause points are labeled when a gadget
/// layout is supplied.
std::string render_svg(const any_rep& r, const gadget_layout* layout = nullptr);

struct bench_record {
  std::string kind;
  std::size_t n = 0;
  std::int64_t kappa = 0;
  std::uint64_t seed = 0;
  std::string op;
  double ms = 0.0;
  std::uint64_t queries = 0;
  std::uint64_t subproblems = 0;
  std::uint64_t nodes = 0;
};

struct bench_params {
  std::string suite;  // reductions, circle-dp, bounded-dp, approx
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::int64_t kappa = 2;
};

/// Runs the suite; throws std::runtime_error when a counter exceeds its bound
/// (2n queries, n^2 f(kappa)^2 subproblems).
std::vector<bench_record> run_bench(const bench_params& p);
std::string bench_csv(const std::vector<bench_record>& records);
/// Mean time per (op, n) and the ratio to the previous size.
std::string bench_ratio_table(const std::vector<bench_record>& records);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int diff = 1;
inline constexpr int invalid = 2;
inline constexpr int size_guard = 3;
}  // namespace exit_code

}  // namespace misgeo
