#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <unistd.h>

#include "misgeo/commands.hpp"
#include "misgeo/exact_solvers.hpp"
#include "misgeo/generators.hpp"
#include "misgeo/io.hpp"

using namespace misgeo;
namespace fs = std::filesystem;

namespace {

struct run_output {
  int code;
  std::string out, err;
};

run_output cli(std::vector<std::string> args) {
  args.insert(args.begin(), "misgeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct scratch_dir {
  fs::path path;
  scratch_dir() : path(fs::temp_directory_path() / ("misgeo_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~scratch_dir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    auto p = (path / name).string();
    if (!content.empty()) write_file(p, content);
    return p;
  }
};

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("generate is deterministic") {
  auto a = cli({"generate", "circle", "--n", "5", "--seed", "7"});
  auto b = cli({"generate", "circle", "--n", "5", "--seed", "7"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out != cli({"generate", "circle", "--n", "5", "--seed", "8"}).out);

  auto o = std::get<overlap_rep>(parse_rep_string(cli({"generate", "overlap", "--n", "4", "--seed", "1"}).out));
  std::set<std::int64_t> ends;
  for (const auto& iv : o.intervals) {
    ends.insert(iv.lo);
    ends.insert(iv.hi);
  }
  REQUIRE(ends.size() == 8);

  auto f = parse_dimacs_string(
      cli({"generate", "cnf", "--vars", "4", "--clauses", "6", "--k", "3", "--seed", "9"}).out);
  REQUIRE(f.m() == 6);
  for (const auto& c : f.clauses) {
    REQUIRE(c.size() == 3);
    for (int lit : c) REQUIRE((lit != 0 && std::abs(lit) <= 4));
  }
}

TEST_CASE("generate covers every kind") {
  for (std::string kind : {"circle", "overlap", "lshape", "rect", "bounded-strings"}) {
    auto r = cli({"generate", kind, "--n", "6", "--max-weight", "5"});
    REQUIRE(r.code == 0);
    auto rep = parse_rep_string(r.out);
    REQUIRE(validate(rep).empty());
    REQUIRE(weights_of(rep).size() == 6);
  }
  REQUIRE(cli({"generate", "hexagon"}).code == exit_code::invalid);
}

TEST_CASE("reduce then verify") {
  scratch_dir d;
  auto one = d.file("one.txt", "circle 1\n0 0 1\n");
  auto r = cli({"reduce", "--from", "circle", "--to", "overlap", one});
  REQUIRE(r.code == 0);
  REQUIRE(std::get<overlap_rep>(parse_rep_string(r.out)).n() == 1);

  auto ov = d.file("ov.txt", "overlap 2\n0 1 2\n1 3 4\n");
  auto sq = d.file("sq.txt");
  REQUIRE(cli({"reduce", "--from", "overlap", "--to", "squarel", ov, "--out", sq}).code == 0);
  auto shapes = std::get<square_l_rep>(read_rep_file(sq)).shapes;
  REQUIRE(shapes == std::vector<square_l>{{1, 2, 0}, {5, 6, 1}});
  auto side = nlohmann::json::parse(read_file(sq + ".json"));
  REQUIRE(side.at("shift_list").size() == 1);
  REQUIRE(side.at("shift_list")[0].at("offset") == "2");
  REQUIRE(cli({"verify", ov, sq}).out == "ok\n");

  auto c10 = d.file("c10.txt", generate_instance({"circle", 10, 3}));
  auto s10 = d.file("s10.txt");
  REQUIRE(cli({"reduce", "--from", "circle", "--to", "squarel", c10, "-o", s10}).code == 0);
  REQUIRE(cli({"verify", c10, s10}).code == exit_code::ok);

  REQUIRE(cli({"reduce", "--from", "overlap", "--to", "circle", ov}).code == exit_code::invalid);
  REQUIRE(cli({"reduce", "--from", "circle", "--to", "overlap", ov}).code == exit_code::invalid);
}

TEST_CASE("every legal reduction verifies") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const std::size_t n = 1 + seed % 12;
    auto circle = generate_instance({"circle", n, seed});
    auto overlap = generate_instance({"overlap", n, seed});
    const std::vector<std::tuple<std::string, std::string, std::string>> edges{
        {"circle", "overlap", circle},
        {"overlap", "gseg", overlap},
        {"overlap", "squarel", overlap},
        {"circle", "squarel", circle}};
    for (const auto& [from, to, text] : edges) {
      auto out = reduce_text(from, to, text);
      REQUIRE(verify_reps(parse_rep_string(text), parse_rep_string(out.text)).equal);
    }
    if (seed <= 50) {
      generate_params p{"cnf"};
      p.seed = seed;
      p.vars = 4;
      p.clauses = 1 + seed % 5;
      p.k = 2;
      auto out = reduce_text("cnf", "outerstring", generate_instance(p));
      auto layout = gadget_layout_from_json(out.sidecar);
      REQUIRE(layout.strings.size() == std::get<outerstring_rep>(parse_rep_string(out.text)).n());
    }
  }
}

TEST_CASE("verify reports a perturbed arm") {
  scratch_dir d;
  auto ov = d.file("ov.txt", "overlap 3\n0 0 2\n1 1 3\n2 4 5\n");
  auto sq = d.file("sq.txt");
  REQUIRE(cli({"reduce", "--from", "overlap", "--to", "squarel", ov, "-o", sq}).code == 0);
  auto rep = std::get<square_l_rep>(read_rep_file(sq));
  rep.shapes[0].arm = 4;  // horizontal arm now passes above the second shape
  auto bad = d.file("bad.txt", serialize(rep));
  auto r = cli({"verify", ov, bad});
  REQUIRE(r.code == exit_code::diff);
  REQUIRE(r.out.find("0 1 edge none") != std::string::npos);

  auto other = d.file("other.txt", "overlap 1\n5 0 1\n");
  REQUIRE(cli({"verify", ov, other}).code == exit_code::invalid);
}

TEST_CASE("solve") {
  scratch_dir d;
  auto one = d.file("one.txt", "circle 1\n0 0 1\n");
  auto r = cli({"solve", "--algo", "circle-dp", one});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.rfind("value: 1\n", 0) == 0);

  auto b = d.file("b.txt", generate_instance({"bounded-strings", 12, 5}));
  auto dp = nlohmann::json::parse(cli({"solve", "--algo", "bounded-dp", "--kappa", "2", b, "--json"}).out);
  auto brute = nlohmann::json::parse(cli({"solve", "--algo", "brute", b, "--json"}).out);
  REQUIRE(dp.at("value") == brute.at("value"));

  auto rect = d.file("rect.txt", "rect 3\n0 0 0 1 3\n1 0 0 1 1\n2 0 2 1 3\n");
  auto w = d.file("w.txt", "0 5\n1 3\n2 3\n");
  auto iv = nlohmann::json::parse(cli({"solve", "--algo", "interval", rect, "--weights", w, "--json"}).out);
  REQUIRE(iv.at("value") == 6);

  auto big = d.file("big.txt", generate_instance({"overlap", 30, 1}));
  REQUIRE(cli({"solve", "--algo", "brute", big}).code == exit_code::size_guard);
  REQUIRE(cli({"solve", "--algo", "bounded-dp", big}).code == exit_code::invalid);
  auto broken = d.file("broken.txt", "overlap 2\n0 0 1\n");
  REQUIRE(cli({"solve", "--algo", "brute", broken}).code == exit_code::invalid);
  REQUIRE(cli({"solve", "--algo", "brute"}).code == exit_code::invalid);
}

TEST_CASE("approx") {
  scratch_dir d;
  auto four = d.file("four.txt", "lshape 4\n0 UL 0 0 1 1\n1 UL 5 0 1 1\n2 UL 10 0 1 1\n3 UL 15 0 1 1\n");
  auto r = nlohmann::json::parse(cli({"approx", "--kind", "lshape", four, "--json"}).out);
  REQUIRE(r.at("value") == 4);
  REQUIRE(r.at("exact") == true);

  generate_params p{"lshape", 12, 3};
  p.mixed = true;
  auto mixed = d.file("mixed.txt", generate_instance(p));
  auto m = cli({"approx", "--kind", "lshape", mixed});
  REQUIRE(m.code == 0);
  REQUIRE(m.out.find("opt bracket") != std::string::npos);

  p = generate_params{"rect", 12, 4};
  p.max_weight = 10;
  auto rect = d.file("rect.txt", generate_instance(p));
  auto a = nlohmann::json::parse(cli({"approx", "--kind", "rect", rect, "--json"}).out);
  auto opt = nlohmann::json::parse(cli({"solve", "--algo", "brute", rect, "--json"}).out);
  REQUIRE(a.at("value").get<double>() <= opt.at("value").get<double>());
  REQUIRE(a.at("opt_bracket")[1].get<double>() >= opt.at("value").get<double>());
}

TEST_CASE("render") {
  scratch_dir d;
  auto one = d.file("one.txt", "squarel 1\n0 0 2\n");
  auto svg = cli({"render", one}).out;
  REQUIRE(svg.find("<svg") != std::string::npos);
  REQUIRE(count(svg, "<line") == 3);
  REQUIRE(svg == cli({"render", one}).out);

  auto ov = d.file("ov.txt", "overlap 3\n0 0 4\n1 1 2\n2 3 6\n");
  auto bars = cli({"render", ov}).out;
  REQUIRE(count(bars, "<line class=\"bar\"") == 3);

  auto cnf = d.file("f.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
  auto g = d.file("g.txt");
  REQUIRE(cli({"reduce", "--from", "cnf", "--to", "outerstring", cnf, "-o", g}).code == 0);
  auto picture = cli({"render", g, "--layout", g + ".json"}).out;
  REQUIRE(count(picture, "<polyline") == std::get<outerstring_rep>(read_rep_file(g)).n());
  REQUIRE(picture.find(">c1<") != std::string::npos);
  REQUIRE(picture.find(">c2<") != std::string::npos);
}

TEST_CASE("bench") {
  auto r = cli({"bench", "--suite", "reductions", "--sizes", "1024,2048", "--seeds", "1,2"});
  REQUIRE(r.code == 0);
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  REQUIRE(line == "kind,n,kappa,seed,op,ms,queries,subproblems,nodes");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  REQUIRE(rows == 12);
  REQUIRE(r.err.find("squarel-build 2048") != std::string::npos);

  auto records = run_bench({"reductions", {1024, 2048, 4096}, {1}, 2});
  for (const auto& rec : records)
    if (rec.op == "squarel-build") REQUIRE(rec.queries <= 2 * rec.n);

  auto dp = run_bench({"bounded-dp", {50, 100}, {1}, 2});
  const double f = static_cast<double>(separator_count(2));
  for (const auto& rec : dp)
    REQUIRE(static_cast<double>(rec.subproblems) <= static_cast<double>(rec.n * rec.n) * f * f);

  REQUIRE(run_bench({"circle-dp", {100, 200}, {1}, 2}).size() == 2);
  REQUIRE(run_bench({"approx", {8}, {1}, 2}).size() == 2);
  REQUIRE(cli({"bench", "--suite", "nope"}).code == exit_code::invalid);
}

TEST_CASE("help lists the random models") {
  auto r = cli({"--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("Random models") != std::string::npos);
}

TEST_CASE("gadget pipeline through the command line") {
  scratch_dir d;
  int unsat = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::string vars = std::to_string(2 * (1 + seed % 3)), m = std::to_string(1 + seed % 6);
    const std::string k = std::to_string(1 + seed % 2);
    auto f = d.file("f.cnf");
    auto g = d.file("g.txt");
    REQUIRE(cli({"generate", "cnf", "--vars", vars, "--clauses", m, "--k", k, "--seed", std::to_string(seed), "-o", f})
                .code == 0);
    REQUIRE(cli({"reduce", "--from", "cnf", "--to", "outerstring", f, "-o", g}).code == 0);
    auto res = nlohmann::json::parse(cli({"solve", "--algo", "outerstring-exact", g, "--json"}).out);
    const bool sat = sat_brute_force(parse_dimacs_string(read_file(f)));
    REQUIRE((res.at("value").get<int>() == std::stoi(m)) == sat);
    unsat += !sat;
  }
  CHECK(unsat > 0);
}
