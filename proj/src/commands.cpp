#include "misgeo/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "misgeo/approx.hpp"
#include "misgeo/exact_solvers.hpp"
#include "misgeo/generators.hpp"
#include "misgeo/io.hpp"

namespace misgeo {

bool sat_brute_force(const cnf_formula& f) {
  if (f.var_count > k_sat_var_limit)
    throw size_guard_error("too many variables: limit is " + std::to_string(k_sat_var_limit));
  if (auto p = cnf_problem(f); !p.empty()) throw std::invalid_argument(p);
  const unsigned long long total = 1ull << f.var_count;
  for (unsigned long long a = 0; a < total; ++a) {
    bool all = true;
    for (const auto& clause : f.clauses)
      if (!clause_satisfied(clause, a)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

namespace {

template <class Rep>
Rep with_weights(Rep r, const generate_params& p, std::size_t n) {
  if (p.max_weight > 0) {
    std::vector<shape_id> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(static_cast<shape_id>(i));
    // separate stream so weights do not perturb the geometry
    r.weights = random_weights(ids, 1, p.max_weight, p.seed ^ 0x9e3779b97f4a7c15ull);
  }
  return r;
}

}  // namespace

std::string generate_instance(const generate_params& p) {
  if (p.kind == "cnf") return serialize_dimacs(random_cnf(p.vars, p.clauses, p.k, p.seed));
  if (p.n < 1) throw std::invalid_argument("n must be at least 1");
  const std::int64_t box = p.box > 0 ? p.box : static_cast<std::int64_t>(2 * p.n);
  if (p.kind == "circle") return serialize(with_weights(random_circle(p.n, p.seed), p, p.n));
  if (p.kind == "overlap") return serialize(with_weights(random_overlap(p.n, p.seed, p.span), p, p.n));
  if (p.kind == "lshape")
    return serialize(with_weights(
        random_lshapes(p.n, p.seed, box, p.mixed ? quadrant_mix::mixed : quadrant_mix::ul_only), p, p.n));
  if (p.kind == "rect") return serialize(with_weights(random_rectangles(p.n, p.seed, box), p, p.n));
  if (p.kind == "bounded-strings")
    return serialize(as_outerstring(with_weights(random_bounded_strings(p.n, p.kappa, p.seed, p.width), p, p.n)));
  throw std::invalid_argument("unknown kind '" + p.kind + "'");
}

nlohmann::json to_json(const shift_list& shifts) {
  auto arr = nlohmann::json::array();
  for (const auto& s : shifts) arr.push_back({{"interval", s.interval_id}, {"offset", s.offset.str()}});
  return arr;
}

nlohmann::json to_json(const gadget_layout& layout) {
  nlohmann::json j;
  j["alpha"] = layout.alpha;
  j["padded_vars"] = layout.padded_vars;
  j["clause_points"] = layout.clause_points;
  j["blocks_a"] = layout.blocks_a;
  j["blocks_b"] = layout.blocks_b;
  auto strings = nlohmann::json::array();
  for (const auto& [id, info] : layout.strings)
    strings.push_back({{"id", id},
                       {"side", info.side == gadget_side::A ? "A" : "B"},
                       {"assignment", info.assignment},
                       {"clause", info.clause}});
  j["strings"] = strings;
  return j;
}

gadget_layout gadget_layout_from_json(const nlohmann::json& j) {
  gadget_layout g;
  g.alpha = j.at("alpha").get<std::int64_t>();
  g.padded_vars = j.value("padded_vars", 0);
  g.clause_points = j.at("clause_points").get<std::vector<std::pair<std::int64_t, std::int64_t>>>();
  g.blocks_a = j.value("blocks_a", std::vector<std::pair<std::int64_t, std::int64_t>>{});
  g.blocks_b = j.value("blocks_b", std::vector<std::pair<std::int64_t, std::int64_t>>{});
  for (const auto& s : j.value("strings", nlohmann::json::array()))
    g.strings[s.at("id").get<shape_id>()] =
        gadget_string_info{s.at("side").get<std::string>() == "A" ? gadget_side::A : gadget_side::B,
                           s.at("assignment").get<std::uint32_t>(), s.at("clause").get<std::uint32_t>()};
  return g;
}

namespace {

template <class Rep>
Rep expect_rep(const any_rep& r, const std::string& name) {
  if (!std::holds_alternative<Rep>(r))
    throw std::invalid_argument("expected a " + name + " file, got " + format_name(r));
  Rep out = std::get<Rep>(r);
  require_valid(out);
  return out;
}

nlohmann::json square_l_sidecar(const square_l_reduction& red, std::size_t n) {
  return {{"reduction", "squarel"},
          {"n", n},
          {"shift_list", to_json(red.shifts)},
          {"queries", red.queries},
          {"query_bound", 2 * n},
          {"full_graph_checked", red.full_graph_checked}};
}

}  // namespace

reduce_output reduce_text(const std::string& from, const std::string& to, const std::string& input) {
  reduce_output out;
  if (from == "cnf") {
    if (to != "outerstring") throw std::invalid_argument("illegal reduction cnf->" + to);
    auto f = parse_dimacs_string(input);
    auto [rep, layout] = cnf_to_outerstring(f);
    out.text = serialize(rep);
    out.sidecar = to_json(layout);
    out.sidecar["reduction"] = "outerstring";
    out.sidecar["m"] = f.m();
    return out;
  }
  const any_rep in = parse_rep_string(input);
  if (format_name(in) != from)
    throw std::invalid_argument("input is a " + format_name(in) + " file, not " + from);
  if (from == "circle" && to == "overlap") {
    auto o = circle_to_overlap(expect_rep<circle_rep>(in, "circle"));
    out.text = serialize(o);
    out.sidecar = {{"reduction", "overlap"}, {"cut", "between positions 2n-1 and 0"}};
  } else if (from == "overlap" && to == "gseg") {
    auto g = overlap_to_grounded_segments(expect_rep<overlap_rep>(in, "overlap"));
    out.text = serialize(g);
    out.sidecar = {{"reduction", "gseg"}, {"n", g.n()}, {"endpoint_bits", endpoint_bits(g.n())}};
  } else if (from == "overlap" && to == "squarel") {
    auto o = expect_rep<overlap_rep>(in, "overlap");
    auto red = overlap_to_square_l(o);
    out.text = serialize(red.rep);
    out.sidecar = square_l_sidecar(red, o.n());
  } else if (from == "circle" && to == "squarel") {
    auto o = circle_to_overlap(expect_rep<circle_rep>(in, "circle"));
    auto red = overlap_to_square_l(o);
    out.text = serialize(red.rep);
    out.sidecar = square_l_sidecar(red, o.n());
  } else {
    throw std::invalid_argument("illegal reduction " + from + "->" + to);
  }
  return out;
}

verify_outcome verify_reps(const any_rep& a, const any_rep& b, gseg_mode mode) {
  require_valid(a);
  require_valid(b);
  auto graph = [&](const any_rep& r) {
    if (auto g = std::get_if<gseg_rep>(&r)) return build_intersection_graph(*g, mode);
    return build_intersection_graph(r);
  };
  const auto ga = graph(a);
  const auto gb = graph(b);
  verify_outcome v;
  v.equal = graphs_equal(ga, gb);
  if (!v.equal) v.diffs = graph_diff(ga, gb, 10);
  return v;
}

namespace {

// World-to-viewport mapping with a uniform scale and y pointing up.
struct viewport {
  static constexpr double width = 800, height = 600, margin = 40;
  double minx = 0, miny = 0, scale = 1;

  viewport(double x0, double y0, double x1, double y1) : minx(x0), miny(y0) {
    double dx = std::max(x1 - x0, 1.0), dy = std::max(y1 - y0, 1.0);
    scale = std::min((width - 2 * margin) / dx, (height - 2 * margin) / dy);
  }
  double sx(double x) const { return margin + (x - minx) * scale; }
  double sy(double y) const { return height - margin - (y - miny) * scale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double to_double(const big_int& v) { return v.convert_to<double>(); }

struct svg_writer {
  std::ostringstream body;

  void line(double x1, double y1, double x2, double y2, const std::string& cls) {
    body << "  <line class=\"" << cls << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\"/>\n";
  }
  void label(double x, double y, const std::string& text) {
    body << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\">" << text << "</text>\n";
  }
  std::string finish() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << viewport::width
        << "\" height=\"" << viewport::height << "\" viewBox=\"0 0 " << viewport::width << ' ' << viewport::height
        << "\">\n"
        << "  <style>line,polyline,rect,circle{fill:none;stroke:#222;stroke-width:1.5}"
           ".ground{stroke:#888;stroke-dasharray:4 3}.clause{fill:#c00;stroke:none}"
           "text{font:11px sans-serif;fill:#036}</style>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

template <class Points>
std::pair<std::pair<double, double>, std::pair<double, double>> bounds_of(const Points& pts) {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (auto [x, y] : pts) {
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  return {{x0, y0}, {x1, y1}};
}

std::string render_intervals(const std::vector<interval>& ivs) {
  svg_writer w;
  // greedy rows so that bars sharing a row are disjoint
  std::vector<std::int64_t> row_end;
  std::vector<std::pair<const interval*, std::size_t>> placed;
  std::vector<const interval*> sorted;
  for (const auto& iv : ivs) sorted.push_back(&iv);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return std::pair{a->lo, a->id} < std::pair{b->lo, b->id}; });
  for (const interval* iv : sorted) {
    std::size_t r = 0;
    while (r < row_end.size() && row_end[r] >= iv->lo) ++r;
    if (r == row_end.size()) row_end.push_back(iv->hi);
    else row_end[r] = iv->hi;
    placed.emplace_back(iv, r);
  }
  std::vector<std::pair<double, double>> pts{{0, 0}};
  for (auto [iv, r] : placed) {
    pts.emplace_back(static_cast<double>(iv->lo), static_cast<double>(r + 1));
    pts.emplace_back(static_cast<double>(iv->hi), static_cast<double>(r + 1));
  }
  auto [lo, hi] = bounds_of(pts);
  viewport v(lo.first, 0, hi.second > 0 ? hi.first : lo.first + 1, std::max(hi.second, 1.0));
  for (auto [iv, r] : placed) {
    double y = v.sy(static_cast<double>(r + 1));
    w.line(v.sx(static_cast<double>(iv->lo)), y, v.sx(static_cast<double>(iv->hi)), y, "bar");
    w.label(v.sx(static_cast<double>(iv->lo)), y - 4, std::to_string(iv->id));
  }
  return w.finish();
}

std::string render_circle(const circle_rep& c) {
  svg_writer w;
  const double cx = viewport::width / 2, cy = viewport::height / 2, radius = 250;
  const double positions = std::max<double>(1.0, 2.0 * static_cast<double>(c.n()));
  w.body << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius) << "\"/>\n";
  auto at = [&](std::int64_t p) {
    double a = 2 * std::numbers::pi * static_cast<double>(p) / positions;
    return std::pair{cx + radius * std::cos(a), cy - radius * std::sin(a)};
  };
  for (const auto& ch : c.chords) {
    auto [x1, y1] = at(ch.p);
    auto [x2, y2] = at(ch.q);
    w.line(x1, y1, x2, y2, "chord");
    w.label((x1 + x2) / 2, (y1 + y2) / 2, std::to_string(ch.id));
  }
  return w.finish();
}

std::string render_polylines(const std::vector<std::pair<shape_id, std::vector<point>>>& lines, bool ground,
                             bool arms, const gadget_layout* layout) {
  std::vector<std::pair<double, double>> pts{{0, 0}};
  for (const auto& [id, vs] : lines)
    for (const auto& p : vs) pts.emplace_back(to_double(p.x), to_double(p.y));
  if (layout)
    for (auto [x, y] : layout->clause_points) pts.emplace_back(static_cast<double>(x), static_cast<double>(y));
  auto [lo, hi] = bounds_of(pts);
  viewport v(lo.first, lo.second, hi.first, hi.second);
  svg_writer w;
  if (ground) w.line(v.sx(lo.first), v.sy(0), v.sx(hi.first), v.sy(0), "ground");
  for (const auto& [id, vs] : lines) {
    if (arms) {
      // square-L: one line per arm
      w.line(v.sx(to_double(vs[0].x)), v.sy(to_double(vs[0].y)), v.sx(to_double(vs[1].x)), v.sy(to_double(vs[1].y)),
             "arm");
      w.line(v.sx(to_double(vs[1].x)), v.sy(to_double(vs[1].y)), v.sx(to_double(vs[2].x)), v.sy(to_double(vs[2].y)),
             "arm");
    } else {
      w.body << "  <polyline points=\"";
      for (std::size_t k = 0; k < vs.size(); ++k)
        w.body << (k ? " " : "") << num(v.sx(to_double(vs[k].x))) << ',' << num(v.sy(to_double(vs[k].y)));
      w.body << "\"/>\n";
    }
    if (!vs.empty()) w.label(v.sx(to_double(vs[0].x)) + 3, v.sy(to_double(vs[0].y)) - 3, std::to_string(id));
  }
  if (layout)
    for (std::size_t c = 0; c < layout->clause_points.size(); ++c) {
      auto [x, y] = layout->clause_points[c];
      double px = v.sx(static_cast<double>(x)), py = v.sy(static_cast<double>(y));
      w.body << "  <circle class=\"clause\" cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"3\"/>\n";
      w.label(px + 5, py + 4, "c" + std::to_string(c + 1));
    }
  return w.finish();
}

}  // namespace

std::string render_svg(const any_rep& r, const gadget_layout* layout) {
  if (auto c = std::get_if<circle_rep>(&r)) return render_circle(*c);
  if (auto o = std::get_if<overlap_rep>(&r)) return render_intervals(o->intervals);
  if (auto g = std::get_if<gseg_rep>(&r)) return render_intervals(g->intervals);
  std::vector<std::pair<shape_id, std::vector<point>>> lines;
  if (auto s = std::get_if<square_l_rep>(&r)) {
    for (const auto& sq : s->shapes) lines.emplace_back(sq.id, polyline_of(sq));
    return render_polylines(lines, true, true, nullptr);
  }
  if (auto l = std::get_if<lshape_set>(&r)) {
    for (const auto& sh : l->shapes) lines.emplace_back(sh.id, polyline_of(sh));
    return render_polylines(lines, false, false, nullptr);
  }
  if (auto rs = std::get_if<rectangle_set>(&r)) {
    std::vector<std::pair<double, double>> pts{{0, 0}};
    for (const auto& s : rs->shapes) {
      pts.emplace_back(static_cast<double>(s.x1), static_cast<double>(s.y1));
      pts.emplace_back(static_cast<double>(s.x2), static_cast<double>(s.y2));
    }
    auto [lo, hi] = bounds_of(pts);
    viewport v(lo.first, lo.second, hi.first, hi.second);
    svg_writer w;
    for (const auto& s : rs->shapes) {
      w.body << "  <rect x=\"" << num(v.sx(static_cast<double>(s.x1))) << "\" y=\""
             << num(v.sy(static_cast<double>(s.y2))) << "\" width=\""
             << num(static_cast<double>(s.x2 - s.x1) * v.scale) << "\" height=\""
             << num(static_cast<double>(s.y2 - s.y1) * v.scale) << "\"/>\n";
      w.label(v.sx(static_cast<double>(s.x1)) + 3, v.sy(static_cast<double>(s.y2)) + 12, std::to_string(s.id));
    }
    return w.finish();
  }
  const auto& os = std::get<outerstring_rep>(r);
  for (const auto& s : os.strings) lines.emplace_back(s.id, s.vertices);
  return render_polylines(lines, true, false, layout);
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

std::vector<std::size_t> default_sizes(const std::string& suite) {
  if (suite == "reductions") return {1024, 2048, 4096, 8192, 16384};
  if (suite == "circle-dp") return {250, 500, 1000, 2000};
  if (suite == "bounded-dp") return {125, 250, 500, 1000};
  if (suite == "approx") return {8, 16, 32};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

std::vector<bench_record> run_bench(const bench_params& p) {
  const auto sizes = p.sizes.empty() ? default_sizes(p.suite) : p.sizes;
  const auto seeds = p.seeds.empty() ? std::vector<std::uint64_t>{1} : p.seeds;
  default_sizes(p.suite);  // rejects unknown suites even with explicit sizes
  std::vector<bench_record> out;
  for (std::size_t n : sizes)
    for (std::uint64_t seed : seeds) {
      bench_record base;
      base.n = n;
      base.seed = seed;
      if (p.suite == "reductions") {
        base.kind = "overlap";
        auto o = random_overlap(n, seed);
        auto t = std::chrono::steady_clock::now();
        auto g = overlap_to_grounded_segments(o);
        bench_record r = base;
        r.op = "gseg";
        r.ms = ms_since(t);
        out.push_back(r);

        t = std::chrono::steady_clock::now();
        auto red = overlap_to_square_l(o);
        r = base;
        r.op = "squarel-build";
        r.ms = ms_since(t);
        r.queries = red.queries;
        if (red.queries > 2 * n) throw std::runtime_error("query count exceeds 2n");
        out.push_back(r);

        t = std::chrono::steady_clock::now();
        bool ok = square_l_certificate(o, red.rep);
        r = base;
        r.op = "squarel-verify";
        r.ms = ms_since(t);
        if (!ok) throw std::runtime_error("construction mismatch");
        out.push_back(r);
      } else if (p.suite == "circle-dp") {
        base.kind = "circle";
        auto o = circle_to_overlap(random_circle(n, seed));
        auto res = circle_mwis(o);
        bench_record r = base;
        r.op = "circle-dp";
        r.ms = res.stats.wall_ms;
        r.subproblems = res.stats.subproblems;
        out.push_back(r);
      } else if (p.suite == "bounded-dp") {
        base.kind = "bounded-strings";
        base.kappa = p.kappa;
        auto s = random_bounded_strings(n, p.kappa, seed);
        auto res = bounded_monotone_mis(s);
        const double f = static_cast<double>(separator_count(p.kappa));
        if (static_cast<double>(res.stats.subproblems) > static_cast<double>(n) * static_cast<double>(n) * f * f)
          throw std::runtime_error("subproblem count exceeds n^2 f(kappa)^2");
        bench_record r = base;
        r.op = "bounded-dp";
        r.ms = res.stats.wall_ms;
        r.subproblems = res.stats.subproblems;
        r.queries = res.stats.queries;
        out.push_back(r);
      } else {
        auto box = static_cast<std::int64_t>(2 * n);
        auto ls = random_lshapes(n, seed, box, quadrant_mix::ul_only);
        auto a = approx_quadrant(ls, {});
        bench_record r = base;
        r.kind = "lshape";
        r.op = "approx-lshape";
        r.ms = a.result.stats.wall_ms;
        r.subproblems = a.result.stats.subproblems;
        r.nodes = a.result.stats.nodes;
        out.push_back(r);
        auto rs = random_rectangles(n, seed, box);
        auto b = approx_rectangles(rs, {});
        r = base;
        r.kind = "rect";
        r.op = "approx-rect";
        r.ms = b.result.stats.wall_ms;
        r.subproblems = b.result.stats.subproblems;
        r.nodes = b.result.stats.nodes;
        out.push_back(r);
      }
    }
  return out;
}

std::string bench_csv(const std::vector<bench_record>& records) {
  std::ostringstream out;
  out << "kind,n,kappa,seed,op,ms,queries,subproblems,nodes\n";
  for (const auto& r : records)
    out << r.kind << ',' << r.n << ',' << r.kappa << ',' << r.seed << ',' << r.op << ',' << num(r.ms) << ','
        << r.queries << ',' << r.subproblems << ',' << r.nodes << '\n';
  return out.str();
}

std::string bench_ratio_table(const std::vector<bench_record>& records) {
  std::map<std::string, std::map<std::size_t, std::pair<double, int>>> acc;
  for (const auto& r : records) {
    auto& cell = acc[r.op][r.n];
    cell.first += r.ms;
    ++cell.second;
  }
  std::ostringstream out;
  out << "op n mean_ms ratio\n";
  for (const auto& [op, by_n] : acc) {
    double prev = -1;
    for (const auto& [n, cell] : by_n) {
      double mean = cell.first / cell.second;
      out << op << ' ' << n << ' ' << num(mean) << ' ' << (prev > 0 ? num(mean / prev) : std::string("-")) << '\n';
      prev = mean;
    }
  }
  return out.str();
}

namespace {

nlohmann::json result_json(const mis_result& r) {
  return {{"value", r.value},
          {"chosen", r.chosen},
          {"stats",
           {{"subproblems", r.stats.subproblems},
            {"queries", r.stats.queries},
            {"nodes", r.stats.nodes},
            {"ms", r.stats.wall_ms}}}};
}

void print_result(std::ostream& out, const mis_result& r, bool json) {
  if (json) {
    out << result_json(r).dump() << '\n';
    return;
  }
  out << "value: " << r.value << "\nchosen:";
  for (auto id : r.chosen) out << ' ' << id;
  out << "\nstats: subproblems=" << r.stats.subproblems << " queries=" << r.stats.queries
      << " nodes=" << r.stats.nodes << " ms=" << num(r.stats.wall_ms) << '\n';
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") out << content;
  else write_file(path, content);
}

template <class T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = std::stoull(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad list element '" + tok + "'");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

mis_result solve_with(const std::string& algo, const any_rep& rep, const weight_map& w, std::int64_t kappa) {
  require_valid(rep);
  if (algo == "brute") return brute_force_mwis(build_intersection_graph(rep), w);
  if (algo == "outerstring-exact") return outerstring_mwis_exact(build_intersection_graph(rep), w);
  if (algo == "circle-dp") {
    if (auto c = std::get_if<circle_rep>(&rep)) return circle_mwis(circle_to_overlap(*c), w);
    if (auto o = std::get_if<overlap_rep>(&rep)) return circle_mwis(*o, w);
    if (auto g = std::get_if<gseg_rep>(&rep)) return circle_mwis(overlap_rep{g->intervals, g->weights}, w);
    throw std::invalid_argument("circle-dp needs a circle, overlap or gseg file");
  }
  if (algo == "interval") {
    std::vector<interval> ivs;
    if (auto o = std::get_if<overlap_rep>(&rep)) ivs = o->intervals;
    else if (auto g = std::get_if<gseg_rep>(&rep)) ivs = g->intervals;
    else if (auto r = std::get_if<rectangle_set>(&rep))
      for (const auto& s : r->shapes) ivs.push_back(interval{s.y1, s.y2, s.id});
    else throw std::invalid_argument("interval needs an overlap, gseg or rect file");
    return interval_mwis(ivs, w);
  }
  if (algo == "bounded-dp") {
    auto o = std::get_if<outerstring_rep>(&rep);
    if (!o) throw std::invalid_argument("bounded-dp needs an outerstring file");
    if (kappa < 1) throw std::invalid_argument("bounded-dp needs --kappa");
    auto b = as_bounded(*o, kappa);
    b.weights = w;
    return bounded_monotone_mis(b);
  }
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

const char* k_models =
    "Random models:\n"
    "  circle           uniform random perfect matching of 2n boundary positions\n"
    "  overlap          random matching on 2n distinct endpoints drawn from [0, span), span = 4n\n"
    "  lshape           corners uniform in [0, box]^2, arms uniform in [1, box/2]; UL unless --mixed\n"
    "  rect             corners uniform in [0, box]^2, sides uniform in [0, box/3]\n"
    "  bounded-strings  ground x uniform in [0, width); random unit-step walks of 1..kappa steps,\n"
    "                   first step up, no horizontal reversal\n"
    "  cnf              clauses of k distinct variables, random signs\n"
    "Exit codes: 0 ok, 1 verification diff, 2 parse/validation error, 3 size guard.\n";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent sets in geometric intersection graphs"};
  app.footer(k_models);
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string out_path, weights_path;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out,-o", out_path, "output file (default stdout)");
  app.add_option("--weights", weights_path, "weights file with 'id weight' lines");

  generate_params gen;
  auto* generate = app.add_subcommand("generate", "write a seeded random instance");
  generate->add_option("kind", gen.kind, "circle|overlap|lshape|rect|bounded-strings|cnf")->required();
  generate->add_option("--n", gen.n, "number of shapes");
  generate->add_option("--box", gen.box, "coordinate box for lshape/rect");
  generate->add_flag("--mixed", gen.mixed, "lshape: mix all four kinds");
  generate->add_option("--kappa", gen.kappa, "bounded-strings length bound");
  generate->add_option("--width", gen.width, "bounded-strings ground range");
  generate->add_option("--span", gen.span, "overlap endpoint range");
  generate->add_option("--vars", gen.vars, "cnf variables");
  generate->add_option("--clauses", gen.clauses, "cnf clauses");
  generate->add_option("--k", gen.k, "cnf literals per clause");
  generate->add_option("--max-weight", gen.max_weight, "attach weights in [1, max]");

  std::string from, to, input;
  auto* reduce = app.add_subcommand("reduce", "apply a reduction");
  reduce->add_option("--from", from, "circle|overlap|cnf")->required();
  reduce->add_option("--to", to, "overlap|gseg|squarel|outerstring")->required();
  reduce->add_option("input", input, "input file")->required();
  std::string sidecar_path;
  reduce->add_option("--sidecar", sidecar_path, "metadata JSON (default <out>.json)");

  std::string algo;
  std::int64_t kappa = 0;
  bool json = false;
  auto* solve = app.add_subcommand("solve", "exact maximum (weight) independent set");
  solve->add_option("--algo", algo, "brute|circle-dp|interval|outerstring-exact|bounded-dp")->required();
  solve->add_option("input", input, "input file")->required();
  solve->add_option("--kappa", kappa, "length bound for bounded-dp");
  solve->add_flag("--json", json, "machine-readable output");

  std::string kind;
  auto* approx = app.add_subcommand("approx", "divide-and-conquer approximation");
  approx->add_option("--kind", kind, "lshape|rect")->required();
  approx->add_option("input", input, "input file")->required();
  approx->add_flag("--json", json, "machine-readable output");

  std::string input_b;
  bool exact_gseg = false;
  auto* verify = app.add_subcommand("verify", "compare the intersection graphs of two files");
  verify->add_option("a", input, "first file")->required();
  verify->add_option("b", input_b, "second file")->required();
  verify->add_flag("--exact-gseg", exact_gseg, "decide gseg adjacency on the denoted segments");

  std::string layout_path;
  auto* render = app.add_subcommand("render", "draw a representation as SVG");
  render->add_option("input", input, "input file")->required();
  render->add_option("--layout", layout_path, "gadget sidecar for clause labels");

  bench_params bench;
  std::string sizes, seeds;
  auto* benchc = app.add_subcommand("bench", "timing and counter suite, CSV output");
  benchc->add_option("--suite", bench.suite, "reductions|circle-dp|bounded-dp|approx")->required();
  benchc->add_option("--sizes", sizes, "comma-separated n values");
  benchc->add_option("--seeds", seeds, "comma-separated seeds");
  benchc->add_option("--kappa", bench.kappa, "kappa for bounded-dp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  }

  try {
    if (*generate) {
      gen.seed = seed;
      emit(out_path, generate_instance(gen), out);
    } else if (*reduce) {
      auto r = reduce_text(from, to, read_file(input));
      emit(out_path, r.text, out);
      std::string side = sidecar_path;
      if (side.empty() && !out_path.empty() && out_path != "-") side = out_path + ".json";
      if (!side.empty()) write_file(side, r.sidecar.dump(2) + "\n");
    } else if (*solve) {
      auto rep = read_rep_file(input);
      weight_map w = weights_path.empty() ? weights_of(rep) : read_weights_file(weights_path);
      print_result(out, solve_with(algo, rep, w, kappa), json);
    } else if (*approx) {
      auto rep = read_rep_file(input);
      weight_map w = weights_path.empty() ? weights_of(rep) : read_weights_file(weights_path);
      approx_outcome a;
      double factor = 1;
      if (kind == "lshape") {
        auto s = expect_rep<lshape_set>(rep, "lshape");
        bool one_kind = std::all_of(s.shapes.begin(), s.shapes.end(),
                                    [&](const lshape& l) { return l.kind == s.shapes.front().kind; });
        a = one_kind ? approx_quadrant(s, w) : approx_all_quadrants(s, w);
        if (!one_kind) factor = 4;
      } else if (kind == "rect") {
        a = approx_rectangles(expect_rep<rectangle_set>(rep, "rect"), w);
      } else {
        throw std::invalid_argument("approx kind must be lshape or rect");
      }
      const double v = static_cast<double>(a.result.value);
      const double upper = a.exact ? v : v * factor * std::max(1.0, v > 0 ? std::log2(v) : 0.0);
      if (json) {
        auto j = result_json(a.result);
        j["exact"] = a.exact;
        j["opt_bracket"] = {v, upper};
        out << j.dump() << '\n';
      } else {
        print_result(out, a.result, false);
        out << (a.exact ? "exact: yes\n" : "exact: no\n") << "opt bracket: [" << num(v) << ", " << num(upper)
            << "]\n";
      }
    } else if (*verify) {
      auto v = verify_reps(read_rep_file(input), read_rep_file(input_b),
                           exact_gseg ? gseg_mode::exact : gseg_mode::implicit);
      if (v.equal) {
        out << "ok\n";
        return exit_code::ok;
      }
      out << "diff\n";
      for (const auto& d : v.diffs)
        out << d.u << ' ' << d.v << ' ' << (d.in_first ? "edge" : "none") << ' ' << (d.in_second ? "edge" : "none")
            << '\n';
      return exit_code::diff;
    } else if (*render) {
      auto rep = read_rep_file(input);
      std::optional<gadget_layout> layout;
      if (!layout_path.empty()) layout = gadget_layout_from_json(nlohmann::json::parse(read_file(layout_path)));
      emit(out_path, render_svg(rep, layout ? &*layout : nullptr), out);
    } else if (*benchc) {
      bench.sizes = parse_list<std::size_t>(sizes);
      bench.seeds = parse_list<std::uint64_t>(seeds);
      auto records = run_bench(bench);
      emit(out_path, bench_csv(records), out);
      err << bench_ratio_table(records);
    }
  } catch (const size_guard_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::size_guard;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return std::string(e.what()) == "construction mismatch" ? exit_code::diff : exit_code::invalid;
  }
  return exit_code::ok;
}

}  // namespace misgeo
