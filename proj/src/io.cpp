#include "misgeo/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace misgeo {

namespace {

struct line_reader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-empty line split into tokens, comments removed. False at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

std::int64_t to_i64(const std::string& s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw parse_error(line, "bad integer '" + s + "'");
  return v;
}

big_int to_big(const std::string& s, std::size_t line) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw parse_error(line, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw parse_error(line, "bad integer '" + s + "'");
  return big_int(s);
}

// Records with a fixed field count and an optional trailing weight.
template <class Rep, class Make>
Rep parse_fixed(line_reader& r, std::int64_t n, std::size_t fields, Make make) {
  Rep rep;
  std::vector<std::string> t;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!r.next(t)) throw parse_error(r.line_no, "expected " + std::to_string(n) + " records");
    if (t.size() != fields && t.size() != fields + 1)
      throw parse_error(r.line_no, "expected " + std::to_string(fields) + " fields");
    shape_id id = make(rep, t, r.line_no);
    if (t.size() == fields + 1) rep.weights[id] = to_i64(t.back(), r.line_no);
  }
  return rep;
}

outerstring_rep parse_strings(line_reader& r, std::int64_t n) {
  outerstring_rep rep;
  std::vector<std::string> t;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!r.next(t)) throw parse_error(r.line_no, "expected " + std::to_string(n) + " records");
    if (t.size() < 2) throw parse_error(r.line_no, "expected id and vertex count");
    grounded_string s;
    s.id = to_i64(t[0], r.line_no);
    std::int64_t k = to_i64(t[1], r.line_no);
    if (k < 0) throw parse_error(r.line_no, "negative vertex count");
    std::size_t need = 2 + 2 * static_cast<std::size_t>(k);
    if (t.size() != need && t.size() != need + 1)
      throw parse_error(r.line_no, "expected " + std::to_string(k) + " vertices");
    for (std::int64_t v = 0; v < k; ++v)
      s.vertices.push_back(point{to_big(t[2 + 2 * v], r.line_no), to_big(t[3 + 2 * v], r.line_no)});
    if (t.size() == need + 1) rep.weights[s.id] = to_i64(t.back(), r.line_no);
    rep.strings.push_back(std::move(s));
  }
  return rep;
}

template <class Shapes, class Body>
std::string write_records(const std::string& kind, const Shapes& shapes, const weight_map& w, Body body) {
  std::ostringstream out;
  out << kind << ' ' << shapes.size() << '\n';
  for (const auto& s : shapes) {
    out << s.id << ' ';
    body(out, s);
    if (auto it = w.find(s.id); it != w.end()) out << ' ' << it->second;
    out << '\n';
  }
  return out.str();
}

}  // namespace

any_rep parse_rep(std::istream& in) {
  line_reader r{in};
  std::vector<std::string> t;
  if (!r.next(t)) throw parse_error(r.line_no, "empty input");
  if (t.size() != 2) throw parse_error(r.line_no, "expected header '<kind> <n>'");
  const std::string kind = t[0];
  const std::int64_t n = to_i64(t[1], r.line_no);
  if (n < 0) throw parse_error(r.line_no, "negative count");

  any_rep result;
  if (kind == "circle") {
    result = parse_fixed<circle_rep>(r, n, 3, [](circle_rep& rep, const auto& t, std::size_t ln) {
      rep.chords.push_back(chord{to_i64(t[1], ln), to_i64(t[2], ln), to_i64(t[0], ln)});
      return rep.chords.back().id;
    });
  } else if (kind == "overlap") {
    result = parse_fixed<overlap_rep>(r, n, 3, [](overlap_rep& rep, const auto& t, std::size_t ln) {
      rep.intervals.push_back(interval{to_i64(t[1], ln), to_i64(t[2], ln), to_i64(t[0], ln)});
      return rep.intervals.back().id;
    });
  } else if (kind == "gseg") {
    result = parse_fixed<gseg_rep>(r, n, 3, [](gseg_rep& rep, const auto& t, std::size_t ln) {
      rep.intervals.push_back(interval{to_i64(t[1], ln), to_i64(t[2], ln), to_i64(t[0], ln)});
      return rep.intervals.back().id;
    });
  } else if (kind == "squarel") {
    result = parse_fixed<square_l_rep>(r, n, 3, [](square_l_rep& rep, const auto& t, std::size_t ln) {
      rep.shapes.push_back(square_l{to_big(t[1], ln), to_big(t[2], ln), to_i64(t[0], ln)});
      return rep.shapes.back().id;
    });
  } else if (kind == "lshape") {
    result = parse_fixed<lshape_set>(r, n, 6, [](lshape_set& rep, const auto& t, std::size_t ln) {
      lshape l;
      l.id = to_i64(t[0], ln);
      try {
        l.kind = parse_l_kind(t[1]);
      } catch (const std::invalid_argument& e) {
        throw parse_error(ln, e.what());
      }
      l.cx = to_i64(t[2], ln);
      l.cy = to_i64(t[3], ln);
      l.vlen = to_i64(t[4], ln);
      l.hlen = to_i64(t[5], ln);
      rep.shapes.push_back(l);
      return l.id;
    });
  } else if (kind == "rect") {
    result = parse_fixed<rectangle_set>(r, n, 5, [](rectangle_set& rep, const auto& t, std::size_t ln) {
      rep.shapes.push_back(
          rectangle{to_i64(t[1], ln), to_i64(t[2], ln), to_i64(t[3], ln), to_i64(t[4], ln), to_i64(t[0], ln)});
      return rep.shapes.back().id;
    });
  } else if (kind == "outerstring") {
    result = parse_strings(r, n);
  } else {
    throw parse_error(r.line_no, "unknown format '" + kind + "'");
  }
  if (r.next(t)) throw parse_error(r.line_no, "more records than the header count");
  return result;
}

any_rep parse_rep_string(const std::string& text) {
  std::istringstream in(text);
  return parse_rep(in);
}

any_rep read_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_rep(in);
}

std::string format_name(const any_rep& r) {
  static const char* names[] = {"circle", "overlap", "gseg", "squarel", "lshape", "rect", "outerstring"};
  return names[r.index()];
}

std::string serialize(const circle_rep& r) {
  return write_records("circle", r.chords, r.weights, [](std::ostream& o, const chord& c) { o << c.p << ' ' << c.q; });
}

std::string serialize(const overlap_rep& r) {
  return write_records("overlap", r.intervals, r.weights,
                       [](std::ostream& o, const interval& iv) { o << iv.lo << ' ' << iv.hi; });
}

std::string serialize(const gseg_rep& r) {
  return write_records("gseg", r.intervals, r.weights,
                       [](std::ostream& o, const interval& iv) { o << iv.lo << ' ' << iv.hi; });
}

std::string serialize(const square_l_rep& r) {
  return write_records("squarel", r.shapes, r.weights,
                       [](std::ostream& o, const square_l& s) { o << s.ground_x << ' ' << s.arm; });
}

std::string serialize(const lshape_set& r) {
  return write_records("lshape", r.shapes, r.weights, [](std::ostream& o, const lshape& l) {
    o << to_string(l.kind) << ' ' << l.cx << ' ' << l.cy << ' ' << l.vlen << ' ' << l.hlen;
  });
}

std::string serialize(const rectangle_set& r) {
  return write_records("rect", r.shapes, r.weights, [](std::ostream& o, const rectangle& s) {
    o << s.x1 << ' ' << s.y1 << ' ' << s.x2 << ' ' << s.y2;
  });
}

std::string serialize(const outerstring_rep& r) {
  return write_records("outerstring", r.strings, r.weights, [](std::ostream& o, const grounded_string& s) {
    o << s.vertices.size();
    for (const auto& p : s.vertices) o << ' ' << p.x << ' ' << p.y;
  });
}

std::string serialize(const any_rep& r) {
  return std::visit([](const auto& x) { return serialize(x); }, r);
}

bounded_string_rep as_bounded(const outerstring_rep& r, std::int64_t kappa) {
  return bounded_string_rep{r.strings, kappa, r.weights};
}

outerstring_rep as_outerstring(const bounded_string_rep& r) { return outerstring_rep{r.strings, r.weights}; }

std::uint32_t endpoint_bits(std::size_t n) {
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < 2 * static_cast<std::uint64_t>(n)) ++bits;
  return std::max<std::uint32_t>(bits, 1);
}

namespace {

struct bit_writer {
  packed_gseg& p;
  void put(std::uint64_t v, std::uint32_t width) {
    for (std::uint32_t b = 0; b < width; ++b) {
      if (p.bits % 8 == 0) p.bytes.push_back(0);
      if ((v >> b) & 1u) p.bytes.back() |= static_cast<std::uint8_t>(1u << (p.bits % 8));
      ++p.bits;
    }
  }
};

struct bit_reader {
  const packed_gseg& p;
  std::uint64_t pos = 0;
  std::uint64_t get(std::uint32_t width) {
    if (pos + width > p.bits) throw std::invalid_argument("truncated packed data");
    std::uint64_t v = 0;
    for (std::uint32_t b = 0; b < width; ++b, ++pos)
      if ((p.bytes[pos / 8] >> (pos % 8)) & 1u) v |= std::uint64_t{1} << b;
    return v;
  }
};

}  // namespace

packed_gseg pack(const gseg_rep& r) {
  if (!r.weights.empty()) throw std::invalid_argument("weighted representation cannot be packed");
  const std::size_t n = r.intervals.size();
  std::vector<const interval*> by_id(n, nullptr);
  for (const auto& iv : r.intervals) {
    if (iv.id < 0 || static_cast<std::size_t>(iv.id) >= n || by_id[iv.id])
      throw std::invalid_argument("packing requires ids 0..n-1");
    by_id[iv.id] = &iv;
  }
  const std::uint32_t L = endpoint_bits(n);
  packed_gseg p;
  bit_writer w{p};
  w.put(n, 64);
  for (const interval* iv : by_id) {
    if (iv->lo < 0 || iv->hi < 0 || static_cast<std::uint64_t>(iv->hi) >= 2 * n)
      throw std::invalid_argument("packing requires relabeled endpoints");
    w.put(static_cast<std::uint64_t>(iv->lo), L);
    w.put(static_cast<std::uint64_t>(iv->hi), L);
  }
  return p;
}

gseg_rep unpack(const packed_gseg& p) {
  bit_reader rd{p};
  const std::uint64_t n = rd.get(64);
  const std::uint32_t L = endpoint_bits(n);
  gseg_rep r;
  for (std::uint64_t i = 0; i < n; ++i) {
    interval iv;
    iv.id = static_cast<shape_id>(i);
    iv.lo = static_cast<std::int64_t>(rd.get(L));
    iv.hi = static_cast<std::int64_t>(rd.get(L));
    r.intervals.push_back(iv);
  }
  return r;
}

weight_map parse_weights(std::istream& in) {
  line_reader r{in};
  weight_map w;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t.size() != 2) throw parse_error(r.line_no, "expected 'id weight'");
    w[to_i64(t[0], r.line_no)] = to_i64(t[1], r.line_no);
  }
  return w;
}

weight_map read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_weights(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace misgeo
