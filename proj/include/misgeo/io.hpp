#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "misgeo/representations.hpp"

namespace misgeo {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads any of the text formats, dispatching on the header keyword.
any_rep parse_rep(std::istream& in);
any_rep parse_rep_string(const std::string& text);
any_rep read_rep_file(const std::string& path);

/// Header keyword of the text format for this representation.
std::string format_name(const any_rep& r);

std::string serialize(const circle_rep& r);
std::string serialize(const overlap_rep& r);
std::string serialize(const gseg_rep& r);
std::string serialize(const square_l_rep& r);
std::string serialize(const lshape_set& r);
std::string serialize(const rectangle_set& r);
std::string serialize(const outerstring_rep& r);
std::string serialize(const any_rep& r);

/// Bounded strings share the outerstring text format; kappa travels separately.
bounded_string_rep as_bounded(const outerstring_rep& r, std::int64_t kappa);
outerstring_rep as_outerstring(const bounded_string_rep& r);

/// Bit-packed implicit grounded-segment encoding: a 64-bit count followed by
/// lo and hi of each interval in id order, L = ceil(log2(2n)) bits apiece.
/// Requires ids 0..n-1 and no weights.
struct packed_gseg {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bits = 0;
};

std::uint32_t endpoint_bits(std::size_t n);
packed_gseg pack(const gseg_rep& r);
gseg_rep unpack(const packed_gseg& p);

/// Reads "id weight" pairs, one per line, '#' comments allowed.
weight_map parse_weights(std::istream& in);
weight_map read_weights_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace misgeo
