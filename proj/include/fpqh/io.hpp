#pragma once

// Point files: one `x,y` pair per line. Decimal and hex-float literals
// (0x1.8p+1) are accepted; blank lines and lines starting with '#' are
// skipped. Parsing and formatting use <charconv>, so they do not depend on
// the C locale.

#include "fpqh/geometry.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpqh {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::from_chars_result res{};
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    body.remove_prefix(2);
    res = std::from_chars(body.data(), body.data() + body.size(), out, std::chars_format::hex);
  } else {
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) return false;
    res = std::from_chars(body.data(), body.data() + body.size(), out, std::chars_format::general);
  }
  if (res.ec != std::errc() || res.ptr != body.data() + body.size()) return false;
  if (negative) out = -out;
  return true;
}

}  // namespace detail

inline std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(lineno, "expected exactly two fields `x,y`");
    }
    double x = 0, y = 0;
    if (!detail::parse_double(s.substr(0, comma), x) ||
        !detail::parse_double(s.substr(comma + 1), y)) {
      throw ParseError(lineno, "malformed number in `" + std::string(s) + "`");
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw ParseError(lineno, "coordinates must be finite");
    }
    points.emplace_back(x, y);
  }
  return points;
}

/// Shortest round-trip decimal, or hex-float when bitexact is set. Both
/// reproduce the double exactly when read back.
inline std::string format_double(double v, bool bitexact) {
  char buf[64];
  std::to_chars_result res{};
  if (bitexact) {
    char* p = buf;
    double mag = v;
    if (std::signbit(v)) {
      *p++ = '-';
      mag = -v;
    }
    *p++ = '0';
    *p++ = 'x';
    res = std::to_chars(p, buf + sizeof buf, mag, std::chars_format::hex);
  } else {
    res = std::to_chars(buf, buf + sizeof buf, v);
  }
  return std::string(buf, res.ptr);
}

inline void write_points(std::ostream& out, std::span<const Point> points, bool bitexact = false) {
  for (const Point& u : points) {
    out << format_double(u.x, bitexact) << ',' << format_double(u.y, bitexact) << '\n';
  }
}

}  // namespace fpqh
