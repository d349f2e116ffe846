#pragma once

// Planar points and the orientation / farther-than predicates, each in a
// floating-point form (the one Quickhull runs on) and an exact form (the
// reference it is measured against).

#include "fpqh/exact.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace fpqh {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) {
      throw std::invalid_argument("Point: coordinates must be finite");
    }
  }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic (x, then y). Used for left-most/right-most selection.
constexpr bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct DirectedSegment {
  Point p;  // tail
  Point q;  // head
};

/// Maximum absolute coordinate of a point set.
struct Scale {
  double value = 0.0;
};

/// Unit roundoff of a float format and the six-rounding growth factor.
struct Epsilon {
  double eps;
  double gamma6;
};

template <std::floating_point T>
constexpr Epsilon epsilon_of() {
  const double eps = static_cast<double>(std::numeric_limits<T>::epsilon()) / 2.0;
  return {eps, 6.0 * eps / (1.0 - 6.0 * eps)};
}

inline constexpr Epsilon kDouble = epsilon_of<double>();
inline constexpr Epsilon kSingle = epsilon_of<float>();

inline Scale max_abs_coord(std::span<const Point> points) {
  double m = 0.0;
  for (const Point& u : points) {
    m = std::max({m, std::fabs(u.x), std::fabs(u.y)});
  }
  return {m};
}

// ---------------------------------------------------------------------------
// Exact predicates

/// (p.x - u.x)(q.y - u.y) - (p.y - u.y)(q.x - u.x), exactly.
inline Dyadic orient_exact(const Point& p, const Point& u, const Point& q) {
  const Dyadic px(p.x), py(p.y), ux(u.x), uy(u.y), qx(q.x), qy(q.y);
  return (px - ux) * (qy - uy) - (py - uy) * (qx - ux);
}

/// True iff u is strictly to the left of pq, i.e. p, u, q make a right turn.
inline bool rt_exact(const Point& p, const Point& u, const Point& q) {
  return orient_exact(p, u, q).sign() > 0;
}

/// True iff u is strictly farther from the line pq than u2 (signed, on the
/// left side): (q.y - p.y)(u.x - u2.x) < (q.x - p.x)(u.y - u2.y).
inline bool frt_exact(const Point& p, const Point& q, const Point& u, const Point& u2) {
  const Dyadic dy = Dyadic(q.y) - Dyadic(p.y);
  const Dyadic dx = Dyadic(q.x) - Dyadic(p.x);
  return dy * (Dyadic(u.x) - Dyadic(u2.x)) < dx * (Dyadic(u.y) - Dyadic(u2.y));
}

// ---------------------------------------------------------------------------
// Floating-point predicates
//
// Both take the segment direction fl(q - p) precomputed so a partition or a
// reduction loop rounds it once. Operation order is part of the contract: the
// rounding-error bounds are derived for exactly these expression trees.

struct SegmentDelta {
  double dx;  // fl(q.x - p.x)
  double dy;  // fl(q.y - p.y)

  static SegmentDelta of(const Point& p, const Point& q) { return {q.x - p.x, q.y - p.y}; }
};

/// fl(fl(p.x - u.x) * dy) > fl(fl(p.y - u.y) * dx)
inline bool rt_float(const Point& p, const Point& u, const SegmentDelta& d) {
  const double lhs = (p.x - u.x) * d.dy;
  const double rhs = (p.y - u.y) * d.dx;
  return lhs > rhs;
}

inline bool rt_float(const Point& p, const Point& u, const Point& q) {
  return rt_float(p, u, SegmentDelta::of(p, q));
}

/// fl(dy * fl(u.x - u2.x)) < fl(dx * fl(u.y - u2.y))
inline bool frt_float(const SegmentDelta& d, const Point& u, const Point& u2) {
  const double lhs = d.dy * (u.x - u2.x);
  const double rhs = d.dx * (u.y - u2.y);
  return lhs < rhs;
}

inline bool frt_float(const Point& p, const Point& q, const Point& u, const Point& u2) {
  return frt_float(SegmentDelta::of(p, q), u, u2);
}

// ---------------------------------------------------------------------------
// Measurement helpers (never used inside the hull algorithm)

/// Euclidean length of q - p, from the exact squared length.
inline double segment_length(const Point& p, const Point& q) {
  const Dyadic dx = Dyadic(q.x) - Dyadic(p.x);
  const Dyadic dy = Dyadic(q.y) - Dyadic(p.y);
  return std::sqrt((dx * dx + dy * dy).to_double());
}

/// |orient(p, u, q)| / |p - q|: distance from u to the line through seg.
inline double distance_to_line(const Point& u, const DirectedSegment& seg) {
  if (seg.p == seg.q) {
    throw std::invalid_argument("distance_to_line: degenerate segment (p == q)");
  }
  return orient_exact(seg.p, u, seg.q).abs().to_double() / segment_length(seg.p, seg.q);
}

inline double distance(const Point& a, const Point& b) {
  // Differences of doubles are correctly rounded, so this is accurate to a
  // few ulps relative to the result.
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Exact sign of (b - a) . (c - a).
inline int dot_sign(const Point& a, const Point& b, const Point& c) {
  const Dyadic ax(a.x), ay(a.y);
  return ((Dyadic(b.x) - ax) * (Dyadic(c.x) - ax) + (Dyadic(b.y) - ay) * (Dyadic(c.y) - ay))
      .sign();
}

/// Distance from u to the closed segment ab; a == b is allowed.
inline double distance_to_segment(const Point& u, const Point& a, const Point& b) {
  if (a == b) return distance(u, a);
  if (dot_sign(a, b, u) <= 0) return distance(u, a);
  if (dot_sign(b, a, u) <= 0) return distance(u, b);
  return distance_to_line(u, {a, b});
}

/// u lies on the closed segment ab.
inline bool on_segment(const Point& u, const Point& a, const Point& b) {
  if (u == a || u == b) return true;
  if (!orient_exact(a, u, b).is_zero()) return false;
  return dot_sign(u, a, b) < 0;  // a and b on opposite sides of u
}

inline std::string to_string(const Point& u) {
  return "(" + std::to_string(u.x) + ", " + std::to_string(u.y) + ")";
}

}  // namespace fpqh
