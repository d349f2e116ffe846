#pragma once

// Hausdorff distance between point sets and polygon regions, the
// unit-invariant distance d_M = d / M, and forward-error measurement.

#include "fpqh/geometry.hpp"
#include "fpqh/quickhull.hpp"
#include "fpqh/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace fpqh {

namespace detail {
inline void require_nonempty_set(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty input");
}
inline void require_positive_scale(Scale M, const char* what) {
  if (!(M.value > 0.0)) throw std::invalid_argument(std::string(what) + ": M must be > 0");
}
}  // namespace detail

/// Region bounded by the closed polyline through the vertices in order.
/// Self-intersecting outlines use the even-odd rule; one or two vertices
/// describe a point or a segment.
struct Polygon {
  std::vector<Point> vertices;
};

/// Boundary-inclusive even-odd containment, decided exactly.
inline bool contains(const Polygon& poly, const Point& u) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(u, v[i], v[(i + 1) % n])) return true;
  }
  if (n < 3) return false;
  // Crossings of the ray from u towards +x. An edge counts when it spans u.y
  // half-open (a.y <= u.y < b.y or b.y <= u.y < a.y) and crosses right of u.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const bool up = a.y <= u.y && u.y < b.y;
    const bool down = b.y <= u.y && u.y < a.y;
    if (!up && !down) continue;
    // orient(a, u, b) > 0 iff u is left of a->b (counter-clockwise sense).
    const int s = orient_exact(a, u, b).sign();
    if ((up && s > 0) || (down && s < 0)) inside = !inside;
  }
  return inside;
}

/// Distance from u to the polygon region (0 inside or on the boundary).
inline double distance_to_region(const Point& u, const Polygon& poly) {
  detail::require_nonempty_set(poly.vertices.size(), "distance_to_region");
  if (contains(poly, u)) return 0.0;
  const auto& v = poly.vertices;
  double best = distance(u, v[0]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, distance_to_segment(u, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

/// Discrete Hausdorff distance between finite point sets.
inline double hausdorff(std::span<const Point> A, std::span<const Point> B) {
  detail::require_nonempty_set(A.size(), "hausdorff");
  detail::require_nonempty_set(B.size(), "hausdorff");
  auto directed = [](std::span<const Point> X, std::span<const Point> Y) {
    double worst = 0.0;
    for (const Point& x : X) {
      double best = distance(x, Y[0]);
      for (const Point& y : Y.subspan(1)) best = std::min(best, distance(x, y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(A, B), directed(B, A));
}

/// Hausdorff distance between polygon regions, taking the maximum over the
/// vertices of each polygon of the distance to the other region. For convex
/// regions this is exact: a convex distance function peaks at a vertex.
inline double hausdorff(const Polygon& A, const Polygon& B) {
  detail::require_nonempty_set(A.vertices.size(), "hausdorff");
  detail::require_nonempty_set(B.vertices.size(), "hausdorff");
  double worst = 0.0;
  for (const Point& a : A.vertices) worst = std::max(worst, distance_to_region(a, B));
  for (const Point& b : B.vertices) worst = std::max(worst, distance_to_region(b, A));
  return worst;
}

inline double d_M(std::span<const Point> A, std::span<const Point> B, Scale M) {
  detail::require_positive_scale(M, "d_M");
  return hausdorff(A, B) / M.value;
}

inline double d_M(const Polygon& A, const Polygon& B, Scale M) {
  detail::require_positive_scale(M, "d_M");
  return hausdorff(A, B) / M.value;
}

// ---------------------------------------------------------------------------
// Conditioning

/// Moves every point by at most radius, uniformly over the disk.
inline std::vector<Point> perturb(std::span<const Point> P, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  std::vector<Point> out;
  out.reserve(P.size());
  for (const Point& u : P) {
    const double r = radius * std::sqrt(unit());
    const double t = 2.0 * 3.14159265358979323846 * unit();
    out.emplace_back(u.x + r * std::cos(t), u.y + r * std::sin(t));
  }
  return out;
}

struct ConditioningTrial {
  double input_distance;  // d_M(P, P~)
  double hull_distance;   // d_M(CH(P), CH(P~))
  bool passed;
};

inline constexpr double kConditioningSlack = 4.0 * kDouble.eps;

/// One perturbation trial: the exact hulls of P and P~ may differ by no more
/// than the perturbation itself, plus measurement slack.
inline ConditioningTrial conditioning_trial(std::span<const Point> P, double delta,
                                            std::uint64_t seed) {
  const Scale M = max_abs_coord(P);
  detail::require_positive_scale(M, "conditioning_check");
  const std::vector<Point> Pt = perturb(P, delta * M.value, seed);
  const Hull h = quickhull(P, PredicateMode::Exact);
  const Hull ht = quickhull(Pt, PredicateMode::Exact);
  ConditioningTrial t;
  t.input_distance = d_M(P, std::span<const Point>(Pt), M);
  t.hull_distance = d_M(Polygon{h.vertices}, Polygon{ht.vertices}, M);
  t.passed = t.hull_distance <= t.input_distance + kConditioningSlack;
  return t;
}

inline bool conditioning_check(std::span<const Point> P, double delta, int trials,
                               std::uint64_t seed) {
  if (P.size() < 3) throw std::invalid_argument("conditioning_check: need at least 3 points");
  if (!(delta >= 0.0)) throw std::invalid_argument("conditioning_check: delta must be >= 0");
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(std::max(trials, 0)));
  std::mt19937_64 gen(seed);
  for (auto& s : seeds) s = gen();
  for (std::uint64_t s : seeds) {
    if (!conditioning_trial(P, delta, s).passed) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Forward error

struct ErrorReport {
  double hausdorff = 0.0;
  double d_M = 0.0;
  Scale M;
  std::size_t depth = 0;
  double bound = 0.0;  // 2 * depth * F_bound

  [[nodiscard]] bool within_bound() const { return d_M <= bound; }
};

/// Worst-case scaled reduction error for n points: chain length times gamma6.
inline double f_bound(const ReductionStrategy& s, std::size_t n) {
  return static_cast<double>(max_chain_length(s, n)) * kDouble.gamma6;
}

inline ErrorReport forward_error(std::span<const Point> P, const Hull& mode_hull,
                                 const Hull& exact_hull, Scale M,
                                 const ReductionStrategy& strategy) {
  detail::require_positive_scale(M, "forward_error");
  ErrorReport r;
  r.M = M;
  r.hausdorff = hausdorff(Polygon{mode_hull.vertices}, Polygon{exact_hull.vertices});
  r.d_M = r.hausdorff / M.value;
  r.depth = mode_hull.depth;
  r.bound = 2.0 * static_cast<double>(r.depth) * f_bound(strategy, P.size());
  return r;
}

}  // namespace fpqh
