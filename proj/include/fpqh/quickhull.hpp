#pragma once

// Quickhull over floating-point or exact predicates, and the O(n^3)
// definition-level hull used as its oracle.
//
// Orientation convention: rt(p, u, q) holds when orient(p, u, q) > 0, which
// is the outer side of pq when hull vertices are listed clockwise. The
// output starts at the lexicographically smallest point.

#include "fpqh/geometry.hpp"
#include "fpqh/reduction.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fpqh {

enum class PredicateMode { Float, Exact };

inline const char* to_string(PredicateMode m) { return m == PredicateMode::Float ? "float" : "exact"; }

/// Float-vs-exact disagreement counts, collected when auditing a float run.
struct Audit {
  std::size_t rt_disagreements = 0;
  std::size_t frt_disagreements = 0;

  [[nodiscard]] std::size_t total() const { return rt_disagreements + frt_disagreements; }
};

struct Hull {
  std::vector<Point> vertices;  // clockwise
  std::size_t depth = 0;        // partition levels, top level included
  std::size_t comparisons = 0;  // farther-than evaluations
  std::optional<Audit> audit;
};

struct HullOptions {
  /// In Float mode, re-evaluate every predicate exactly and count
  /// disagreements. Ignored in Exact mode.
  bool audit = false;
};

/// Removes exact duplicates, keeping first occurrences in input order.
inline std::vector<Point> dedup_stable(std::span<const Point> P) {
  std::vector<std::size_t> idx(P.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(P[a], P[b]); });
  std::vector<bool> keep(P.size(), false);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || !(P[idx[i]] == P[idx[i - 1]])) keep[idx[i]] = true;
  }
  std::vector<Point> out;
  out.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (keep[i]) out.push_back(P[i]);
  }
  return out;
}

namespace detail {

class QuickhullRun {
 public:
  QuickhullRun(PredicateMode mode, ReductionStrategy strategy, bool audit)
      : mode_(mode),
        strategy_(strategy),
        audit_(audit && mode == PredicateMode::Float),
        cmp_(mode == PredicateMode::Float ? Comparator::float_predicate()
                                          : Comparator::exact_predicate()) {}

  /// Points of P strictly to the left of pq.
  std::vector<Point> left_of(std::span<const Point> P, const Point& p, const Point& q) {
    std::vector<Point> out;
    const SegmentDelta d = SegmentDelta::of(p, q);
    for (const Point& u : P) {
      bool in = false;
      if (mode_ == PredicateMode::Float) {
        in = rt_float(p, u, d);
        if (audit_ && in != rt_exact(p, u, q)) ++counts_.rt_disagreements;
      } else {
        in = rt_exact(p, u, q);
      }
      if (in) out.push_back(u);
    }
    return out;
  }

  /// Farthest point of S from pq under the configured reduction.
  Point farthest(std::span<const Point> S, const Point& p, const Point& q) {
    const DirectedSegment seg{p, q};
    Point r = [&] {
      if (!audit_) return reduce(strategy_, S, seg, cmp_);
      return reduce(strategy_, S, [&](const Point& a, const Point& b) {
        const bool f = cmp_(seg, a, b);
        if (f != frt_exact(p, q, a, b)) ++counts_.frt_disagreements;
        return f;
      });
    }();
    if (mode_ == PredicateMode::Exact) r = slide_to_extreme(S, p, q, r);
    return r;
  }

  /// HULL(P, p, r, q): emits the hull vertices strictly between p and q,
  /// including r, in clockwise order. p and q are emitted by the caller.
  void hull(std::span<const Point> P, const Point& p, const Point& r, const Point& q,
            std::size_t level, std::vector<Point>& out) {
    if (P.size() <= 1) {
      out.insert(out.end(), P.begin(), P.end());
      return;
    }
    depth_ = std::max(depth_, level);
    const std::vector<Point> s1 = left_of(P, p, r);
    const std::vector<Point> s2 = left_of(P, r, q);
    if (!s1.empty()) hull(s1, p, farthest(s1, p, r), r, level + 1, out);
    out.push_back(r);
    if (!s2.empty()) hull(s2, r, farthest(s2, r, q), q, level + 1, out);
  }

  Hull run(std::span<const Point> input) {
    if (input.empty()) throw std::invalid_argument("quickhull: empty point set");
    const std::vector<Point> P = dedup_stable(input);
    Hull h;
    if (audit_) h.audit = Audit{};
    if (P.size() == 1) {
      h.vertices = P;
      return h;
    }
    // Coordinate comparisons are exact, so p and q are true hull vertices.
    const Point p = *std::min_element(P.begin(), P.end(), lex_less);
    const Point q = *std::max_element(P.begin(), P.end(), lex_less);
    depth_ = 1;
    const std::vector<Point> s1 = left_of(P, p, q);
    const std::vector<Point> s2 = left_of(P, q, p);
    h.vertices.push_back(p);
    if (!s1.empty()) hull(s1, p, farthest(s1, p, q), q, 2, h.vertices);
    h.vertices.push_back(q);
    if (!s2.empty()) hull(s2, q, farthest(s2, q, p), p, 2, h.vertices);
    h.depth = depth_;
    h.comparisons = cmp_.evaluations();
    if (audit_) h.audit = counts_;
    return h;
  }

  [[nodiscard]] std::size_t depth() const { return depth_; }

 private:
  // With exact ties in distance, the first-seen winner may sit inside a hull
  // edge parallel to pq. Move to the tied point extreme along q - p, which is
  // a strict vertex.
  static Point slide_to_extreme(std::span<const Point> S, const Point& p, const Point& q,
                                Point r) {
    const Dyadic target = orient_exact(p, r, q);
    const Dyadic dx = Dyadic(q.x) - Dyadic(p.x);
    const Dyadic dy = Dyadic(q.y) - Dyadic(p.y);
    for (const Point& u : S) {
      if (u == r || !(orient_exact(p, u, q) == target)) continue;
      const Dyadic along = (Dyadic(u.x) - Dyadic(r.x)) * dx + (Dyadic(u.y) - Dyadic(r.y)) * dy;
      if (along.sign() > 0) r = u;
    }
    return r;
  }

  PredicateMode mode_;
  ReductionStrategy strategy_;
  bool audit_;
  Comparator cmp_;
  Audit counts_;
  std::size_t depth_ = 0;
};

}  // namespace detail

/// Quickhull. Float mode evaluates the rewritten floating-point predicates;
/// Exact mode evaluates the same expressions exactly.
inline Hull quickhull(std::span<const Point> P, PredicateMode mode,
                      ReductionStrategy strategy = ReductionStrategy::sequential(),
                      HullOptions options = {}) {
  return detail::QuickhullRun(mode, strategy, options.audit).run(P);
}

/// Definition-level hull: (a, b) is a clockwise edge iff every other point c
/// has orient(a, b, c) > 0 or lies on the closed segment ab. Vertices in the
/// middle of an edge are not emitted. O(n^3) exact evaluations.
inline Hull brute_force_hull(std::span<const Point> input) {
  if (input.empty()) throw std::invalid_argument("brute_force_hull: empty point set");
  const std::vector<Point> P = dedup_stable(input);
  Hull h;
  const std::size_t n = P.size();
  const auto start =
      static_cast<std::size_t>(std::min_element(P.begin(), P.end(), lex_less) - P.begin());
  if (n == 1) {
    h.vertices = P;
    return h;
  }

  auto is_edge = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      const int s = orient_exact(P[a], P[b], P[c]).sign();
      if (s > 0) continue;
      if (s == 0 && on_segment(P[c], P[a], P[b])) continue;
      return false;
    }
    return true;
  };

  std::size_t cur = start;
  std::vector<bool> seen(n, false);
  while (!seen[cur]) {
    seen[cur] = true;
    h.vertices.push_back(P[cur]);
    std::optional<std::size_t> next;
    for (std::size_t b = 0; b < n && !next; ++b) {
      if (b != cur && is_edge(cur, b)) next = b;
    }
    if (!next) break;
    cur = *next;
  }
  return h;
}

/// Every cyclic triple of consecutive vertices makes an exact right turn.
/// Hulls with fewer than three vertices have no triple and pass.
inline bool is_convex_clockwise(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rt_exact(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n])) return false;
  }
  return true;
}

inline bool is_convex_clockwise(const Hull& h) { return is_convex_clockwise(h.vertices); }

}  // namespace fpqh
