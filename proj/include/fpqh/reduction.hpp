#pragma once

// Farthest-point reductions. Finding the point farthest from a segment is a
// reduction with the farther-than test as the operator; in floating point the
// result depends on evaluation order, like summation. Three orders are
// provided: a sequential scan, a blocked scan, and pairwise recursion.
//
// The reductions are generic over the element type and take a binary
// predicate `farther(a, b)` answering "is a farther than b". Geometric callers
// bind a segment into a Comparator; the experiments run the same loops over
// abstract distance ranks.

#include "fpqh/geometry.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <variant>

namespace fpqh {

// ---------------------------------------------------------------------------
// Strategies

struct ReductionStrategy {
  enum class Kind { Sequential, Blocked, Pairwise };

  Kind kind = Kind::Sequential;
  /// Block size for Blocked; 0 selects ceil(sqrt(n)) per reduction.
  std::size_t block = 0;

  static constexpr ReductionStrategy sequential() { return {Kind::Sequential, 0}; }
  static constexpr ReductionStrategy blocked(std::size_t m = 0) { return {Kind::Blocked, m}; }
  static constexpr ReductionStrategy pairwise() { return {Kind::Pairwise, 0}; }

  /// Block size actually used for a reduction over n items.
  [[nodiscard]] std::size_t block_size(std::size_t n) const {
    if (block != 0) return block;
    std::size_t m = 1;
    while (m * m < n) ++m;
    return m;
  }
};

inline const char* to_string(ReductionStrategy::Kind kind) {
  switch (kind) {
    case ReductionStrategy::Kind::Sequential: return "sequential";
    case ReductionStrategy::Kind::Blocked: return "blocked";
    case ReductionStrategy::Kind::Pairwise: return "pairwise";
  }
  return "?";
}

inline std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

/// Longest chain of comparisons a result can pass through, for n items. Each
/// wrong comparison on the chain costs at most one tolerance unit, so this is
/// the error bound in units of gamma6 * M.
inline std::size_t chain_length(const ReductionStrategy& s, std::size_t n) {
  if (n <= 1) return 0;
  switch (s.kind) {
    case ReductionStrategy::Kind::Sequential:
      return n - 1;
    case ReductionStrategy::Kind::Blocked: {
      const std::size_t m = s.block_size(n);
      const std::size_t blocks = (n + m - 1) / m;
      return (std::min(m, n) - 1) + (blocks - 1);
    }
    case ReductionStrategy::Kind::Pairwise:
      return ceil_log2(n);
  }
  return n - 1;
}

/// Worst chain length over every subproblem size up to n. With a fixed block
/// size this equals chain_length(s, n); with the sqrt(n) default it need not.
inline std::size_t max_chain_length(const ReductionStrategy& s, std::size_t n) {
  if (s.kind != ReductionStrategy::Kind::Blocked || s.block != 0) return chain_length(s, n);
  std::size_t worst = 0;
  for (std::size_t i = 1; i <= n; ++i) worst = std::max(worst, chain_length(s, i));
  return worst;
}

// ---------------------------------------------------------------------------
// Generic reductions

namespace detail {
inline void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("reduction over an empty set");
}
}  // namespace detail

/// u_max := P[0]; for i in 1..n-1: if farther(P[i], u_max) then u_max := P[i].
template <class T, class Farther>
T reduce_sequential(std::span<const T> items, Farther&& farther) {
  detail::require_nonempty(items.size());
  T best = items[0];
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (farther(items[i], best)) best = items[i];
  }
  return best;
}

/// Sequential scans over blocks of m items; each block winner is then
/// compared once against the running winner. The first block's scan runs
/// directly on the running winner, so m >= n is exactly reduce_sequential.
template <class T, class Farther>
T reduce_blocked(std::span<const T> items, std::size_t m, Farther&& farther) {
  detail::require_nonempty(items.size());
  if (m == 0) throw std::invalid_argument("reduce_blocked: block size must be >= 1");
  const std::size_t n = items.size();
  T best = items[0];
  for (std::size_t i = 1; i < std::min(m, n); ++i) {
    if (farther(items[i], best)) best = items[i];
  }
  for (std::size_t start = m; start < n; start += m) {
    T block_best = items[start];
    const std::size_t end = std::min(start + m, n);
    for (std::size_t i = start + 1; i < end; ++i) {
      if (farther(items[i], block_best)) block_best = items[i];
    }
    if (farther(block_best, best)) best = block_best;
  }
  return best;
}

/// Winner of the first floor(n/2) items against winner of the rest; the
/// first half wins only if it is strictly farther.
template <class T, class Farther>
T reduce_pairwise(std::span<const T> items, Farther&& farther) {
  detail::require_nonempty(items.size());
  if (items.size() == 1) return items[0];
  const std::size_t half = items.size() / 2;
  T first = reduce_pairwise(items.first(half), farther);
  T second = reduce_pairwise(items.subspan(half), farther);
  return farther(first, second) ? first : second;
}

template <class T, class Farther>
T reduce(const ReductionStrategy& s, std::span<const T> items, Farther&& farther) {
  switch (s.kind) {
    case ReductionStrategy::Kind::Sequential:
      return reduce_sequential(items, farther);
    case ReductionStrategy::Kind::Blocked:
      return reduce_blocked(items, s.block_size(items.size()), farther);
    case ReductionStrategy::Kind::Pairwise:
      return reduce_pairwise(items, farther);
  }
  return reduce_sequential(items, farther);
}

// ---------------------------------------------------------------------------
// Geometric comparators

struct FloatPredicate {};
struct ExactPredicate {};
/// Gives the wrong exact answer whenever |d(u, pq) - d(u2, pq)| < tol * M.
struct AdversarialWithinTolerance {
  double tol;
};
/// Flips the exact answer with the given probability when within tolerance.
struct RandomWithinTolerance {
  double tol;
  double flip_probability;
  std::uint64_t rng_seed;
};

using ComparatorPolicy =
    std::variant<FloatPredicate, ExactPredicate, AdversarialWithinTolerance, RandomWithinTolerance>;

/// Exactly decides |d(u, pq) - d(u2, pq)| < tol * M.
inline bool within_tolerance(const DirectedSegment& seg, const Point& u, const Point& u2,
                             double tol, Scale M) {
  const Dyadic a = orient_exact(seg.p, u, seg.q).abs();
  const Dyadic b = orient_exact(seg.p, u2, seg.q).abs();
  const Dyadic diff = a - b;
  const Dyadic dx = Dyadic(seg.q.x) - Dyadic(seg.p.x);
  const Dyadic dy = Dyadic(seg.q.y) - Dyadic(seg.p.y);
  const Dyadic t = Dyadic(tol) * Dyadic(M.value);
  // |a - b| / |pq| < t  <=>  (a - b)^2 < t^2 |pq|^2
  return diff * diff < t * t * (dx * dx + dy * dy);
}

/// A farther-than test with a policy. Not thread-safe: the random policy
/// carries generator state, so use one instance per thread.
class Comparator {
 public:
  explicit Comparator(ComparatorPolicy policy, Scale M = {})
      : policy_(policy), scale_(M) {
    if (const auto* r = std::get_if<RandomWithinTolerance>(&policy_)) {
      rng_.seed(r->rng_seed);
    }
    if (!std::holds_alternative<FloatPredicate>(policy_) &&
        !std::holds_alternative<ExactPredicate>(policy_) && !(M.value > 0.0)) {
      throw std::invalid_argument("Comparator: tolerance policies need a scale M > 0");
    }
  }

  static Comparator float_predicate() { return Comparator(FloatPredicate{}); }
  static Comparator exact_predicate() { return Comparator(ExactPredicate{}); }

  /// Is u farther from the line through seg than u2?
  bool operator()(const DirectedSegment& seg, const Point& u, const Point& u2) {
    ++evaluations_;
    return std::visit([&](const auto& pol) { return decide(pol, seg, u, u2); }, policy_);
  }

  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }
  [[nodiscard]] const ComparatorPolicy& policy() const { return policy_; }

 private:
  bool decide(const FloatPredicate&, const DirectedSegment& s, const Point& u, const Point& u2) {
    return frt_float(s.p, s.q, u, u2);
  }
  bool decide(const ExactPredicate&, const DirectedSegment& s, const Point& u, const Point& u2) {
    return frt_exact(s.p, s.q, u, u2);
  }
  bool decide(const AdversarialWithinTolerance& a, const DirectedSegment& s, const Point& u,
              const Point& u2) {
    const bool truth = frt_exact(s.p, s.q, u, u2);
    return within_tolerance(s, u, u2, a.tol, scale_) ? !truth : truth;
  }
  bool decide(const RandomWithinTolerance& r, const DirectedSegment& s, const Point& u,
              const Point& u2) {
    const bool truth = frt_exact(s.p, s.q, u, u2);
    if (!within_tolerance(s, u, u2, r.tol, scale_)) return truth;
    // 53 random bits -> uniform in [0, 1); avoids implementation-defined
    // distribution objects so results are stable across standard libraries.
    const double draw = static_cast<double>(rng_() >> 11) * 0x1p-53;
    return draw < r.flip_probability ? !truth : truth;
  }

  ComparatorPolicy policy_;
  Scale scale_;
  std::mt19937_64 rng_;
  std::size_t evaluations_ = 0;
};

// ---------------------------------------------------------------------------
// Geometric entry points

inline Point reduce_sequential(std::span<const Point> P, const DirectedSegment& seg,
                               Comparator& cmp) {
  return reduce_sequential(P, [&](const Point& a, const Point& b) { return cmp(seg, a, b); });
}

inline Point reduce_blocked(std::span<const Point> P, const DirectedSegment& seg, std::size_t m,
                            Comparator& cmp) {
  return reduce_blocked(P, m, [&](const Point& a, const Point& b) { return cmp(seg, a, b); });
}

inline Point reduce_pairwise(std::span<const Point> P, const DirectedSegment& seg,
                             Comparator& cmp) {
  return reduce_pairwise(P, [&](const Point& a, const Point& b) { return cmp(seg, a, b); });
}

inline Point reduce(const ReductionStrategy& s, std::span<const Point> P,
                    const DirectedSegment& seg, Comparator& cmp) {
  return reduce(s, P, [&](const Point& a, const Point& b) { return cmp(seg, a, b); });
}

/// F = (max_P d(u, pq) - d(chosen, pq)) / M, from exact distances.
inline double reduction_error(std::span<const Point> P, const DirectedSegment& seg,
                              const Point& chosen, Scale M) {
  detail::require_nonempty(P.size());
  if (!(M.value > 0.0)) throw std::invalid_argument("reduction_error: M must be > 0");
  Dyadic best = orient_exact(seg.p, P[0], seg.q).abs();
  for (const Point& u : P.subspan(1)) {
    Dyadic a = orient_exact(seg.p, u, seg.q).abs();
    if (a > best) best = std::move(a);
  }
  const Dyadic gap = best - orient_exact(seg.p, chosen, seg.q).abs();
  return gap.to_double() / segment_length(seg.p, seg.q) / M.value;
}

}  // namespace fpqh
