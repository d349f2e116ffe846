#pragma once

// Experiment harness: the Monte Carlo study of the sequential reduction
// under random order, worst-order injection runs for each reduction
// strategy, and end-to-end forward-error measurement of Quickhull.

#include "fpqh/generators.hpp"
#include "fpqh/metrics.hpp"
#include "fpqh/quickhull.hpp"
#include "fpqh/reduction.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fpqh {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t k,
                                    std::uint64_t repeat, std::uint64_t sample) {
  std::uint64_t s = mix_seed(master);
  for (std::uint64_t v : {n, k, repeat, sample}) s = mix_seed(s ^ v);
  return s;
}

// ---------------------------------------------------------------------------
// Rank comparators

/// Farther-than over distance ranks with an indistinguishability window of
/// k ranks (one gamma6 unit).
struct RankComparator {
  enum class Policy {
    /// Within the window the candidate always wins, so a scan keeps moving
    /// its guess along chains of indistinguishable points.
    CandidateWins,
    /// Within the window the answer is always wrong.
    Wrong,
  };

  Policy policy;
  std::size_t k;

  bool operator()(std::uint32_t candidate, std::uint32_t incumbent) const {
    const bool truth = candidate > incumbent;
    const auto gap = candidate > incumbent ? candidate - incumbent : incumbent - candidate;
    if (gap > k) return truth;
    return policy == Policy::CandidateWins ? true : !truth;
  }
};

/// F / gamma6 of a reduction result over a rank sequence.
inline double rank_error(const DistanceSequence& seq, std::uint32_t chosen) {
  const auto top = *std::max_element(seq.ranks.begin(), seq.ranks.end());
  return static_cast<double>(top - chosen) / static_cast<double>(seq.k);
}

/// Sequential scan over an already-permuted sequence.
inline double mc_chain(const DistanceSequence& seq) {
  const RankComparator cmp{RankComparator::Policy::CandidateWins, seq.k};
  const auto chosen = reduce_sequential(std::span<const std::uint32_t>(seq.ranks), cmp);
  return rank_error(seq, chosen);
}

/// One Monte Carlo sample: F / gamma6 for a random order of the ladder.
inline double mc_trial(std::size_t n, std::size_t k, std::uint64_t seed) {
  return mc_chain(permute(mc_distance_ladder(n, k), seed));
}

// ---------------------------------------------------------------------------
// Monte Carlo experiment

struct McConfig {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> k_values;
  std::size_t samples = 300;
  std::size_t repeats = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (n_values.empty() || k_values.empty()) throw std::invalid_argument("McConfig: empty grid");
    if (samples < 1 || repeats < 1) {
      throw std::invalid_argument("McConfig: samples and repeats must be >= 1");
    }
    for (auto n : n_values) {
      if (n < 1 || n > (std::size_t{1} << 31)) throw std::invalid_argument("McConfig: bad n");
    }
    for (auto k : k_values) {
      if (k < 1) throw std::invalid_argument("McConfig: k must be >= 1");
    }
  }

  /// n in {256, 1024, ..., 65536}, k in 1..10, 300 samples, 10 repeats.
  static McConfig desk() {
    return {{256, 1024, 4096, 16384, 65536}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 300, 10, 1, 0};
  }
  /// Every power of two from 256 to 2^20.
  static McConfig full_grid() {
    McConfig c = desk();
    c.n_values.clear();
    for (std::size_t n = 256; n <= (std::size_t{1} << 20); n *= 2) c.n_values.push_back(n);
    return c;
  }
};

struct ExperimentRecord {
  std::size_t n;
  std::size_t k;
  double mean;    // mean over repeats of the per-repeat sample mean of F / gamma6
  double stddev;  // sample standard deviation of the per-repeat means
};

/// Runs every (k, n) cell; rows come out in (k, n) order. Per-trial values
/// are collected into fixed slots, so results do not depend on scheduling.
inline std::vector<ExperimentRecord> mc_experiment(const McConfig& cfg) {
  cfg.validate();
  struct Task {
    std::size_t n, k, repeat;
  };
  std::vector<Task> tasks;
  for (auto k : cfg.k_values) {
    for (auto n : cfg.n_values) {
      for (std::size_t r = 0; r < cfg.repeats; ++r) tasks.push_back({n, k, r});
    }
  }
  std::vector<double> repeat_means(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      double sum = 0.0;
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        sum += mc_trial(task.n, task.k, derive_seed(cfg.seed, task.n, task.k, task.repeat, s));
      }
      repeat_means[t] = sum / static_cast<double>(cfg.samples);
    }
  };
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<ExperimentRecord> rows;
  for (std::size_t t = 0; t < tasks.size(); t += cfg.repeats) {
    const std::span<const double> means(repeat_means.data() + t, cfg.repeats);
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(means.size());
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    const double sd = means.size() > 1 ? std::sqrt(var / static_cast<double>(means.size() - 1)) : 0.0;
    rows.push_back({tasks[t].n, tasks[t].k, mean, sd});
  }
  return rows;
}

inline void write_mc_csv(std::ostream& os, std::span<const ExperimentRecord> rows) {
  os << "n,k,mean,stddev\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.6f,%.6f\n", r.n, r.k, r.mean, r.stddev);
    os << buf;
  }
}

/// Least-squares slope of mean against log2(n), per doubling of n.
inline double slope_per_doubling(std::span<const ExperimentRecord> rows) {
  const double count = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log2(static_cast<double>(r.n));
    sx += x;
    sy += r.mean;
    sxx += x * x;
    sxy += x * r.mean;
  }
  const double den = count * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (count * sxy - sx * sy) / den;
}

// ---------------------------------------------------------------------------
// Injection

struct InjectionResult {
  double measured;  // F / gamma6
  double bound;     // same unit
  [[nodiscard]] bool within() const { return measured <= bound; }
};

/// Runs a strategy over the descending ladder (the worst order) with a
/// comparator that is wrong whenever two points are indistinguishable.
inline InjectionResult injection_experiment(std::size_t n, std::size_t k,
                                            const ReductionStrategy& strategy) {
  if (n < 1) throw std::invalid_argument("injection_experiment: n must be >= 1");
  const DistanceSequence seq = mc_distance_ladder(n, k);
  const RankComparator cmp{RankComparator::Policy::Wrong, k};
  const auto chosen = reduce(strategy, std::span<const std::uint32_t>(seq.ranks), cmp);
  InjectionResult r;
  r.measured = rank_error(seq, chosen);
  // On the ladder every wrong step costs exactly 1/k, so the sequential
  // bound is (n - 1)/k; the other strategies use one full unit per step.
  r.bound = strategy.kind == ReductionStrategy::Kind::Sequential
                ? static_cast<double>(n - 1) / static_cast<double>(k)
                : static_cast<double>(chain_length(strategy, n));
  return r;
}

// ---------------------------------------------------------------------------
// Forward error

struct ForwardErrorResult {
  ErrorReport report;
  Audit audit;
  std::size_t hull_size = 0;
  /// d_M / gamma6 stayed below 10 log2(hull size). Reported only.
  bool practical_regime = true;
  std::vector<Point> points;
};

inline ForwardErrorResult forward_error_experiment(std::span<const Point> P,
                                                   const ReductionStrategy& strategy) {
  ForwardErrorResult out;
  out.points.assign(P.begin(), P.end());
  const Scale M = max_abs_coord(P);
  const Hull fh = quickhull(P, PredicateMode::Float, strategy, {.audit = true});
  const Hull eh = quickhull(P, PredicateMode::Exact, strategy);
  out.audit = fh.audit.value_or(Audit{});
  out.hull_size = eh.vertices.size();
  if (M.value > 0.0) {
    out.report = forward_error(P, fh, eh, M, strategy);
  } else {
    out.report.depth = fh.depth;  // all points at the origin: one vertex
  }
  const double practical =
      10.0 * std::log2(std::max<double>(2.0, static_cast<double>(out.hull_size)));
  out.practical_regime = out.report.d_M / kDouble.gamma6 <= practical;
  return out;
}

inline ForwardErrorResult forward_error_experiment(const GeneratorSpec& spec,
                                                   const ReductionStrategy& strategy) {
  const std::vector<Point> P = generate(spec);
  return forward_error_experiment(P, strategy);
}

// ---------------------------------------------------------------------------
// Predicate error properties

struct PredicateCheckResult {
  std::size_t triples = 0;
  std::size_t quadruples = 0;
  std::size_t rt_disagreements = 0;
  std::size_t frt_disagreements = 0;
  std::size_t violations = 0;
  /// Largest observed distance (rt) or distance gap (frt) over gamma6 * M
  /// among disagreements.
  double worst_rt_ratio = 0.0;
  double worst_frt_ratio = 0.0;
};

namespace detail {

/// Moves v by up to `ulps` representable steps in either direction.
inline double nudge(double v, int steps) {
  const double dir = steps < 0 ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity();
  for (int i = 0; i < std::abs(steps); ++i) v = std::nextafter(v, dir);
  return v;
}

struct NearDegenerate {
  explicit NearDegenerate(std::uint64_t seed) : rng(seed) {}

  double scale() {
    switch (rng.next() % 4) {
      case 0: return 1.0;
      case 1: return 0x1p20;
      case 2: return 0x1p-20;
      default: return std::ldexp(1.0, static_cast<int>(rng.next() % 80) - 40);
    }
  }
  int steps() { return static_cast<int>(rng.next() % 9) - 4; }

  /// A point near p + t (q - p) + h n, where n is a unit normal of pq.
  Point near_line(const Point& p, const Point& q, double t, double h) {
    const double dx = q.x - p.x, dy = q.y - p.y;
    const double len = std::hypot(dx, dy);
    double x = p.x + t * dx, y = p.y + t * dy;
    if (len > 0) {
      x -= h * dy / len;
      y += h * dx / len;
    }
    return {nudge(x, steps()), nudge(y, steps())};
  }

  std::pair<Point, Point> segment(double M) {
    if (rng.next() % 4 == 0) {
      // Integer coordinates: exact collinearity is common.
      auto coord = [&] { return static_cast<double>(static_cast<int>(rng.next() % 65) - 32); };
      return {Point(coord() * M / 32, coord() * M / 32), Point(coord() * M / 32, coord() * M / 32)};
    }
    return {Point(rng.uniform(-M, M), rng.uniform(-M, M)),
            Point(rng.uniform(-M, M), rng.uniform(-M, M))};
  }

  Rng rng;
};

inline double ratio(const Dyadic& numerator, const Point& p, const Point& q, Scale M) {
  if (!(M.value > 0.0)) return 0.0;
  return numerator.abs().to_double() / segment_length(p, q) / (kDouble.gamma6 * M.value);
}

}  // namespace detail

/// Fuzzes near-degenerate triples and quadruples. Whenever a float predicate
/// disagrees with its exact counterpart, the point (rt) or the pair of points
/// (frt) must be within gamma6 * M of the decision boundary:
///   rt:  d(u, pq) <= gamma6 M
///   frt: the truly farther point is farther by at most gamma6 M.
inline PredicateCheckResult predicate_property_check(std::size_t count, std::uint64_t seed) {
  PredicateCheckResult r;
  detail::NearDegenerate gen(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const double S = gen.scale();
    const auto [p, q] = gen.segment(S);
    const double t = gen.rng.uniform(-0.5, 1.5);
    const double h = (gen.rng.next() % 2 == 0) ? 0.0 : S * std::ldexp(gen.rng.unit(), -50);
    const Point u = gen.near_line(p, q, t, h);
    ++r.triples;
    const std::array<Point, 3> tri{p, u, q};
    const Scale M = max_abs_coord(tri);
    if (rt_float(p, u, q) != rt_exact(p, u, q)) {
      ++r.rt_disagreements;
      // p == q makes both predicates false, so a disagreement implies p != q.
      const double x = detail::ratio(orient_exact(p, u, q), p, q, M);
      r.worst_rt_ratio = std::max(r.worst_rt_ratio, x);
      if (x > 1.0) ++r.violations;
    }

    const Point u2 = gen.near_line(p, q, gen.rng.uniform(-0.5, 1.5), h);
    ++r.quadruples;
    const std::array<Point, 4> quad{p, q, u, u2};
    const Scale M4 = max_abs_coord(quad);
    if (frt_float(p, q, u, u2) != frt_exact(p, q, u, u2)) {
      ++r.frt_disagreements;
      const double x = detail::ratio(orient_exact(p, u, q) - orient_exact(p, u2, q), p, q, M4);
      r.worst_frt_ratio = std::max(r.worst_frt_ratio, x);
      if (x > 1.0) ++r.violations;
    }
  }
  return r;
}

/// Mixed corpus: every generator kind at several sizes.
inline std::vector<GeneratorSpec> fuzz_corpus(std::uint64_t seed, std::size_t per_kind,
                                              std::size_t max_n = 512) {
  std::vector<GeneratorSpec> specs;
  std::mt19937_64 gen(seed);
  for (auto kind : kAllGeneratorKinds) {
    for (std::size_t i = 0; i < per_kind; ++i) {
      std::size_t n = 4 + gen() % (max_n - 3);
      if (kind == GeneratorSpec::Kind::Ladder && n % 2 != 0) ++n;
      specs.push_back({kind, n, gen(), 1 + gen() % 10});
    }
  }
  return specs;
}

}  // namespace fpqh
