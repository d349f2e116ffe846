#pragma once

// Input generators. Everything is deterministic in (kind, n, seed).

#include "fpqh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpqh {

struct GeneratorSpec {
  enum class Kind {
    UniformDisk,
    UniformCircle,
    Gaussian,
    Collinear,
    WithDuplicates,
    Ladder,
    Grid,
    NearCollinear,  // a tilted line, rounded: predicates disagree often
  };

  Kind kind = Kind::UniformDisk;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t k = 1;  // Ladder only

  void validate() const {
    if (n < 1) throw std::invalid_argument("GeneratorSpec: n must be >= 1");
    if (kind == Kind::Ladder) {
      if (n % 2 != 0) throw std::invalid_argument("GeneratorSpec: Ladder needs an even n");
      if (k < 1) throw std::invalid_argument("GeneratorSpec: Ladder needs k >= 1");
    }
  }
};

inline constexpr GeneratorSpec::Kind kAllGeneratorKinds[] = {
    GeneratorSpec::Kind::UniformDisk,    GeneratorSpec::Kind::UniformCircle,
    GeneratorSpec::Kind::Gaussian,       GeneratorSpec::Kind::Collinear,
    GeneratorSpec::Kind::WithDuplicates, GeneratorSpec::Kind::Ladder,
    GeneratorSpec::Kind::Grid,           GeneratorSpec::Kind::NearCollinear,
};

inline std::string_view to_string(GeneratorSpec::Kind kind) {
  using K = GeneratorSpec::Kind;
  switch (kind) {
    case K::UniformDisk: return "disk";
    case K::UniformCircle: return "circle";
    case K::Gaussian: return "gaussian";
    case K::Collinear: return "collinear";
    case K::WithDuplicates: return "duplicates";
    case K::Ladder: return "ladder";
    case K::Grid: return "grid";
    case K::NearCollinear: return "near-collinear";
  }
  return "?";
}

inline GeneratorSpec::Kind parse_generator_kind(std::string_view name) {
  for (auto kind : kAllGeneratorKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double normal() {
    // Box-Muller; written out so streams do not depend on the library's
    // distribution implementation.
    const double u1 = 1.0 - unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }
  std::uint64_t next() { return gen_(); }
  std::mt19937_64& engine() { return gen_; }

  static constexpr double kPi = 3.14159265358979323846;

 private:
  std::mt19937_64 gen_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Adversarial ladder

/// Two interleaved arms above the segment pq = (-1, 0) -> (1, 0), one near
/// each endpoint. Distances to pq decrease by `spacing` in emission order,
/// the first point being the farthest. M = 1.
struct LadderInstance {
  DirectedSegment segment;
  std::vector<Point> points;
  double spacing;  // actual distance step, in units of M
};

/// Offsets are multiples of this grid, which is exact around the base height.
inline constexpr double kLadderGrid = 0x1p-61;
inline constexpr double kLadderBase = 0x1p-8;

/// Largest spacing on the ladder grid strictly below gamma6 / k, so pairs up
/// to k rungs apart differ by less than gamma6 and pairs k + 1 apart do not.
inline double ladder_spacing(std::size_t k) {
  const double target = kDouble.gamma6 / static_cast<double>(k);
  double steps = std::floor(target / kLadderGrid);
  if (steps * kLadderGrid >= target) steps -= 1.0;
  return steps * kLadderGrid;
}

inline LadderInstance ladder(std::size_t n, std::size_t k) {
  GeneratorSpec{GeneratorSpec::Kind::Ladder, n, 0, k}.validate();
  LadderInstance inst{{Point(-1.0, 0.0), Point(1.0, 0.0)}, {}, ladder_spacing(k)};
  inst.points.reserve(n);
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t rung = i / 2;  // position along the arm
    const double t = 0.5 * static_cast<double>(rung + 1) / static_cast<double>(half + 1);
    const double x = (i % 2 == 0) ? -1.0 + t : 1.0 - t;
    // Heights stay in [2^-9, 2^-8], where 2^-61 is the ulp.
    const double y = kLadderBase - static_cast<double>(i) * inst.spacing;
    inst.points.emplace_back(x, y);
  }
  return inst;
}

// ---------------------------------------------------------------------------

inline std::vector<Point> generate(const GeneratorSpec& spec) {
  spec.validate();
  using K = GeneratorSpec::Kind;
  detail::Rng rng(spec.seed);
  std::vector<Point> out;
  out.reserve(spec.n);
  const auto n = spec.n;
  switch (spec.kind) {
    case K::UniformDisk:
      while (out.size() < n) {
        const double r = std::sqrt(rng.unit());
        const double t = 2.0 * detail::Rng::kPi * rng.unit();
        out.emplace_back(r * std::cos(t), r * std::sin(t));
      }
      break;
    case K::UniformCircle:
      while (out.size() < n) {
        const double t = 2.0 * detail::Rng::kPi * rng.unit();
        out.emplace_back(std::cos(t), std::sin(t));
      }
      break;
    case K::Gaussian:
      while (out.size() < n) out.emplace_back(rng.normal(), rng.normal());
      break;
    case K::Collinear: {
      // Dyadic slope and offsets keep every point exactly on y = x/2 + 1/4.
      for (std::size_t i = 0; i < n; ++i) {
        const double x = std::ldexp(static_cast<double>(rng.next() >> 40) - 0x1p23, -23);
        out.emplace_back(x, 0.5 * x + 0.25);
      }
      break;
    }
    case K::WithDuplicates: {
      const std::size_t distinct = std::max<std::size_t>(1, n / 3);
      std::vector<Point> base;
      for (std::size_t i = 0; i < distinct; ++i) {
        base.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      }
      for (std::size_t i = 0; i < n; ++i) out.push_back(base[rng.next() % distinct]);
      break;
    }
    case K::Ladder:
      out = ladder(n, spec.k).points;
      break;
    case K::Grid: {
      std::size_t side = 1;
      while (side * side < n) ++side;
      std::vector<Point> cells;
      for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
          cells.emplace_back(static_cast<double>(i), static_cast<double>(j));
        }
      }
      std::shuffle(cells.begin(), cells.end(), rng.engine());
      out.assign(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(n));
      break;
    }
    case K::NearCollinear: {
      const double slope = rng.uniform(0.1, 0.9);
      const double offset = rng.uniform(-0.5, 0.5);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform(-1.0, 1.0);
        out.emplace_back(x, slope * x + offset);
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Abstract distance ladders for the Monte Carlo experiment

/// Distances to a notional segment, stored as integer ranks. Rank r stands
/// for distance r / k in units of gamma6 * M; the spacing is taken just
/// below gamma6 / k, so two entries are indistinguishable (~) exactly when
/// their ranks differ by at most k.
struct DistanceSequence {
  std::vector<std::uint32_t> ranks;
  std::size_t k = 1;

  [[nodiscard]] std::size_t size() const { return ranks.size(); }
  /// Distance of entry i in units of gamma6 * M.
  [[nodiscard]] double value(std::size_t i) const {
    return static_cast<double>(ranks[i]) / static_cast<double>(k);
  }
  [[nodiscard]] bool related(std::size_t i, std::size_t j) const {
    const auto a = ranks[i], b = ranks[j];
    return (a > b ? a - b : b - a) <= k;
  }
};

/// n ranks in descending order: n - 1, ..., 0.
inline DistanceSequence mc_distance_ladder(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("mc_distance_ladder: n and k must be >= 1");
  DistanceSequence s;
  s.k = k;
  s.ranks.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.ranks[i] = static_cast<std::uint32_t>(n - 1 - i);
  return s;
}

/// Uniform random permutation (Fisher-Yates), deterministic per seed.
inline DistanceSequence permute(DistanceSequence seq, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::shuffle(seq.ranks.begin(), seq.ranks.end(), gen);
  return seq;
}

}  // namespace fpqh
