// fpqh: hulls of point files and the experiment runners.
//
// Exit status: 0 on success, 1 when an asserted bound is violated, 2 on
// usage or input errors.

#include "fpqh/fpqh.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fpqh;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kError = 2;

struct StrategyArgs {
  std::string name = "sequential";
  std::size_t block = 0;

  [[nodiscard]] ReductionStrategy get() const {
    if (name == "sequential") return ReductionStrategy::sequential();
    if (name == "blocked") return ReductionStrategy::blocked(block);
    return ReductionStrategy::pairwise();
  }

  void add_to(CLI::App* app) {
    app->add_option("--strategy", name, "Farthest-point reduction")
        ->check(CLI::IsMember({"sequential", "blocked", "pairwise"}))
        ->capture_default_str();
    app->add_option("--block", block, "Block size m for --strategy blocked (0: ceil(sqrt(n)))")
        ->capture_default_str();
  }
};

std::string fmt(double v) { return format_double(v, false); }

/// Output goes to the path if one is given, else to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

/// Writes a violating instance as hex floats so it replays bit for bit.
std::string dump_instance(const std::string& output, const std::string& tag,
                          std::span<const Point> P) {
  const std::string path = (output.empty() ? std::string("fpqh") : output) + "." + tag + ".csv";
  std::ofstream f(path, std::ios::binary);
  write_points(f, P, true);
  return path;
}

// ---------------------------------------------------------------------------

struct HullArgs {
  std::string input;
  std::string output;
  std::string mode = "float";
  StrategyArgs strategy;
  bool audit = false;
  bool bitexact = false;
};

int cmd_hull(const HullArgs& a) {
  std::ifstream in(a.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << a.input << "\n";
    return kError;
  }
  std::vector<Point> P;
  try {
    P = read_points(in);
  } catch (const ParseError& e) {
    std::cerr << a.input << ": " << e.what() << "\n";
    return kError;
  }
  if (P.empty()) {
    std::cerr << "error: " << a.input << " contains no points\n";
    return kError;
  }
  const PredicateMode mode = a.mode == "exact" ? PredicateMode::Exact : PredicateMode::Float;
  const Hull h = quickhull(P, mode, a.strategy.get(), {.audit = a.audit});
  Sink sink(a.output);
  write_points(sink.stream(), h.vertices, a.bitexact);
  std::cerr << "points=" << P.size() << " vertices=" << h.vertices.size() << " depth=" << h.depth
            << " comparisons=" << h.comparisons << " mode=" << to_string(mode)
            << " strategy=" << to_string(a.strategy.get().kind);
  if (h.audit) {
    std::cerr << " rt_disagreements=" << h.audit->rt_disagreements
              << " frt_disagreements=" << h.audit->frt_disagreements;
  }
  std::cerr << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct McArgs {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> k_values;
  std::size_t samples = 300;
  std::size_t repeats = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool full_grid = false;
  std::string output;
};

int cmd_mc(const McArgs& a) {
  McConfig cfg = a.full_grid ? McConfig::full_grid() : McConfig::desk();
  if (!a.n_values.empty()) cfg.n_values = a.n_values;
  if (!a.k_values.empty()) cfg.k_values = a.k_values;
  cfg.samples = a.samples;
  cfg.repeats = a.repeats;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  const auto rows = mc_experiment(cfg);
  Sink sink(a.output);
  write_mc_csv(sink.stream(), rows);
  return kOk;
}

// ---------------------------------------------------------------------------

struct InjectArgs {
  std::vector<std::size_t> n_values{1024};
  std::vector<std::size_t> k_values{1, 5, 10};
  StrategyArgs strategy;
  std::string output;
};

int cmd_inject(const InjectArgs& a) {
  const ReductionStrategy s = a.strategy.get();
  std::ostringstream csv;
  csv << "strategy,n,k,m,measured,bound,within\n";
  bool ok = true;
  for (auto n : a.n_values) {
    for (auto k : a.k_values) {
      if (n < 1 || k < 1) {
        std::cerr << "error: n and k must be >= 1\n";
        return kError;
      }
      const InjectionResult r = injection_experiment(n, k, s);
      ok = ok && r.within();
      const std::size_t m = s.kind == ReductionStrategy::Kind::Blocked ? s.block_size(n) : 0;
      std::cout << to_string(s.kind) << " n=" << n << " k=" << k;
      if (m != 0) std::cout << " m=" << m;
      std::cout << ": measured " << fmt(r.measured) << " gamma6, bound " << fmt(r.bound)
                << (r.within() ? "" : "  VIOLATION") << "\n";
      csv << to_string(s.kind) << ',' << n << ',' << k << ',' << m << ',' << fmt(r.measured) << ','
          << fmt(r.bound) << ',' << (r.within() ? 1 : 0) << '\n';
      if (!r.within()) {
        // The instance is the descending ladder in rank form; its geometric
        // counterpart is written for replay.
        if (n % 2 == 0) {
          const auto path = dump_instance(a.output, "inject-n" + std::to_string(n) + "-k" +
                                                        std::to_string(k),
                                          ladder(n, k).points);
          std::cout << "  instance written to " << path << "\n";
        }
      }
    }
  }
  if (!a.output.empty()) Sink(a.output).stream() << csv.str();
  return ok ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

struct ForwardErrorArgs {
  std::string input;
  std::uint64_t seed = 1;
  std::size_t per_kind = 25;
  std::size_t max_n = 512;
  StrategyArgs strategy;
  std::string output;
};

int cmd_forward_error(const ForwardErrorArgs& a) {
  const ReductionStrategy s = a.strategy.get();
  struct Item {
    std::string label;
    std::vector<Point> points;
  };
  std::vector<Item> items;
  if (!a.input.empty()) {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << a.input << "\n";
      return kError;
    }
    try {
      items.push_back({a.input, read_points(in)});
    } catch (const ParseError& e) {
      std::cerr << a.input << ": " << e.what() << "\n";
      return kError;
    }
    if (items.back().points.empty()) {
      std::cerr << "error: " << a.input << " contains no points\n";
      return kError;
    }
  } else {
    if (a.max_n < 4) {
      std::cerr << "error: --max-n must be >= 4\n";
      return kError;
    }
    for (const auto& spec : fuzz_corpus(a.seed, a.per_kind, a.max_n)) {
      items.push_back({std::string(to_string(spec.kind)) + ":" + std::to_string(spec.n) + ":" +
                           std::to_string(spec.seed),
                       generate(spec)});
    }
  }

  std::ostringstream csv;
  csv << "instance,n,hull_size,depth,d_M,bound,rt_disagreements,frt_disagreements,within\n";
  std::size_t violations = 0, practical = 0, disagreeing = 0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto r = forward_error_experiment(items[i].points, s);
    const bool ok = r.report.within_bound();
    csv << items[i].label << ',' << items[i].points.size() << ',' << r.hull_size << ','
        << r.report.depth << ',' << fmt(r.report.d_M) << ',' << fmt(r.report.bound) << ','
        << r.audit.rt_disagreements << ',' << r.audit.frt_disagreements << ',' << (ok ? 1 : 0)
        << '\n';
    if (r.practical_regime) ++practical;
    if (r.audit.total() > 0) ++disagreeing;
    if (r.report.bound > 0) worst_ratio = std::max(worst_ratio, r.report.d_M / r.report.bound);
    if (!ok) {
      ++violations;
      const auto path = dump_instance(a.output, "violation-" + std::to_string(i), items[i].points);
      std::cout << "VIOLATION " << items[i].label << ": d_M " << fmt(r.report.d_M) << " > bound "
                << fmt(r.report.bound) << "; instance written to " << path << "\n";
    }
  }
  std::cout << "forward-error " << to_string(s.kind) << ": " << items.size() << " instances, "
            << disagreeing << " with predicate disagreements, " << violations
            << " bound violations, worst d_M/bound " << fmt(worst_ratio) << ", " << practical
            << " within the practical regime\n";
  if (!a.output.empty()) Sink(a.output).stream() << csv.str();
  return violations == 0 ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

struct ConditioningArgs {
  std::vector<double> deltas{1e-3, 1e-6, 1e-9};
  std::size_t instances = 100;
  std::size_t n = 32;
  int trials = 1;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_conditioning(const ConditioningArgs& a) {
  if (a.n < 4) {
    std::cerr << "error: --n must be >= 4\n";
    return kError;
  }
  for (double d : a.deltas) {
    if (!(d >= 0.0)) {
      std::cerr << "error: deltas must be >= 0\n";
      return kError;
    }
  }
  std::ostringstream csv;
  csv << "generator,instance,delta,input_distance,hull_distance,passed\n";
  std::size_t violations = 0, total = 0;
  for (auto kind : kAllGeneratorKinds) {
    for (std::size_t i = 0; i < a.instances; ++i) {
      const std::size_t n = (kind == GeneratorSpec::Kind::Ladder && a.n % 2 != 0) ? a.n + 1 : a.n;
      const GeneratorSpec spec{kind, n, derive_seed(a.seed, static_cast<std::uint64_t>(kind), i, 0, 0), 1 + i % 10};
      const std::vector<Point> P = generate(spec);
      for (std::size_t di = 0; di < a.deltas.size(); ++di) {
        for (int t = 0; t < a.trials; ++t) {
          const auto trial = conditioning_trial(P, a.deltas[di], derive_seed(spec.seed, di, static_cast<std::uint64_t>(t), 1, 0));
          ++total;
          csv << to_string(kind) << ',' << i << ',' << fmt(a.deltas[di]) << ','
              << fmt(trial.input_distance) << ',' << fmt(trial.hull_distance) << ','
              << (trial.passed ? 1 : 0) << '\n';
          if (!trial.passed) {
            ++violations;
            const auto path = dump_instance(
                a.output, "conditioning-" + std::string(to_string(kind)) + "-" + std::to_string(i), P);
            std::cout << "VIOLATION " << to_string(kind) << " #" << i << " delta "
                      << fmt(a.deltas[di]) << ": hull moved " << fmt(trial.hull_distance)
                      << ", input moved " << fmt(trial.input_distance) << "; instance written to "
                      << path << "\n";
          }
        }
      }
    }
  }
  std::cout << "conditioning: " << total << " trials, " << violations << " violations\n";
  if (!a.output.empty()) Sink(a.output).stream() << csv.str();
  return violations == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Quickhull with floating-point error analysis"};
  app.require_subcommand(1);

  HullArgs hull;
  auto* h = app.add_subcommand("hull", "Convex hull of a point file (x,y per line), clockwise");
  h->add_option("-i,--input", hull.input, "Point file")->required();
  h->add_option("-o,--output", hull.output, "Hull file (default: stdout)");
  h->add_option("--mode", hull.mode, "Predicate arithmetic")
      ->check(CLI::IsMember({"float", "exact"}))
      ->capture_default_str();
  hull.strategy.add_to(h);
  h->add_flag("--audit", hull.audit, "Count float/exact predicate disagreements");
  h->add_flag("--bitexact", hull.bitexact, "Write coordinates as hex floats");

  McArgs mc;
  auto* m = app.add_subcommand("mc", "Monte Carlo study of the sequential reduction error");
  m->add_option("--n", mc.n_values, "Sizes (default: 256 1024 4096 16384 65536)");
  m->add_option("--k", mc.k_values, "Ladder densities (default: 1..10)");
  m->add_option("--samples", mc.samples, "Samples per repeat")->capture_default_str();
  m->add_option("--repeats", mc.repeats, "Repeats per cell")->capture_default_str();
  m->add_option("--seed", mc.seed, "Master seed")->capture_default_str();
  m->add_option("--threads", mc.threads, "Worker threads (0: all cores); output does not depend on it")
      ->capture_default_str();
  m->add_flag("--full-grid", mc.full_grid, "Use every power of two from 256 to 2^20");
  m->add_option("-o,--output", mc.output, "CSV n,k,mean,stddev (default: stdout)");

  InjectArgs inj;
  auto* ij = app.add_subcommand("inject", "Worst-order injection on the descending ladder");
  ij->add_option("--n", inj.n_values, "Sizes")->capture_default_str();
  ij->add_option("--k", inj.k_values, "Ladder densities")->capture_default_str();
  inj.strategy.add_to(ij);
  ij->add_option("-o,--output", inj.output, "CSV path");

  ForwardErrorArgs fe;
  auto* f = app.add_subcommand("forward-error", "Float vs exact hull distance against the depth bound");
  f->add_option("-i,--input", fe.input, "Single point file instead of the generated corpus");
  f->add_option("--seed", fe.seed, "Corpus seed")->capture_default_str();
  f->add_option("--per-kind", fe.per_kind, "Instances per generator")->capture_default_str();
  f->add_option("--max-n", fe.max_n, "Largest instance size")->capture_default_str();
  fe.strategy.add_to(f);
  f->add_option("-o,--output", fe.output, "CSV path");

  ConditioningArgs cond;
  auto* c = app.add_subcommand("conditioning", "Hull displacement under input perturbation");
  c->add_option("--delta", cond.deltas, "Perturbation radii, relative to M")->capture_default_str();
  c->add_option("--instances", cond.instances, "Instances per generator")->capture_default_str();
  c->add_option("--n", cond.n, "Points per instance")->capture_default_str();
  c->add_option("--trials", cond.trials, "Perturbations per instance and delta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c->add_option("--seed", cond.seed, "Seed")->capture_default_str();
  c->add_option("-o,--output", cond.output, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*h) return cmd_hull(hull);
    if (*m) return cmd_mc(mc);
    if (*ij) return cmd_inject(inj);
    if (*f) return cmd_forward_error(fe);
    if (*c) return cmd_conditioning(cond);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
