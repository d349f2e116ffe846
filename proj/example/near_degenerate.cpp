// Float Quickhull on points a few ulps off a line: count predicate
// disagreements and compare the hull with the exact one.

#include "fpqh/fpqh.hpp"

#include <iostream>

int main() {
  using namespace fpqh;
  for (const auto& s : {ReductionStrategy::sequential(), ReductionStrategy::blocked(),
                        ReductionStrategy::pairwise()}) {
    const auto P = generate({GeneratorSpec::Kind::NearCollinear, 2000, 17});
    const auto r = forward_error_experiment(P, s);
    std::cout << to_string(s.kind) << ": " << r.audit.rt_disagreements << " rt and "
              << r.audit.frt_disagreements << " frt disagreements, d_M = " << r.report.d_M
              << ", bound = " << r.report.bound << " (depth " << r.report.depth << ")\n";
  }

  // The adversarial ladder: every adjacent pair is closer than gamma6 M.
  const auto inst = ladder(64, 2);
  Comparator cmp(AdversarialWithinTolerance{kDouble.gamma6}, Scale{1.0});
  const Point r = reduce_sequential(inst.points, inst.segment, cmp);
  std::cout << "ladder, worst-order comparator: error = "
            << reduction_error(inst.points, inst.segment, r, Scale{1.0}) / kDouble.gamma6
            << " gamma6\n";
}
