// Hull of a few points in both predicate modes.

#include "fpqh/fpqh.hpp"

#include <iostream>
#include <vector>

int main() {
  using namespace fpqh;
  const std::vector<Point> P{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {2, 0}, {1, 3}};

  const Hull h = quickhull(P, PredicateMode::Float);
  std::cout << "float hull (clockwise), depth " << h.depth << ":\n";
  write_points(std::cout, h.vertices);

  const Hull e = quickhull(P, PredicateMode::Exact, ReductionStrategy::pairwise());
  std::cout << "exact hull matches: " << (e.vertices == h.vertices ? "yes" : "no") << "\n";
  std::cout << "convex and clockwise: " << (is_convex_clockwise(e) ? "yes" : "no") << "\n";
}
