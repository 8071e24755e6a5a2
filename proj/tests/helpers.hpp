#pragma once

#include <random>

#include "valcone/config.hpp"

namespace valcone::testing {

// Cusp configuration: [Origin, Free, Satellite(1)].
inline Configuration cusp(int s = 2) {
  Configuration c;
  c.points = {Point::origin(), Point::free_point(), Point::satellite(1)};
  c.s = s;
  return c;
}

// Free chain of length 4 with two points on L; the resolution of the
// pencil of a parabola through p.
inline Configuration parabola() {
  Configuration c;
  c.points = {Point::origin(), Point::free_point(), Point::free_point(), Point::free_point()};
  c.s = 2;
  return c;
}

inline Configuration free_chain(int m, int s) {
  Configuration c;
  c.points.push_back(Point::origin());
  for (int i = 2; i <= m; ++i) c.points.push_back(Point::free_point());
  c.s = s;
  return c;
}

// Seeded random valid configuration with m <= max_m and s within the
// initial free chain.
inline Configuration random_config(std::mt19937_64& rng, int max_m) {
  std::uniform_int_distribution<int> mdist(1, max_m);
  const int m = mdist(rng);
  Configuration c;
  c.points.push_back(Point::origin());
  for (int i = 2; i <= m; ++i) {
    std::vector<Point> choices{Point::free_point()};
    if (i >= 3) {
      choices.push_back(Point::satellite(i - 2));
      if (c.points[i - 2].is_satellite() && c.points[i - 2].target != i - 2)
        choices.push_back(Point::satellite(c.points[i - 2].target));
    }
    c.points.push_back(choices[rng() % choices.size()]);
  }
  int chain = 1;
  while (chain < m && !c.points[chain].is_satellite()) ++chain;
  c.s = 1 + static_cast<int>(rng() % chain);
  return c;
}

}  // namespace valcone::testing
