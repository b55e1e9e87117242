#pragma once

#include <random>
#include <vector>

#include "hotspot/io.hpp"
#include "hotspot/trajectory.hpp"

namespace hotspot::test {

// Canonical fixture: a unit-speed leg, a double-speed leg, then a vertical
// climb. With side 2 its hot windows are known in closed form.
inline Trajectory t4() {
  return Trajectory({{0.0, {0.0, 0.0}}, {1.0, {1.0, 0.0}}, {2.0, {3.0, 0.0}}, {3.0, {3.0, 2.0}}});
}

inline Trajectory random_trajectory(std::mt19937_64& rng, std::size_t max_n = 64) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
  std::uniform_real_distribution<double> dwell(0.0, 1.0);
  GenParams params;
  params.dwell_fraction = dwell(rng);
  return generate(n_dist(rng), rng(), params);
}

}  // namespace hotspot::test
