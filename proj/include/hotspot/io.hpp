#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hotspot/trajectory.hpp"

namespace hotspot {

// CSV rows of `t,x,y` with strictly increasing t; an optional `t,x,y`
// header line is tolerated. Throws std::runtime_error with the offending
// line number on malformed rows, non-finite values, non-increasing
// time-stamps or an empty file.
Trajectory parse_trajectory(std::string_view text);
Trajectory load_trajectory(const std::string& path);

// Writes a `t,x,y` header plus one row per vertex, 17 significant digits
// per value, LF line endings. parse_trajectory(serialize_trajectory(T))
// reproduces T bit for bit.
void serialize_trajectory(const Trajectory& traj, std::ostream& out);
std::string serialize_trajectory(const Trajectory& traj);

struct GenParams {
  double box_size = 100.0;        // walk confined to [0, box_size]^2
  double dwell_fraction = 0.3;    // probability of starting a dwell segment
  double dwell_radius = 0.25;     // jitter radius while dwelling
  double mean_dwell_steps = 12.0; // expected vertices per dwell segment
  double max_speed = 8.0;         // travel speed bound per unit time
};

// Seeded random-waypoint walk with occasional dwell segments (short steps
// near one location) and unit-mean time steps. Deterministic per seed.
Trajectory generate(std::size_t n, std::uint64_t seed, const GenParams& params = {});

// Query batch: one `x y` pair per line, whitespace-separated. Throws
// std::runtime_error with line numbers on malformed rows.
std::vector<Window> parse_query_batch(std::string_view text);

}  // namespace hotspot
