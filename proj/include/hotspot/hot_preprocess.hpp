#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hotspot/geometry.hpp"
#include "hotspot/range_argmax.hpp"
#include "hotspot/trajectory.hpp"

namespace hotspot {

// Longest square-fitting window anchored at one vertex: its duration, the
// far end of the window (a time, possibly mid-edge) and a containing
// square. Backward entries describe windows ending at the vertex, forward
// entries windows starting there.
struct HotEntry {
  double dur = 0.0;
  double end = 0.0;
  Square square;
};

enum class Direction { backward, forward };

struct QueueCounters {
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
};

/*
 * Per-vertex hot windows for both directions plus range-argmax structures
 * over the durations. Immutable once built; movable but not copyable (the
 * argmax structures reference the duration arrays in place).
 */
class HotArrays {
 public:
  std::size_t size() const { return backward_.dur.size(); }
  double side() const { return side_; }

  HotEntry at(Direction dir, std::size_t i) const {
    const Lane& lane = dir == Direction::backward ? backward_ : forward_;
    return HotEntry{lane.dur[i], lane.end[i], Square{lane.anchor_x[i], lane.anchor_y[i], side_}};
  }
  double dur(Direction dir, std::size_t i) const {
    return (dir == Direction::backward ? backward_ : forward_).dur[i];
  }
  double end(Direction dir, std::size_t i) const {
    return (dir == Direction::backward ? backward_ : forward_).end[i];
  }
  std::span<const double> durs(Direction dir) const {
    return (dir == Direction::backward ? backward_ : forward_).dur;
  }
  // Window far-end times. Non-decreasing in the vertex index: any fitting
  // window's sub-window fits, so a later vertex can never reach further
  // back (nor an earlier one further forward).
  std::span<const double> ends(Direction dir) const {
    return (dir == Direction::backward ? backward_ : forward_).end;
  }
  const RangeArgmax& argmax(Direction dir) const {
    return dir == Direction::backward ? backward_argmax_ : forward_argmax_;
  }

  // Sliding-queue work done during construction, one entry per coordinate
  // queue: backward x/y then forward x/y.
  const std::array<QueueCounters, 4>& queue_counters() const { return queue_counters_; }

  HotArrays(HotArrays&&) = default;
  HotArrays& operator=(HotArrays&&) = default;
  HotArrays(const HotArrays&) = delete;
  HotArrays& operator=(const HotArrays&) = delete;

 private:
  friend HotArrays build_hot_arrays(const Trajectory& traj, double side);
  HotArrays() = default;

  struct Lane {
    std::vector<double> dur, end, anchor_x, anchor_y;
  };

  double side_ = 0.0;
  Lane backward_;
  Lane forward_;
  RangeArgmax backward_argmax_;
  RangeArgmax forward_argmax_;
  std::array<QueueCounters, 4> queue_counters_{};
};

struct BackExtension {
  double time = 0.0;
  Square square;
};

// Earliest point p on the edge u_prev -> u such that the window's bounding
// box extended by the location at p still fits in a side x side square.
// `box` is the bbox of the fitting window starting at u; it must fit.
// u_prev == nullptr (trajectory start) yields p = tstamp(u).
BackExtension extend_back(const Vertex* u_prev, const Vertex& u, const BBox& box, double side);

// Builds both hot lanes in O(n) sliding-window work (forward via the
// time-reversed trajectory with negated time-stamps) plus the argmax
// structures. Throws std::invalid_argument if side <= 0 or not finite.
HotArrays build_hot_arrays(const Trajectory& traj, double side);

struct HotRangeResult {
  std::size_t index = 0;
  HotEntry entry;
};

// Entry with the maximum duration over vertices [i, j] in the given
// direction; ties break toward the smaller index.
HotRangeResult hot_range(const HotArrays& arrays, Direction dir, std::size_t i, std::size_t j);

}  // namespace hotspot
