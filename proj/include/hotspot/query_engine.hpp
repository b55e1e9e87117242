#pragma once

#include <cstddef>

#include "hotspot/hot_preprocess.hpp"
#include "hotspot/trajectory.hpp"

namespace hotspot {

// Per-query instrumentation. `depth` counts recursion levels (1 = answered
// at the top); `top_split` records the split classification of the
// outermost recursive level, when one happened.
struct QueryStats {
  enum class Split {
    none,            // answered without a split (point or single edge)
    covered_both,    // both halves contained in the opposite hot squares
    interior_both,   // both hot windows lie inside the query window
    covered_left,    // left half contained only; recursed right
    covered_right,   // right half contained only; recursed left
  };

  int depth = 0;
  Split top_split = Split::none;
};

/*
 * Immutable query-time bundle: trajectory, side length, hot arrays and
 * range-argmax structures. Queries are pure readers and safe to run
 * concurrently from many threads.
 */
class HotspotIndex {
 public:
  HotspotIndex(Trajectory traj, double side);

  const Trajectory& trajectory() const { return traj_; }
  double side() const { return side_; }
  const HotArrays& arrays() const { return arrays_; }

  // Certified witness for the vertex-aligned window [tstamp(i), tstamp(j)]
  // with score at least half the window's true hotspot weight.
  Witness query_vertex_aligned(std::size_t i, std::size_t j, QueryStats* stats = nullptr) const;

  // Certified witness for the window [x, y] (clamped to the trajectory
  // span) with score at least half the window's true hotspot weight.
  // Throws std::invalid_argument if x > y.
  Witness query(double x, double y, QueryStats* stats = nullptr) const;

  Witness whole_trajectory_hotspot(QueryStats* stats = nullptr) const;

  HotspotIndex(HotspotIndex&&) = default;
  HotspotIndex& operator=(HotspotIndex&&) = default;
  HotspotIndex(const HotspotIndex&) = delete;
  HotspotIndex& operator=(const HotspotIndex&) = delete;

 private:
  Witness aligned_recurse(std::size_t i, std::size_t j, int level, QueryStats* stats) const;
  Witness best_clipped(Direction dir, std::size_t lo, std::size_t hi, double clip_start,
                       double clip_end) const;
  Witness point_witness(double t) const;

  Trajectory traj_;
  double side_;
  HotArrays arrays_;
};

inline HotspotIndex build_index(Trajectory traj, double side) {
  return HotspotIndex(std::move(traj), side);
}

}  // namespace hotspot
