#include "hotspot/hot_preprocess.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hotspot/sliding_extrema.hpp"

namespace hotspot {

namespace {

// Smallest p in [a_t, b_t] from which the moving coordinate stays inside
// [lo, hi] all the way to b_t. The value at b_t is assumed feasible.
double coordinate_back_limit(double a_t, double b_t, double a_x, double b_x, double lo, double hi) {
  double dx = b_x - a_x;
  if (dx == 0.0) return (a_x >= lo && a_x <= hi) ? a_t : b_t;
  double slope = dx / (b_t - a_t);
  // Moving backward from b_t, the coordinate leaves through one side only.
  double crossing = slope > 0.0 ? a_t + (lo - a_x) / slope : a_t + (hi - a_x) / slope;
  return std::clamp(crossing, a_t, b_t);
}

}  // namespace

BackExtension extend_back(const Vertex* u_prev, const Vertex& u, const BBox& box, double side) {
  if (u_prev == nullptr) {
    return BackExtension{u.tstamp, covering_square(box, side)};
  }
  // The extended bbox keeps extent at most `side` iff the moved point stays
  // within these bands. Solving against the exact side length (tests are
  // eps-inclusive) leaves every witness square a real containment margin.
  double lo_x = box.max_x - side, hi_x = box.min_x + side;
  double lo_y = box.max_y - side, hi_y = box.min_y + side;

  double p = u_prev->tstamp;
  p = std::max(p, coordinate_back_limit(u_prev->tstamp, u.tstamp, u_prev->loc.x, u.loc.x, lo_x, hi_x));
  p = std::max(p, coordinate_back_limit(u_prev->tstamp, u.tstamp, u_prev->loc.y, u.loc.y, lo_y, hi_y));
  p = std::min(p, u.tstamp);

  double f = (p - u_prev->tstamp) / (u.tstamp - u_prev->tstamp);
  BBox extended = box;
  extended.extend(lerp(u_prev->loc, u.loc, f));
  return BackExtension{p, covering_square(extended, side)};
}

namespace {

struct Lane {
  std::vector<double>&dur, &end, &anchor_x, &anchor_y;
};

// One sweep of the sliding-window construction over vertices with
// increasing time-stamps. Writes the backward entry of every vertex.
void run_backward_pass(std::span<const Vertex> v, double side, Lane lane, QueueCounters& cx,
                       QueueCounters& cy) {
  double thr = side + kEps;
  SlidingExtremaQueue qx, qy;
  std::size_t n = v.size();
  [[maybe_unused]] std::size_t prev_start = 0;

  for (std::size_t i = 0; i < n; ++i) {
    qx.push(i, v[i].loc.x);
    qy.push(i, v[i].loc.y);
    while (qx.max() - qx.min() > thr || qy.max() - qy.min() > thr) {
      qx.pop_oldest();
      qy.pop_oldest();
    }
    std::size_t u = static_cast<std::size_t>(qx.oldest().tag);
    assert(u >= prev_start);  // window start never moves back
    prev_start = u;

    BBox box{qx.min(), qx.max(), qy.min(), qy.max()};
    BackExtension ext = extend_back(u > 0 ? &v[u - 1] : nullptr, v[u], box, side);
    lane.dur[i] = v[i].tstamp - ext.time;
    lane.end[i] = ext.time;
    lane.anchor_x[i] = ext.square.anchor_x;
    lane.anchor_y[i] = ext.square.anchor_y;
  }
  cx = QueueCounters{qx.counters().pushes, qx.counters().pops};
  cy = QueueCounters{qy.counters().pushes, qy.counters().pops};
}

}  // namespace

HotArrays build_hot_arrays(const Trajectory& traj, double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("side length must be positive and finite");
  }
  std::size_t n = traj.size();
  HotArrays out;
  out.side_ = side;
  for (HotArrays::Lane* lane : {&out.backward_, &out.forward_}) {
    lane->dur.resize(n);
    lane->end.resize(n);
    lane->anchor_x.resize(n);
    lane->anchor_y.resize(n);
  }

  run_backward_pass(traj.vertices(), side,
                    Lane{out.backward_.dur, out.backward_.end, out.backward_.anchor_x,
                         out.backward_.anchor_y},
                    out.queue_counters_[0], out.queue_counters_[1]);

  // Forward entries are backward entries of the time-reversed trajectory
  // with negated time-stamps; locations are unchanged, so squares map over.
  std::vector<Vertex> reversed(n);
  for (std::size_t k = 0; k < n; ++k) {
    reversed[k] = Vertex{-traj.tstamp(n - 1 - k), traj.loc(n - 1 - k)};
  }
  std::vector<double> rdur(n), rend(n), rax(n), ray(n);
  run_backward_pass(reversed, side, Lane{rdur, rend, rax, ray}, out.queue_counters_[2],
                    out.queue_counters_[3]);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = n - 1 - i;
    out.forward_.dur[i] = rdur[k];
    out.forward_.end[i] = -rend[k];
    out.forward_.anchor_x[i] = rax[k];
    out.forward_.anchor_y[i] = ray[k];
  }

  out.backward_argmax_ = RangeArgmax(out.backward_.dur);
  out.forward_argmax_ = RangeArgmax(out.forward_.dur);
  return out;
}

HotRangeResult hot_range(const HotArrays& arrays, Direction dir, std::size_t i, std::size_t j) {
  std::size_t k = arrays.argmax(dir).query(i, j);  // validates the range
  return HotRangeResult{k, arrays.at(dir, k)};
}

}  // namespace hotspot
