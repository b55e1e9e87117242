#pragma once

#include <cstddef>

#include "hotspot/hot_preprocess.hpp"
#include "hotspot/trajectory.hpp"

namespace hotspot {

// Brute-force reference implementations, independent of the sliding-window
// and range-argmax machinery. Used to derive expected values and to
// validate the approximation guarantee; every value is a certified lower
// bound on the true hotspot weight.

// Longest square-fitting window ending at vertex v: vertex-by-vertex
// backward scan, then bisection of the continuous extension on the first
// violating edge. O(n) per vertex.
HotEntry oracle_backward_at_vertex(const Trajectory& traj, double side, std::size_t v);

// Symmetric forward scan from vertex v.
HotEntry oracle_forward_at_vertex(const Trajectory& traj, double side, std::size_t v);

// Best witness over: backward/forward extensions of every vertex inside w
// clipped to w, plus the single-edge closed form on every maximal
// single-edge portion of w. Equals the true optimum whenever some optimal
// window has an endpoint at a vertex or lies within one edge.
Witness oracle_vertex_anchored_opt(const Trajectory& traj, double side, const Window& w);

// Maximum duration of a forward extension clipped to w over a dense set of
// start times: every vertex time inside w plus `samples` evenly spaced
// starts per edge. Non-decreasing when the sample grid is refined by an
// integer factor; never exceeds the true optimum.
double oracle_sampled_opt(const Trajectory& traj, double side, const Window& w,
                          std::size_t samples);

// True iff the witness interval lies inside w, its sub-trajectory stays in
// the witness square (checked by the clipping sweep) and the score matches
// the interval duration, all within kEps.
bool verify_witness(const Trajectory& traj, const Window& w, const Witness& wit);

}  // namespace hotspot
