#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hotspot/geometry.hpp"

namespace hotspot {

struct Vertex {
  double tstamp = 0.0;
  Point loc;
};

/*
 * Piecewise-linear 2D trajectory over strictly increasing time-stamps.
 * Position between vertices is linearly interpolated. Immutable after
 * construction; safe to share across threads.
 */
class Trajectory {
 public:
  // Validates: at least one vertex, finite values, strictly increasing
  // time-stamps. Throws std::invalid_argument otherwise.
  explicit Trajectory(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
  double tstamp(std::size_t i) const { return vertices_[i].tstamp; }
  const Point& loc(std::size_t i) const { return vertices_[i].loc; }

  double time_begin() const { return vertices_.front().tstamp; }
  double time_end() const { return vertices_.back().tstamp; }
  double total_duration() const { return time_end() - time_begin(); }
  double clamp_time(double t) const;

  // Location at time t. Throws std::out_of_range outside the time span.
  Point locate(double t) const;

  // Index of the first vertex with tstamp >= t (== size() if none), and of
  // the last vertex with tstamp <= t (== size() if none).
  std::size_t first_vertex_at_or_after(double t) const;
  std::size_t last_vertex_at_or_before(double t) const;

  // Index i of the edge v_i -> v_{i+1} whose closed time range contains t,
  // clamped to the last edge when t == time_end(). Requires size() >= 2.
  std::size_t edge_containing(double t) const;

 private:
  std::vector<Vertex> vertices_;
};

// Tight bounding box of the sub-trajectory over w: the box of the vertices
// inside w extended by the interpolated window endpoints.
BBox subtrajectory_bbox(const Trajectory& traj, const Window& w);

// Maximum-score witness for a window lying within a single edge (no vertex
// strictly inside it). Throws std::invalid_argument if the window spans a
// vertex.
Witness edge_hotspot(const Trajectory& traj, const Window& w, double side);

// Weight of square r over window w: the maximum length of one maximal time
// interval inside w whose image lies in the closed square. Linear sweep
// with exact parametric clipping of each edge against the square.
double weight_of_square(const Trajectory& traj, const Window& w, const Square& r);

}  // namespace hotspot
