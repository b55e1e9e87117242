#include "hotspot/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hotspot {

Trajectory::Trajectory(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw std::invalid_argument("trajectory must have at least one vertex");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (!std::isfinite(v.tstamp) || !std::isfinite(v.loc.x) || !std::isfinite(v.loc.y)) {
      throw std::invalid_argument("non-finite trajectory vertex at index " + std::to_string(i));
    }
    if (i > 0 && !(vertices_[i - 1].tstamp < v.tstamp)) {
      throw std::invalid_argument("time-stamps must be strictly increasing at index " +
                                  std::to_string(i));
    }
  }
}

double Trajectory::clamp_time(double t) const {
  return std::clamp(t, time_begin(), time_end());
}

std::size_t Trajectory::first_vertex_at_or_after(double t) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                             [](const Vertex& v, double x) { return v.tstamp < x; });
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Trajectory::last_vertex_at_or_before(double t) const {
  auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                             [](double x, const Vertex& v) { return x < v.tstamp; });
  if (it == vertices_.begin()) return size();
  return static_cast<std::size_t>(it - vertices_.begin()) - 1;
}

std::size_t Trajectory::edge_containing(double t) const {
  std::size_t u = last_vertex_at_or_before(t);
  if (u >= size()) u = 0;
  if (u + 1 >= size()) u = size() - 2;
  return u;
}

Point Trajectory::locate(double t) const {
  if (t < time_begin() || t > time_end()) {
    throw std::out_of_range("time outside trajectory span");
  }
  std::size_t u = last_vertex_at_or_before(t);
  if (t == vertices_[u].tstamp) return vertices_[u].loc;
  const Vertex& a = vertices_[u];
  const Vertex& b = vertices_[u + 1];
  double f = (t - a.tstamp) / (b.tstamp - a.tstamp);
  return lerp(a.loc, b.loc, f);
}

BBox subtrajectory_bbox(const Trajectory& traj, const Window& w) {
  if (w.start > w.end) throw std::invalid_argument("window start after end");
  BBox box = BBox::of_point(traj.locate(w.start));
  box.extend(traj.locate(w.end));
  std::size_t first = traj.first_vertex_at_or_after(w.start);
  std::size_t last = traj.last_vertex_at_or_before(w.end);
  if (last >= traj.size()) return box;
  for (std::size_t i = first; i <= last && i < traj.size(); ++i) {
    box.extend(traj.loc(i));
  }
  return box;
}

Witness edge_hotspot(const Trajectory& traj, const Window& w, double side) {
  if (w.start > w.end) throw std::invalid_argument("window start after end");
  Point a = traj.locate(w.start);
  Point b = traj.locate(w.end);
  std::size_t k = traj.first_vertex_at_or_after(w.start);
  if (k < traj.size() && traj.tstamp(k) == w.start) ++k;  // first vertex strictly after start
  if (k < traj.size() && traj.tstamp(k) < w.end) {
    throw std::invalid_argument("edge_hotspot window spans a vertex");
  }

  double dur = w.end - w.start;
  double dx = std::abs(b.x - a.x);
  double dy = std::abs(b.y - a.y);
  // Constant speed on an edge: the best sub-segment is a prefix scaled so
  // each displacement component stays within the side length.
  double scale = 1.0;
  if (dx > side) scale = std::min(scale, side / dx);
  if (dy > side) scale = std::min(scale, side / dy);
  double score = dur * scale;

  BBox box = BBox::of_point(a);
  box.extend(lerp(a, b, scale));
  return Witness{covering_square(box, side), Window{w.start, w.start + score}, score};
}

namespace {

// Time sub-interval of [lo_t, hi_t] where a coordinate moving linearly from
// x0 (at t0) to x1 (at t1) stays within [lo, hi]. Returns false if empty.
bool coordinate_inside_interval(double t0, double t1, double x0, double x1, double lo, double hi,
                                double& lo_t, double& hi_t) {
  double dx = x1 - x0;
  if (dx == 0.0) {
    return x0 >= lo && x0 <= hi;  // constant: inside everywhere or nowhere
  }
  double slope = dx / (t1 - t0);
  double ta = t0 + (lo - x0) / slope;
  double tb = t0 + (hi - x0) / slope;
  if (ta > tb) std::swap(ta, tb);
  lo_t = std::max(lo_t, ta);
  hi_t = std::min(hi_t, tb);
  return lo_t <= hi_t;
}

}  // namespace

double weight_of_square(const Trajectory& traj, const Window& w, const Square& r) {
  double lox = r.anchor_x - kEps, hix = r.anchor_x + r.side + kEps;
  double loy = r.anchor_y - kEps, hiy = r.anchor_y + r.side + kEps;
  Window win{traj.clamp_time(w.start), traj.clamp_time(w.end)};
  if (win.start > win.end) return 0.0;

  if (traj.size() == 1) return 0.0;

  double best = 0.0;
  bool in_run = false;
  double run_start = 0.0, run_end = 0.0;
  auto flush = [&] {
    if (in_run) best = std::max(best, run_end - run_start);
    in_run = false;
  };

  for (std::size_t e = traj.edge_containing(win.start); e + 1 < traj.size(); ++e) {
    double t0 = traj.tstamp(e), t1 = traj.tstamp(e + 1);
    if (t0 > win.end) break;
    double a = std::max(t0, win.start);
    double b = std::min(t1, win.end);
    if (a > b) continue;

    double lo_t = a, hi_t = b;
    const Point& p0 = traj.loc(e);
    const Point& p1 = traj.loc(e + 1);
    bool inside = coordinate_inside_interval(t0, t1, p0.x, p1.x, lox, hix, lo_t, hi_t) &&
                  coordinate_inside_interval(t0, t1, p0.y, p1.y, loy, hiy, lo_t, hi_t);
    if (!inside) {
      flush();
      continue;
    }
    // Gaps of at most kEps merge; an exit this brief is within the
    // containment tolerance.
    if (in_run && lo_t <= run_end + kEps) {
      run_end = std::max(run_end, hi_t);
    } else {
      flush();
      in_run = true;
      run_start = lo_t;
      run_end = hi_t;
    }
  }
  flush();
  return best;
}

}  // namespace hotspot
