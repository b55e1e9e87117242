#include "hotspot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hotspot {

namespace {

// Bisect for the boundary of the exact-extent predicate on an edge between
// times t_false (extent exceeded) and t_true (extent within the side
// length). Continuous extensions are solved against the exact side length;
// only containment tests are eps-inclusive.
double bisect_fit_boundary(const Vertex& a, const Vertex& b, const BBox& box, double side,
                           double t_false, double t_true) {
  for (int iter = 0; iter < 60; ++iter) {
    double mid = 0.5 * (t_false + t_true);
    if (mid == t_false || mid == t_true) break;
    double f = (mid - a.tstamp) / (b.tstamp - a.tstamp);
    BBox probe = box;
    probe.extend(lerp(a.loc, b.loc, f));
    if (probe.width() <= side && probe.height() <= side) {
      t_true = mid;
    } else {
      t_false = mid;
    }
  }
  return t_true;
}

}  // namespace

HotEntry oracle_backward_at_vertex(const Trajectory& traj, double side, std::size_t v) {
  if (v >= traj.size()) throw std::out_of_range("vertex index out of range");
  BBox box = BBox::of_point(traj.loc(v));
  std::size_t u = v;
  while (u > 0) {
    BBox probe = box;
    probe.extend(traj.loc(u - 1));
    if (!fits(probe, side)) break;
    box = probe;
    --u;
  }
  double p;
  if (u == 0) {
    p = traj.tstamp(0);
  } else {
    p = bisect_fit_boundary(traj[u - 1], traj[u], box, side, traj.tstamp(u - 1), traj.tstamp(u));
    box.extend(traj.locate(p));
  }
  return HotEntry{traj.tstamp(v) - p, p, covering_square(box, side)};
}

HotEntry oracle_forward_at_vertex(const Trajectory& traj, double side, std::size_t v) {
  if (v >= traj.size()) throw std::out_of_range("vertex index out of range");
  BBox box = BBox::of_point(traj.loc(v));
  std::size_t u = v;
  std::size_t last = traj.size() - 1;
  while (u < last) {
    BBox probe = box;
    probe.extend(traj.loc(u + 1));
    if (!fits(probe, side)) break;
    box = probe;
    ++u;
  }
  double p;
  if (u == last) {
    p = traj.tstamp(last);
  } else {
    p = bisect_fit_boundary(traj[u + 1], traj[u], box, side, traj.tstamp(u + 1), traj.tstamp(u));
    box.extend(traj.locate(p));
  }
  return HotEntry{p - traj.tstamp(v), p, covering_square(box, side)};
}

Witness oracle_vertex_anchored_opt(const Trajectory& traj, double side, const Window& w) {
  Window win{traj.clamp_time(w.start), traj.clamp_time(w.end)};
  Point start_loc = traj.locate(win.start);
  Witness best{Square{start_loc.x, start_loc.y, side}, Window{win.start, win.start}, 0.0};
  auto consider = [&](const Witness& cand) {
    if (cand.score > best.score) best = cand;
  };

  std::size_t first = traj.first_vertex_at_or_after(win.start);
  std::size_t last = traj.last_vertex_at_or_before(win.end);
  if (last < traj.size()) {
    for (std::size_t idx = first; idx <= last && idx < traj.size(); ++idx) {
      HotEntry b = oracle_backward_at_vertex(traj, side, idx);
      double bs = std::max(b.end, win.start);
      consider(Witness{b.square, Window{bs, traj.tstamp(idx)}, traj.tstamp(idx) - bs});
      HotEntry f = oracle_forward_at_vertex(traj, side, idx);
      double fe = std::min(f.end, win.end);
      consider(Witness{f.square, Window{traj.tstamp(idx), fe}, fe - traj.tstamp(idx)});
    }
  }

  if (traj.size() >= 2 && win.start < win.end) {
    for (std::size_t e = traj.edge_containing(win.start); e + 1 < traj.size(); ++e) {
      if (traj.tstamp(e) > win.end) break;
      double a = std::max(traj.tstamp(e), win.start);
      double b = std::min(traj.tstamp(e + 1), win.end);
      if (a >= b) continue;
      consider(edge_hotspot(traj, Window{a, b}, side));
    }
  }
  return best;
}

namespace {

// Per-window range min/max tables over vertex coordinates, so the bbox of
// any vertex range is O(1) during the sampled sweep.
class RangeBounds {
 public:
  explicit RangeBounds(std::span<const Vertex> v) {
    std::size_t n = v.size();
    levels_ = 1;
    while ((std::size_t{1} << levels_) <= n) ++levels_;
    min_x_.assign(levels_, {});
    max_x_.assign(levels_, {});
    min_y_.assign(levels_, {});
    max_y_.assign(levels_, {});
    min_x_[0].resize(n);
    max_x_[0].resize(n);
    min_y_[0].resize(n);
    max_y_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      min_x_[0][i] = max_x_[0][i] = v[i].loc.x;
      min_y_[0][i] = max_y_[0][i] = v[i].loc.y;
    }
    for (std::size_t k = 1; k < levels_; ++k) {
      std::size_t len = n - (std::size_t{1} << k) + 1;
      std::size_t half = std::size_t{1} << (k - 1);
      min_x_[k].resize(len);
      max_x_[k].resize(len);
      min_y_[k].resize(len);
      max_y_[k].resize(len);
      for (std::size_t i = 0; i < len; ++i) {
        min_x_[k][i] = std::min(min_x_[k - 1][i], min_x_[k - 1][i + half]);
        max_x_[k][i] = std::max(max_x_[k - 1][i], max_x_[k - 1][i + half]);
        min_y_[k][i] = std::min(min_y_[k - 1][i], min_y_[k - 1][i + half]);
        max_y_[k][i] = std::max(max_y_[k - 1][i], max_y_[k - 1][i + half]);
      }
    }
  }

  // bbox of vertices [i, j]; requires i <= j
  BBox box(std::size_t i, std::size_t j) const {
    std::size_t k = std::bit_width(j - i + 1) - 1;
    std::size_t jj = j - (std::size_t{1} << k) + 1;
    return BBox{std::min(min_x_[k][i], min_x_[k][jj]), std::max(max_x_[k][i], max_x_[k][jj]),
                std::min(min_y_[k][i], min_y_[k][jj]), std::max(max_y_[k][i], max_y_[k][jj])};
  }

 private:
  std::size_t levels_ = 0;
  std::vector<std::vector<double>> min_x_, max_x_, min_y_, max_y_;
};

// Largest e in [a_t, b_t] such that the coordinate moving from a_x to b_x
// stays within [lo, hi] over [a_t, e]. The value at a_t is assumed
// feasible.
double coordinate_forward_limit(double a_t, double b_t, double a_x, double b_x, double lo,
                                double hi) {
  double dx = b_x - a_x;
  if (dx == 0.0) return (a_x >= lo && a_x <= hi) ? b_t : a_t;
  double slope = dx / (b_t - a_t);
  double crossing = slope > 0.0 ? a_t + (hi - a_x) / slope : a_t + (lo - a_x) / slope;
  return std::clamp(crossing, a_t, b_t);
}

// Maximal end of a square-fitting window starting at the moving point's
// current bbox, extended along the edge a -> b, capped at `cap`.
double forward_edge_extension(const Vertex& a, const Vertex& b, const BBox& box, double side,
                              double cap) {
  double lo_x = box.max_x - side, hi_x = box.min_x + side;
  double lo_y = box.max_y - side, hi_y = box.min_y + side;
  double e = std::min(b.tstamp, cap);
  e = std::min(e, coordinate_forward_limit(a.tstamp, b.tstamp, a.loc.x, b.loc.x, lo_x, hi_x));
  e = std::min(e, coordinate_forward_limit(a.tstamp, b.tstamp, a.loc.y, b.loc.y, lo_y, hi_y));
  return std::max(e, a.tstamp);
}

}  // namespace

double oracle_sampled_opt(const Trajectory& traj, double side, const Window& w,
                          std::size_t samples) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  Window win{traj.clamp_time(w.start), traj.clamp_time(w.end)};
  if (win.start >= win.end || traj.size() == 1) return 0.0;

  auto verts = traj.vertices();
  std::size_t n = verts.size();
  RangeBounds bounds(verts);

  double best = 0.0;
  // Monotone hint: the farthest vertex reached by any earlier start's
  // extension; the window [start, tstamp(reach)] is known to fit.
  std::size_t reach = 0;
  bool reach_valid = false;

  auto extend_from = [&](double t0, std::size_t edge) {
    // t0 lies on edge (edge, edge+1)
    Point p0 = lerp(verts[edge].loc, verts[edge + 1].loc,
                    (t0 - verts[edge].tstamp) / (verts[edge + 1].tstamp - verts[edge].tstamp));
    std::size_t vr = t0 == verts[edge].tstamp ? edge : edge + 1;  // first vertex at or after t0

    std::size_t last = reach_valid ? std::max(reach, vr == 0 ? 0 : vr - 1) : (vr == 0 ? 0 : vr - 1);
    auto current_box = [&]() {
      BBox box = BBox::of_point(p0);
      if (vr <= last && last < n) box.extend(bounds.box(vr, last));
      return box;
    };
    BBox box = current_box();
    while (last + 1 < n && verts[last + 1].tstamp <= win.end) {
      BBox probe = box;
      probe.extend(verts[last + 1].loc);
      if (!fits(probe, side)) break;
      box = probe;
      ++last;
    }
    double end;
    if (last + 1 >= n) {
      end = win.end;
    } else {
      end = forward_edge_extension(verts[last], verts[last + 1], box, side, win.end);
    }
    end = std::max(end, std::max(t0, verts[last].tstamp));
    reach = last;
    reach_valid = true;
    best = std::max(best, end - t0);
  };

  // Starts are visited in ascending time order; the monotone hint depends
  // on it.
  for (std::size_t e = traj.edge_containing(win.start); e + 1 < n; ++e) {
    double t0 = verts[e].tstamp, t1 = verts[e + 1].tstamp;
    if (t0 >= win.end) break;
    if (t0 >= win.start) {
      extend_from(t0, e);
    } else if (win.start < t1) {
      extend_from(win.start, e);
    }
    double span = t1 - t0;
    for (std::size_t q = 1; q < samples; ++q) {
      double t = t0 + span * (static_cast<double>(q) / static_cast<double>(samples));
      if (t <= win.start || t >= win.end) continue;
      extend_from(t, e);
    }
  }
  return best;
}

bool verify_witness(const Trajectory& traj, const Window& w, const Witness& wit) {
  const Window& iv = wit.interval;
  if (!(iv.start >= w.start - kEps && iv.end <= w.end + kEps)) return false;
  if (!(iv.start <= iv.end + kEps)) return false;
  if (std::abs(wit.score - iv.duration()) > kEps) return false;
  if (wit.score < -kEps) return false;
  double inside = weight_of_square(traj, iv, wit.square);
  return inside >= iv.duration() - kEps;
}

}  // namespace hotspot
