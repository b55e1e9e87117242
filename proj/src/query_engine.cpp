#include "hotspot/query_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace hotspot {

namespace {

const Witness& better(const Witness& a, const Witness& b) {
  return b.score > a.score ? b : a;
}

}  // namespace

HotspotIndex::HotspotIndex(Trajectory traj, double side)
    : traj_(std::move(traj)), side_(side), arrays_(build_hot_arrays(traj_, side)) {}

Witness HotspotIndex::point_witness(double t) const {
  Point p = traj_.locate(t);
  return Witness{Square{p.x, p.y, side_}, Window{t, t}, 0.0};
}

Witness HotspotIndex::aligned_recurse(std::size_t i, std::size_t j, int level,
                                      QueryStats* stats) const {
  if (stats != nullptr) stats->depth = std::max(stats->depth, level);
  if (j == i) return point_witness(traj_.tstamp(i));
  if (j == i + 1) {
    return edge_hotspot(traj_, Window{traj_.tstamp(i), traj_.tstamp(j)}, side_);
  }

  double t_i = traj_.tstamp(i), t_j = traj_.tstamp(j);
  std::size_t w = (i + j) / 2;

  // Best backward window ending in the right half, best forward window
  // starting in the left half; each clipped to the query window is a valid
  // witness.
  HotRangeResult back = hot_range(arrays_, Direction::backward, w, j);
  HotRangeResult fwd = hot_range(arrays_, Direction::forward, i, w);

  double back_start = std::max(back.entry.end, t_i);
  Witness cand_back{back.entry.square, Window{back_start, traj_.tstamp(back.index)},
                    traj_.tstamp(back.index) - back_start};
  double fwd_end = std::min(fwd.entry.end, t_j);
  Witness cand_fwd{fwd.entry.square, Window{traj_.tstamp(fwd.index), fwd_end},
                   fwd_end - traj_.tstamp(fwd.index)};
  Witness best = better(cand_back, cand_fwd);

  bool left_covered = back.entry.end <= t_i;   // backward square contains the left half
  bool right_covered = fwd.entry.end >= t_j;   // forward square contains the right half

  if (stats != nullptr && stats->top_split == QueryStats::Split::none) {
    stats->top_split = left_covered
                           ? (right_covered ? QueryStats::Split::covered_both
                                            : QueryStats::Split::covered_left)
                           : (right_covered ? QueryStats::Split::covered_right
                                            : QueryStats::Split::interior_both);
  }

  // When both halves are covered the clipped candidates reach half the
  // window; when both hot windows are interior they are exact. With
  // exactly one half covered, hotspots confined to the other half are the
  // only ones the candidates can miss.
  if (left_covered && !right_covered) {
    best = better(best, aligned_recurse(w, j, level + 1, stats));
  } else if (!left_covered && right_covered) {
    best = better(best, aligned_recurse(i, w, level + 1, stats));
  }
  return best;
}

// Best clipped hot window over vertices [lo, hi], exactly. The end arrays
// are monotone, so the vertices whose hot window crosses the clip boundary
// form a prefix (backward) or suffix (forward): the crossing side is
// dominated by its extreme vertex and the interior side by the duration
// argmax.
Witness HotspotIndex::best_clipped(Direction dir, std::size_t lo, std::size_t hi,
                                   double clip_start, double clip_end) const {
  std::span<const double> ends = arrays_.ends(dir);
  Witness best{Square{}, Window{clip_start, clip_start}, -1.0};
  if (dir == Direction::backward) {
    auto split = std::lower_bound(ends.begin() + lo, ends.begin() + hi + 1, clip_start);
    std::size_t first_interior = static_cast<std::size_t>(split - ends.begin());
    if (first_interior > lo) {
      std::size_t a = first_interior - 1;  // longest crossing window
      best = Witness{arrays_.at(dir, a).square, Window{clip_start, traj_.tstamp(a)},
                     traj_.tstamp(a) - clip_start};
    }
    if (first_interior <= hi) {
      HotRangeResult r = hot_range(arrays_, dir, first_interior, hi);
      best = better(best, Witness{r.entry.square, Window{r.entry.end, traj_.tstamp(r.index)},
                                  r.entry.dur});
    }
  } else {
    auto split = std::upper_bound(ends.begin() + lo, ends.begin() + hi + 1, clip_end);
    std::size_t first_crossing = static_cast<std::size_t>(split - ends.begin());
    if (first_crossing <= hi) {
      std::size_t b = first_crossing;  // longest crossing window
      best = Witness{arrays_.at(dir, b).square, Window{traj_.tstamp(b), clip_end},
                     clip_end - traj_.tstamp(b)};
    }
    if (first_crossing > lo) {
      HotRangeResult r = hot_range(arrays_, dir, lo, first_crossing - 1);
      best = better(best, Witness{r.entry.square, Window{traj_.tstamp(r.index), r.entry.end},
                                  r.entry.dur});
    }
  }
  return best;
}

Witness HotspotIndex::query_vertex_aligned(std::size_t i, std::size_t j,
                                           QueryStats* stats) const {
  if (i > j || j >= traj_.size()) throw std::out_of_range("invalid vertex range");
  Witness best = aligned_recurse(i, j, 1, stats);
  double t_i = traj_.tstamp(i), t_j = traj_.tstamp(j);
  best = better(best, best_clipped(Direction::backward, i, j, t_i, t_j));
  best = better(best, best_clipped(Direction::forward, i, j, t_i, t_j));
  return best;
}

Witness HotspotIndex::query(double x, double y, QueryStats* stats) const {
  if (x > y) throw std::invalid_argument("query window start after end");
  double cx = traj_.clamp_time(x);
  double cy = traj_.clamp_time(y);
  if (cx == cy) return point_witness(cx);

  std::size_t u = traj_.first_vertex_at_or_after(cx);
  std::size_t v = traj_.last_vertex_at_or_before(cy);
  if (u >= traj_.size() || v >= traj_.size() || u > v) {
    // No vertex inside the window: it lies within a single edge.
    return edge_hotspot(traj_, Window{cx, cy}, side_);
  }

  Witness best = query_vertex_aligned(u, v, stats);

  // Hotspots overhanging a window boundary slide onto the nearest inside
  // vertex, so its clipped hot windows cover them.
  for (std::size_t idx : {u, v}) {
    HotEntry b = arrays_.at(Direction::backward, idx);
    double bs = std::max(b.end, cx);
    best = better(best, Witness{b.square, Window{bs, traj_.tstamp(idx)}, traj_.tstamp(idx) - bs});
    HotEntry f = arrays_.at(Direction::forward, idx);
    double fe = std::min(f.end, cy);
    best = better(best, Witness{f.square, Window{traj_.tstamp(idx), fe}, fe - traj_.tstamp(idx)});
    if (u == v) break;
  }

  // Clipped hot windows of every inside vertex, maximized exactly.
  best = better(best, best_clipped(Direction::backward, u, v, cx, cy));
  best = better(best, best_clipped(Direction::forward, u, v, cx, cy));

  // Partial boundary edges are cheap extra candidates.
  if (traj_.tstamp(u) > cx) {
    best = better(best, edge_hotspot(traj_, Window{cx, traj_.tstamp(u)}, side_));
  }
  if (traj_.tstamp(v) < cy) {
    best = better(best, edge_hotspot(traj_, Window{traj_.tstamp(v), cy}, side_));
  }
  return best;
}

Witness HotspotIndex::whole_trajectory_hotspot(QueryStats* stats) const {
  return query(traj_.time_begin(), traj_.time_end(), stats);
}

}  // namespace hotspot
