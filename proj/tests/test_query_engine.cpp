#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hotspot/oracle.hpp"
#include "hotspot/query_engine.hpp"
#include "support.hpp"

using namespace hotspot;
using test::random_trajectory;
using test::t4;

namespace {

constexpr double kTol = 1e-9;

int depth_bound(std::size_t vertex_count) {
  int b = 1;
  while ((std::size_t{1} << b) < vertex_count) ++b;  // ceil(log2 m)
  return b + 1;
}

}  // namespace

TEST_CASE("build_index") {
  HotspotIndex index(t4(), 2.0);
  CHECK(index.side() == 2.0);
  CHECK(index.arrays().dur(Direction::backward, 3) == doctest::Approx(2.0).epsilon(1e-9));

  HotspotIndex tiny(Trajectory(std::vector<Vertex>{{1.0, {2.0, 3.0}}}), 2.0);
  CHECK(tiny.arrays().dur(Direction::backward, 0) == 0.0);
  CHECK(tiny.arrays().dur(Direction::forward, 0) == 0.0);

  CHECK_THROWS_AS(HotspotIndex(t4(), 0.0), std::invalid_argument);
}

TEST_CASE("vertex-aligned queries on the canonical trajectory") {
  HotspotIndex index(t4(), 2.0);

  QueryStats stats;
  Witness full = index.query_vertex_aligned(0, 3, &stats);
  CHECK(full.score == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(full.interval.start == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(full.interval.end == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(full.square.anchor_x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(full.square.anchor_y == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(stats.top_split == QueryStats::Split::covered_right);  // recursed on the left edge

  Witness tail = index.query_vertex_aligned(1, 3);
  CHECK(tail.score == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(tail.interval.start == doctest::Approx(1.0).epsilon(1e-9));

  Witness edge = index.query_vertex_aligned(0, 1);
  CHECK(edge.score == doctest::Approx(1.0).epsilon(1e-9));  // whole edge fits

  Witness point = index.query_vertex_aligned(2, 2);
  CHECK(point.score == 0.0);

  CHECK_THROWS_AS(index.query_vertex_aligned(2, 1), std::out_of_range);
  CHECK_THROWS_AS(index.query_vertex_aligned(0, 4), std::out_of_range);
}

TEST_CASE("general queries on the canonical trajectory") {
  HotspotIndex index(t4(), 2.0);

  Witness a = index.query(0.5, 3.0);
  CHECK(a.score == doctest::Approx(2.0).epsilon(1e-9));

  Witness b = index.query(1.2, 1.8);  // single-edge window
  CHECK(b.score == doctest::Approx(0.6).epsilon(1e-9));

  Witness c = index.query(0.0, 1.5);  // forward window of the first vertex
  CHECK(c.score == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(c.interval.start == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(c.interval.end == doctest::Approx(1.5).epsilon(1e-9));

  CHECK_THROWS_AS(index.query(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("queries clamp to the trajectory span") {
  HotspotIndex index(t4(), 2.0);
  Witness whole = index.query(-10.0, 10.0);
  CHECK(whole.score == doctest::Approx(2.0).epsilon(1e-9));

  Witness outside = index.query(-5.0, -1.0);  // degenerates to a point query
  CHECK(outside.score == 0.0);
  CHECK(outside.interval.start == 0.0);
  CHECK(outside.square.anchor_x == 0.0);
}

TEST_CASE("whole-trajectory hotspot") {
  HotspotIndex t4_index(t4(), 2.0);
  CHECK(t4_index.whole_trajectory_hotspot().score == doctest::Approx(2.0).epsilon(1e-9));

  HotspotIndex edge_index(Trajectory({{0.0, {0, 0}}, {10.0, {10, 0}}}), 4.0);
  CHECK(edge_index.whole_trajectory_hotspot().score == doctest::Approx(4.0).epsilon(1e-9));

  HotspotIndex still(Trajectory({{0.0, {5, 5}}, {3.0, {5, 5}}, {7.0, {5, 5}}}), 1.0);
  CHECK(still.whole_trajectory_hotspot().score == doctest::Approx(7.0).epsilon(1e-9));

  HotspotIndex single(Trajectory(std::vector<Vertex>{{2.0, {1, 1}}}), 1.0);
  Witness w = single.whole_trajectory_hotspot();
  CHECK(w.score == 0.0);
  CHECK(w.square.anchor_x == 1.0);
}

TEST_CASE("every query returns a certified in-window witness") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 60; ++rep) {
    Trajectory T = random_trajectory(rng, 128);
    double side = 0.3 + 40.0 * u(rng);
    HotspotIndex index(T, side);
    for (int q = 0; q < 10; ++q) {
      double span = T.total_duration();
      double a = T.time_begin() - 0.1 * span + 1.2 * span * u(rng);
      double b = T.time_begin() - 0.1 * span + 1.2 * span * u(rng);
      if (a > b) std::swap(a, b);
      Window effective{T.clamp_time(a), T.clamp_time(b)};
      Witness wit = index.query(a, b);
      CHECK(verify_witness(T, effective, wit));
      CHECK(wit.score <= effective.duration() + kTol);
    }
  }
}

TEST_CASE("score is at least half of both oracle lower bounds") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 25; ++rep) {
    Trajectory T = random_trajectory(rng, 96);
    double side = 0.3 + 30.0 * u(rng);
    HotspotIndex index(T, side);
    for (int q = 0; q < 8; ++q) {
      double a = T.time_begin() + T.total_duration() * u(rng);
      double b = T.time_begin() + T.total_duration() * u(rng);
      if (a > b) std::swap(a, b);
      Window w{a, b};
      Witness wit = index.query(a, b);
      double anchored = oracle_vertex_anchored_opt(T, side, w).score;
      double sampled = oracle_sampled_opt(T, side, w, 60);
      CHECK(wit.score >= std::max(anchored, sampled) / 2.0 - kTol);
    }
  }
}

TEST_CASE("recursion depth is logarithmic in the window vertex count") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    Trajectory T = generate(200 + static_cast<std::size_t>(800 * u(rng)), rng());
    HotspotIndex index(T, 0.5 + 10.0 * u(rng));
    std::uniform_int_distribution<std::size_t> idx(0, T.size() - 1);
    for (int q = 0; q < 50; ++q) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i > j) std::swap(i, j);
      QueryStats stats;
      index.query_vertex_aligned(i, j, &stats);
      CHECK(stats.depth <= depth_bound(j - i + 1));
    }
  }
}

TEST_CASE("vertex-aligned queries equal the vertex-anchored oracle") {
  // The clipped-candidate maximum makes aligned answers exactly the best
  // vertex-anchored value; in particular interior-both splits are exact.
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int interior_both = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Trajectory T = random_trajectory(rng, 96);
    double side = 0.3 + 10.0 * u(rng);
    HotspotIndex index(T, side);
    std::uniform_int_distribution<std::size_t> idx(0, T.size() - 1);
    for (int q = 0; q < 20; ++q) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i > j) std::swap(i, j);
      QueryStats stats;
      Witness wit = index.query_vertex_aligned(i, j, &stats);
      if (stats.top_split == QueryStats::Split::interior_both) ++interior_both;
      Window w{T.tstamp(i), T.tstamp(j)};
      double anchored = oracle_vertex_anchored_opt(T, side, w).score;
      CHECK(wit.score == doctest::Approx(anchored).epsilon(1e-9));
    }
  }
  CHECK(interior_both > 0);
}

TEST_CASE("enlarging the window never hurts the guarantee") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 15; ++rep) {
    Trajectory T = random_trajectory(rng, 96);
    double side = 0.5 + 20.0 * u(rng);
    HotspotIndex index(T, side);
    double t0 = T.time_begin(), span = T.total_duration();
    double a = t0 + span * u(rng), b = t0 + span * u(rng);
    if (a > b) std::swap(a, b);
    double a2 = t0 + (a - t0) * u(rng);       // a2 <= a
    double b2 = b + (t0 + span - b) * u(rng); // b2 >= b
    double small = oracle_vertex_anchored_opt(T, side, {a, b}).score;
    double large = oracle_vertex_anchored_opt(T, side, {a2, b2}).score;
    CHECK(small <= large + kTol);  // the oracle optimum is monotone
    CHECK(index.query(a2, b2).score >= small / 2.0 - kTol);
  }
}

TEST_CASE("concurrent queries over a shared index") {
  Trajectory T = generate(2000, 123);
  HotspotIndex index(std::move(T), 5.0);
  const Trajectory& traj = index.trajectory();

  std::vector<Window> windows;
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> time(traj.time_begin(), traj.time_end());
  for (int q = 0; q < 400; ++q) {
    double a = time(rng), b = time(rng);
    if (a > b) std::swap(a, b);
    windows.push_back({a, b});
  }
  std::vector<double> sequential;
  sequential.reserve(windows.size());
  for (const Window& w : windows) sequential.push_back(index.query(w.start, w.end).score);

  std::vector<std::vector<double>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      results[t].reserve(windows.size());
      for (const Window& w : windows) results[t].push_back(index.query(w.start, w.end).score);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == sequential);
}
