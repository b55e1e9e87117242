#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hotspot/trajectory.hpp"
#include "support.hpp"

using namespace hotspot;
using test::random_trajectory;
using test::t4;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("trajectory validation") {
  using V = std::vector<Vertex>;
  CHECK_THROWS_AS(Trajectory(V{}), std::invalid_argument);
  CHECK_THROWS_AS(Trajectory(V{{0.0, {0, 0}}, {0.0, {1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(Trajectory(V{{1.0, {0, 0}}, {0.5, {1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(Trajectory(V{{0.0, {std::nan(""), 0}}}), std::invalid_argument);
  CHECK_NOTHROW(Trajectory(V{{0.0, {0, 0}}}));  // single vertex is legal
  // repeated locations express stationary behavior
  CHECK_NOTHROW(Trajectory(V{{0.0, {1, 1}}, {1.0, {1, 1}}}));
}

TEST_CASE("locate interpolates linearly") {
  Trajectory T = t4();
  Point a = T.locate(0.0);
  CHECK(a.x == 0.0);
  CHECK(a.y == 0.0);
  Point b = T.locate(1.5);  // midpoint of edge (1,0)->(3,0)
  CHECK(b.x == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(b.y == 0.0);
  Point c = T.locate(2.5);  // midpoint of edge (3,0)->(3,2)
  CHECK(c.x == doctest::Approx(3.0));
  CHECK(c.y == doctest::Approx(1.0));

  CHECK_THROWS_AS(T.locate(-0.1), std::out_of_range);
  CHECK_THROWS_AS(T.locate(3.1), std::out_of_range);
}

TEST_CASE("locate is continuous at vertex boundaries") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Trajectory T = random_trajectory(rng);
    if (T.size() < 3) continue;
    for (std::size_t i = 1; i + 1 < T.size(); ++i) {
      double t = T.tstamp(i);
      double h = 1e-9;
      Point before = T.locate(t - h);
      Point after = T.locate(t + h);
      CHECK(std::hypot(after.x - before.x, after.y - before.y) < 1e-6);
    }
  }
}

TEST_CASE("subtrajectory_bbox") {
  Trajectory T = t4();

  BBox b = subtrajectory_bbox(T, {1.0, 3.0});
  CHECK(b.min_x == 1.0);
  CHECK(b.max_x == 3.0);
  CHECK(b.min_y == 0.0);
  CHECK(b.max_y == 2.0);

  BBox point = subtrajectory_bbox(T, {0.0, 0.0});
  CHECK(point.min_x == 0.0);
  CHECK(point.max_x == 0.0);
  CHECK(point.width() == 0.0);

  BBox half = subtrajectory_bbox(T, {0.5, 1.0});
  CHECK(half.min_x == doctest::Approx(0.5));
  CHECK(half.max_x == doctest::Approx(1.0));
  CHECK(half.min_y == 0.0);
  CHECK(half.max_y == 0.0);

  CHECK_THROWS_AS(subtrajectory_bbox(T, {-1.0, 2.0}), std::out_of_range);
}

TEST_CASE("edge_hotspot closed forms") {
  Trajectory horizontal({{0.0, {0, 0}}, {10.0, {10, 0}}});
  Witness w1 = edge_hotspot(horizontal, {0.0, 10.0}, 4.0);
  CHECK(w1.score == doctest::Approx(4.0));
  CHECK(w1.interval.start == 0.0);
  CHECK(w1.interval.end == doctest::Approx(4.0));

  Trajectory diagonal({{0.0, {0, 0}}, {10.0, {6, 8}}});
  Witness w2 = edge_hotspot(diagonal, {0.0, 10.0}, 4.0);
  CHECK(w2.score == doctest::Approx(5.0));  // min(1, 4/6, 4/8) = 1/2

  Trajectory T = t4();
  Witness w3 = edge_hotspot(T, {1.2, 1.8}, 2.0);
  CHECK(w3.score == doctest::Approx(0.6));  // sub-segment bbox fits
  CHECK(w3.interval.end == doctest::Approx(1.8));

  CHECK_THROWS_AS(edge_hotspot(T, {0.5, 1.5}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(edge_hotspot(T, {1.0, 2.5}, 2.0), std::invalid_argument);
}

TEST_CASE("edge_hotspot is invariant under translation and axis swap") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int rep = 0; rep < 200; ++rep) {
    Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    double dur = 1.0 + std::abs(u(rng));
    double side = 0.1 + std::abs(u(rng)) * 0.1;
    Trajectory base({{0.0, a}, {dur, b}});
    double score = edge_hotspot(base, {0.0, dur}, side).score;

    double dx = u(rng), dy = u(rng);
    Trajectory moved({{0.0, {a.x + dx, a.y + dy}}, {dur, {b.x + dx, b.y + dy}}});
    CHECK(edge_hotspot(moved, {0.0, dur}, side).score == doctest::Approx(score).epsilon(1e-12));

    Trajectory swapped({{0.0, {a.y, a.x}}, {dur, {b.y, b.x}}});
    CHECK(edge_hotspot(swapped, {0.0, dur}, side).score == doctest::Approx(score).epsilon(1e-12));
  }
}

TEST_CASE("weight_of_square by parametric clipping") {
  Trajectory T = t4();
  CHECK(weight_of_square(T, {0.0, 3.0}, Square{1.0, 0.0, 2.0}) ==
        doctest::Approx(2.0).epsilon(1e-9));  // inside for t in [1,3]
  CHECK(weight_of_square(T, {0.0, 3.0}, Square{0.0, 0.0, 2.0}) ==
        doctest::Approx(1.5));  // exits at x=2, t=1.5
  CHECK(weight_of_square(T, {0.0, 3.0}, Square{100.0, 100.0, 2.0}) == 0.0);  // disjoint
}

TEST_CASE("weight_of_square picks the longest single visit") {
  // Enters the square twice: [0,1] and [3,5].
  Trajectory T({{0.0, {0, 0}}, {1.0, {1, 0}}, {2.0, {5, 0}},
                {3.0, {1, 0}}, {5.0, {0, 0}}});
  Square r{0.0, -0.5, 1.0};
  CHECK(weight_of_square(T, {0.0, 5.0}, r) == doctest::Approx(2.0));
  CHECK(weight_of_square(T, {0.0, 1.5}, r) == doctest::Approx(1.0));
}

TEST_CASE("fit/containment duality") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int fitting = 0;
  for (int rep = 0; rep < 300; ++rep) {
    Trajectory T = random_trajectory(rng);
    double side = 0.5 + 30.0 * u(rng);
    double a = T.time_begin() + T.total_duration() * u(rng);
    double b = T.time_begin() + T.total_duration() * u(rng);
    if (a > b) std::swap(a, b);
    Window w{a, b};
    BBox box = subtrajectory_bbox(T, w);
    if (!fits(box, side)) continue;
    ++fitting;
    double weight = weight_of_square(T, w, covering_square(box, side));
    CHECK(weight >= w.duration() - kTol);
  }
  CHECK(fitting > 10);
}
