#include "doctest.h"
#include "toric/hausdorff.hpp"

using namespace toric;

namespace {

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}

PointConfig line3() { return PointConfig({"0", "1", "2"}, {v1(0), v1(1), v1(2)}, false); }

Vec vec(std::initializer_list<double> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("hausdorff distance on small clouds") {
  PointCloud p = {vec({0, 0}), vec({1, 0})};
  PointCloud q = {vec({0, 0}), vec({1, 0}), vec({1, 0})};
  CHECK(hausdorff_distance(p, q) == 0.0);  // equal as sets
  PointCloud r = {vec({0, 0.5}), vec({1, 0})};
  CHECK(hausdorff_distance(p, r) == doctest::Approx(0.5));
  CHECK(hausdorff_distance(r, p) == doctest::Approx(0.5));
  CHECK_THROWS(hausdorff_distance(p, PointCloud{}));
}

TEST_CASE("moment grid sticks to its facets") {
  PointConfig a = line3();
  Subdivision s = regular_subdivision(a, vec({0, -1, 0}));
  MomentGrid g = sample_moment_grid(a, s, 30, 5);
  REQUIRE(g.targets.size() == g.facet_of.size());
  for (size_t k = 0; k < g.targets.size(); ++k) {
    double x = g.targets[k](0);
    if (g.facet_of[k] == 0)
      CHECK((x >= -1e-9 && x <= 1 + 1e-9));
    else
      CHECK((x >= 1 - 1e-9 && x <= 2 + 1e-9));
  }
  MomentGrid g2 = sample_moment_grid(a, s, 30, 5);
  REQUIRE(g.targets.size() == g2.targets.size());
  for (size_t k = 0; k < g.targets.size(); ++k) CHECK((g.targets[k] - g2.targets[k]).norm() == 0.0);
}

TEST_CASE("degeneration toward the valley subdivision") {
  PointConfig a = line3();
  DegenerationReport r = degenerate(a, vec({1, 1, 1}), vec({0, -1, 0}), {1, 2, 4, 8, 16}, 80, 3);
  CHECK(r.predicted.facets == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(r.verdict);
  CHECK(r.monotone);
  CHECK(r.cone_consistent);
  CHECK(r.final_distance < r.threshold);
  CHECK(r.distances.front() > r.distances.back());
}

TEST_CASE("lineality directions give a flat passing curve") {
  PointConfig a = line3();
  // the direction is affine on the points: translation inside the orbit
  DegenerationReport r = degenerate(a, vec({1, 1, 1}), vec({0, 1, 2}), {1, 2, 4}, 60, 3);
  CHECK(r.predicted.facets == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(r.verdict);
  for (double d : r.distances) CHECK(d <= r.threshold);
}

TEST_CASE("ridge direction leaves the middle weight behind") {
  PointConfig a = line3();
  DegenerationReport r = degenerate(a, vec({1, 1, 1}), vec({0, 1, 0}), {2, 4, 8, 16}, 80, 3);
  CHECK(r.predicted.facets == std::vector<std::vector<int>>{{0, 2}});
  CHECK(r.verdict);
}

TEST_CASE("degeneration rejects bad inputs") {
  PointConfig a = line3();
  CHECK_THROWS(degenerate(a, vec({1, 1, 1}), vec({0, -1, 0}), {}, 50, 0));
  CHECK_THROWS(degenerate(a, vec({1, 1, 1}), vec({0, -1, 0}), {4, 2}, 50, 0));
  CHECK_THROWS(degenerate(a, vec({1, 1}), vec({0, -1, 0}), {1, 2}, 50, 0));
  // schedule far enough out to underflow the translated weights
  CHECK_THROWS(degenerate(a, vec({1, 1, 1}), vec({0, -1, 0}), {1, 2000}, 50, 0));
}

TEST_CASE("secondary limits land in the induced chamber") {
  PointConfig a = line3();
  Vec v = vec({0, -1, 0});
  SecondaryFanPoint lim = secondary_ray_limit(a, vec({0.3, 0.1, -0.2}), v);
  CHECK(lim.cone.same_as(regular_subdivision(a, v)));
  // the limit forgets motion inside the cone span
  SecondaryFanPoint lim2 = secondary_ray_limit(a, vec({0.3, 0.1, -0.2}) + 0.5 * v, v);
  CHECK(secondary_points_equal(a, lim, lim2));
}

TEST_CASE("psi sends weights to the dense orbit") {
  PointConfig a = line3();
  SecondaryFanPoint p = psi_point(a, vec({1, 2, 0.5}));
  CHECK(p.cone.facets == std::vector<std::vector<int>>{{0, 1, 2}});
  // common rescaling of the weights is a lineality move
  SecondaryFanPoint q = psi_point(a, 3.0 * vec({1, 2, 0.5}));
  CHECK(secondary_points_equal(a, p, q));
  CHECK(!secondary_points_equal(a, p, psi_point(a, vec({1, 2, 5.0}))));
}

TEST_CASE("stabilizer directions versus transverse ones") {
  PointConfig a = line3();
  CHECK(orbit_match(a, vec({0, -1, 0}), vec({1, 1, 1})));
}

TEST_CASE("threshold scales with the calibration constant") {
  CHECK(sampling_threshold(2.0, 100, 1e-6) == doctest::Approx(0.2 + 1e-6));
  PointConfig a = line3();
  double c = calibrate_sampling_constant(a, vec({1, 1, 1}), 40, 9);
  CHECK(c > 0.0);
}
