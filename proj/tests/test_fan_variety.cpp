#include "doctest.h"
#include "toric/fan_variety.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Fan line_fan() { return Fan::from_cones({Cone({v1(1)}, 1), Cone({v1(-1)}, 1)}); }

}  // namespace

TEST_CASE("limits in the complete line fan") {
  Fan f = line_fan();
  FanPoint e = epsilon(f);
  std::optional<FanPoint> lim = one_param_limit(f, e, v1(1));
  REQUIRE(lim.has_value());
  CHECK(f.cone(lim->cone_id).contains(v1(1)));
  CHECK(f.cone(lim->cone_id).dim() == 1);
  // orbit coordinate collapses modulo the cone span
  CHECK(lim->orbit_coord.norm() <= 1e-12);

  // zero direction keeps the point
  std::optional<FanPoint> stay = one_param_limit(f, e, v1(0));
  REQUIRE(stay.has_value());
  CHECK(fan_points_equal(f, *stay, e));
}

TEST_CASE("uncovered directions have no limit") {
  Fan f = Fan::from_cones({Cone({v2(1, 0), v2(0, 1)}, 2)});
  CHECK(!one_param_limit(f, epsilon(f), v2(-1, -1)).has_value());
  CHECK(!ray_sequence_limit(f, v2(0.3, 0.7), v2(-1, 0)).has_value());
  CHECK(ray_sequence_limit(f, v2(0.3, 0.7), v2(2, 1)).has_value());
}

TEST_CASE("ray and one-parameter limits agree from the torus") {
  Fan f = line_fan();
  Vec base = v1(0.4);
  FanPoint start{f.minimal_cone(), base};
  std::optional<FanPoint> l1 = one_param_limit(f, start, v1(-2));
  std::optional<FanPoint> l2 = ray_sequence_limit(f, base, v1(-2));
  REQUIRE(l1.has_value());
  REQUIRE(l2.has_value());
  CHECK(fan_points_equal(f, *l1, *l2));
}

TEST_CASE("torus action is a group action") {
  Fan f = line_fan();
  FanPoint p{f.minimal_cone(), v1(0.25)};
  FanPoint q = act(f, TorusElement{v1(1.5)}, act(f, TorusElement{v1(-0.5)}, p));
  CHECK(fan_points_equal(f, q, act(f, TorusElement{v1(1.0)}, p)));
}

TEST_CASE("character evaluation at distinguished points") {
  Fan f = line_fan();
  std::optional<size_t> plus = f.minimal_containing_cone(v1(1));
  REQUIRE(plus.has_value());
  FanPoint x = distinguished_point(f, *plus);
  // u = 0 is the only character orthogonal to the ray; positive pairing kills
  CHECK(evaluate(f, x, v1(0)) == doctest::Approx(1.0));
  CHECK(evaluate(f, x, v1(3)) == 0.0);
  CHECK_THROWS(evaluate(f, x, v1(-1)));
  // on the dense torus every allowed character is an exponential
  FanPoint t{f.minimal_cone(), v1(0.5)};
  CHECK(evaluate(f, t, v1(2)) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("monoid structure on fan points") {
  Fan f = line_fan();
  FanPoint e = epsilon(f);
  std::optional<size_t> plus = f.minimal_containing_cone(v1(1));
  std::optional<size_t> minus = f.minimal_containing_cone(v1(-1));
  MonoidElement xp = distinguished_point(f, *plus);
  MonoidElement xm = distinguished_point(f, *minus);
  // identity
  MonoidElement prod = monoid_mul(f, MonoidElement(e), xp);
  REQUIRE(prod.has_value());
  CHECK(fan_points_equal(f, *prod, *xp));
  // no cone contains both rays
  CHECK(!monoid_mul(f, xp, xm).has_value());
  // absorption within a cone
  MonoidElement sq = monoid_mul(f, xp, xp);
  REQUIRE(sq.has_value());
  CHECK(fan_points_equal(f, *sq, *xp));
}

TEST_CASE("fan maps respect cones") {
  Fan f = line_fan();
  Mat id = Mat::Identity(1, 1);
  FanPoint p{f.minimal_cone(), v1(0.3)};
  FanPoint q = fan_map_apply(id, f, f, p);
  CHECK(fan_points_equal(f, p, q));
  Mat flip = -Mat::Identity(1, 1);
  std::optional<size_t> plus = f.minimal_containing_cone(v1(1));
  FanPoint image = fan_map_apply(flip, f, f, distinguished_point(f, *plus));
  CHECK(f.cone(image.cone_id).contains(v1(-1)));
  // a quadrant cannot map into a half-line fan
  Fan half = Fan::from_cones({Cone({v1(1)}, 1)});
  CHECK_THROWS(fan_map_apply(flip, f, half, p));
}

TEST_CASE("limit directions recover the fan") {
  std::vector<Vec> pts = {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1), v2(0.5, 2)};
  NormalFanResult nf = normal_fan(pts);
  REQUIRE(nf.fan.is_complete());
  RecoverReport r = recover_fan(nf.fan, 400, 17);
  CHECK(r.mismatches == 0);
  CHECK(r.absent == 0);
  // every maximal cone shows up as a limit group
  size_t maximal = 0;
  for (size_t i = 0; i < nf.fan.size(); ++i)
    if (nf.fan.cone(i).dim() == 2) ++maximal;
  CHECK(r.groups.size() == maximal);
}

TEST_CASE("orbit embedding into the simplex") {
  PointConfig a({"0", "1", "2"}, {v1(0), v1(1), v1(2)}, false);
  NormalFanResult nf = normal_fan(a.points());
  // dense orbit: the embedding is the weighted exponential map
  FanPoint p{nf.fan.minimal_cone(), v1(0.8)};
  Vec z = embed_simplex(a, nf, p);
  CHECK(z.sum() == doctest::Approx(1.0));
  CHECK(z(1) / z(0) == doctest::Approx(std::exp(-0.8)));
  CHECK(z(2) / z(1) == doctest::Approx(std::exp(-0.8)));
  // the reference label does not matter
  Vec z2 = embed_simplex(a, nf, p, 2);
  CHECK((z - z2).norm() <= 1e-12);
  CHECK_THROWS(embed_simplex(a, nf, FanPoint{nf.fan.minimal_cone(), v1(0)}, 5));

  // a vertex cone maps to the indicator of its label
  for (size_t i = 0; i < nf.face_labels.size(); ++i)
    if (nf.face_labels[i] == std::vector<int>{0}) {
      Vec ind = embed_simplex(a, nf, distinguished_point(nf.fan, nf.cone_of_face[i]));
      CHECK((ind - Vec::Unit(3, 0)).norm() <= 1e-12);
    }
}

TEST_CASE("canonicalization kills the cone span") {
  Fan f = line_fan();
  std::optional<size_t> plus = f.minimal_containing_cone(v1(1));
  CHECK(canonicalize(f, *plus, v1(7.5)).norm() <= 1e-12);
  CHECK((canonicalize(f, f.minimal_cone(), v1(7.5)) - v1(7.5)).norm() <= 1e-12);
}
