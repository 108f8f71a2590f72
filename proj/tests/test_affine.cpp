#include <cmath>

#include "doctest.h"
#include "toric/affine_variety.hpp"

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

PointConfig line3() { return PointConfig({"0", "1", "2"}, {v1(0), v1(1), v1(2)}, false); }

Vec vec(std::initializer_list<double> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("torus orbit points are members") {
  PointConfig a = line3();
  Vec z = phi(a, TorusElement{vec({0.7, -0.3})});
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(z(i) > 0.0);
  CHECK(is_member(a, z / z.sum()));
}

TEST_CASE("one binomial relation on three collinear points") {
  PointConfig a = line3();
  Mat rel = relation_basis(a);
  REQUIRE(rel.cols() == 1);
  // kernel direction of the moment matrix, i.e. z0 z2 = z1^2
  Vec expected = vec({1, -2, 1}).normalized();
  CHECK(std::min((rel.col(0) - expected).norm(), (rel.col(0) + expected).norm()) <= 1e-12);
  Vec z = phi(a, TorusElement{vec({0.2, 1.4})});
  CHECK(std::abs(z(0) * z(2) - z(1) * z(1)) <= 1e-12 * z.maxCoeff() * z.maxCoeff());
}

TEST_CASE("membership requires a support face") {
  PointConfig a = line3();
  CHECK(is_member(a, vec({1, 0, 0})));
  CHECK(is_member(a, vec({0, 0, 1})));
  // {0,2} is not a face: the middle point lies on the segment
  CHECK(!is_member(a, vec({0.5, 0, 0.5})));
  // full support but the relation fails
  CHECK(!is_member(a, vec({0.5, 0.1, 0.4})));
  CHECK(support_face(a, vec({1, 0, 0})) == std::vector<int>{0});
  CHECK_THROWS(support_face(a, vec({0.5, 0, 0.5})));
}

TEST_CASE("moment map inversion at an interior target") {
  PointConfig a = line3();
  BirchResult b = birch_inverse(a, vec({1, 1, 1}), v1(1.5));
  // positive root of 3q^2+2q-2 with z = (1,q,q^2)/(1+q+q^2)
  CHECK(b.z(0) == doctest::Approx(0.11620).epsilon(1e-3));
  CHECK(b.z(1) == doctest::Approx(0.26759).epsilon(1e-3));
  CHECK(b.z(2) == doctest::Approx(0.61620).epsilon(1e-3));
  CHECK(b.residual <= 1e-9);
  CHECK(b.face == std::vector<int>{0, 1, 2});
  CHECK((moment(a, b.z) - v1(1.5)).norm() <= 1e-9);
  CHECK(is_member(a, b.z));
}

TEST_CASE("vertex targets invert to indicator points") {
  PointConfig a = line3();
  BirchResult b0 = birch_inverse(a, vec({2, 1, 0.5}), v1(0));
  CHECK((b0.z - vec({1, 0, 0})).norm() <= 1e-9);
  CHECK(b0.face == std::vector<int>{0});
  BirchResult b2 = birch_inverse(a, vec({2, 1, 0.5}), v1(2));
  CHECK((b2.z - vec({0, 0, 1})).norm() <= 1e-9);
}

TEST_CASE("simplex configurations invert to barycentric coordinates") {
  PointConfig a({"p", "q", "r"}, {v2(0, 0), v2(1, 0), v2(0, 1)}, false);
  Vec bary = vec({0.2, 0.5, 0.3});
  Vec u = 0.2 * v2(0, 0) + 0.5 * v2(1, 0) + 0.3 * v2(0, 1);
  BirchResult b = birch_inverse(a, vec({1, 1, 1}), u);
  CHECK((b.z - bary).norm() <= 1e-9);
  // weights do not change the image, only the cocharacter
  BirchResult bw = birch_inverse(a, vec({3, 0.25, 1}), u);
  CHECK((bw.z - bary).norm() <= 1e-9);
}

TEST_CASE("targets outside the hull are rejected") {
  PointConfig a = line3();
  CHECK_THROWS(birch_inverse(a, vec({1, 1, 1}), v1(2.5)));
  CHECK_THROWS(birch_inverse(a, vec({1, 1, 1}), v1(-0.1)));
}

TEST_CASE("recovered cocharacter reproduces the point") {
  PointConfig a = line3();
  Vec w = vec({1.5, 0.8, 1.1});
  BirchResult b = birch_inverse(a, w, v1(0.9));
  Vec z = w.array() * phi(a, TorusElement{b.v}).array();
  z /= z.sum();
  CHECK((z - b.z).norm() <= 1e-8);
}

TEST_CASE("support faces of a lifted segment") {
  PointConfig a = line3();
  std::vector<std::vector<int>> faces = support_faces(a);
  REQUIRE(faces.size() == 3);
  CHECK(faces[0] == std::vector<int>{0});
  CHECK(faces[1] == std::vector<int>{2});
  CHECK(faces[2] == std::vector<int>{0, 1, 2});
}

TEST_CASE("complex sampling is deterministic and face-supported") {
  PointConfig a = line3();
  Subdivision s = regular_subdivision(a, vec({0, -1, 0}));
  ToricComplex cx{s, vec({1, 1, 1})};
  PointCloud c1 = sample_complex(a, cx, 20, 99);
  PointCloud c2 = sample_complex(a, cx, 20, 99);
  REQUIRE(c1.size() == c2.size());
  for (size_t i = 0; i < c1.size(); ++i) CHECK((c1[i] - c2[i]).norm() == 0.0);
  for (const Vec& z : c1) {
    CHECK(z.minCoeff() >= 0.0);
    CHECK(z.sum() == doctest::Approx(1.0).epsilon(1e-9));
    // each sample lives on one of the two facets
    CHECK((z(0) <= 1e-9 || z(2) <= 1e-9));
  }
}
