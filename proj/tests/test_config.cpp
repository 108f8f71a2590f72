#include "doctest.h"
#include "toric/subdivision.hpp"

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

PointConfig square() {
  return PointConfig({"a", "b", "c", "d"}, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}, false);
}

Vec lift(std::initializer_list<double> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("point configuration basics") {
  PointConfig a = line3();
  CHECK(a.size() == 3);
  CHECK(a.ambient_dim() == 1);
  CHECK(!a.affine());
  CHECK(a.effective_dim() == 2);  // auto-lifted
  CHECK(a.diameter() == doctest::Approx(2.0));
  CHECK(a.label_index("1") == 1);
  CHECK_THROWS(a.label_index("missing"));
  CHECK_THROWS(PointConfig({"x", "x"}, {v1(0), v1(1)}, false));
}

TEST_CASE("affine detection") {
  CHECK(detect_affine({v2(1, 0), v2(0, 1), v2(0.5, 0.5)}));
  CHECK(!detect_affine({v2(1, 0), v2(0, 1), v2(2, 2)}));
}

TEST_CASE("valley lift splits the segment") {
  PointConfig a = line3();
  Subdivision s = regular_subdivision(a, lift({0, -1, 0}));
  REQUIRE(s.facets.size() == 2);
  CHECK(s.facets[0] == std::vector<int>{0, 1});
  CHECK(s.facets[1] == std::vector<int>{1, 2});
  CHECK(is_triangulation(s, a));
  validate_subdivision(a, s);

  Subdivision trivial = regular_subdivision(a, lift({0, 0, 0}));
  CHECK(trivial.facets == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(!is_triangulation(trivial, a));
  CHECK(refines(s, trivial));
  CHECK(!refines(trivial, s));
}

TEST_CASE("ridge lift leaves the middle point out") {
  PointConfig a = line3();
  Subdivision s = regular_subdivision(a, lift({0, 1, 0}));
  CHECK(s.facets == std::vector<std::vector<int>>{{0, 2}});
}

TEST_CASE("secondary polytope of three collinear points") {
  PointConfig a = line3();
  TriangulationList list = enumerate_regular_triangulations(a, 200, 7);
  CHECK(list.exhaustive);
  REQUIRE(list.triangulations.size() == 2);
  // facet volumes summed per label
  std::vector<Vec> expected = {lift({1, 2, 1}), lift({2, 0, 2})};
  for (const Vec& g : list.gkz) {
    bool matched = false;
    for (const Vec& e : expected) matched = matched || (g - e).norm() <= 1e-9;
    CHECK(matched);
  }
  CHECK((list.gkz[0] - list.gkz[1]).norm() > 1e-9);
}

TEST_CASE("gkz vertex recomputation") {
  PointConfig a = line3();
  Subdivision t = regular_subdivision(a, lift({0, -1, 0}));
  CHECK((gkz_vertex(a, t) - lift({1, 2, 1})).norm() <= 1e-12);
  CHECK_THROWS(gkz_vertex(a, regular_subdivision(a, lift({0, 0, 0}))));
}

TEST_CASE("square has two triangulations") {
  PointConfig a = square();
  TriangulationList list = enumerate_regular_triangulations(a, 300, 11);
  CHECK(list.triangulations.size() == 2);
  for (const Subdivision& t : list.triangulations) {
    CHECK(t.facets.size() == 2);
    CHECK(is_triangulation(t, a));
  }
}

TEST_CASE("secondary cone membership") {
  PointConfig a = line3();
  Vec lam = lift({0, -1, 0});
  // adding an affine function or scaling keeps the chamber
  CHECK(same_secondary_cone(a, lam, lift({5, 1.5, 3})));
  CHECK(same_secondary_cone(a, lam, 2.0 * lam));
  CHECK(!same_secondary_cone(a, lam, lift({0, 1, 0})));
}

TEST_CASE("secondary lineality spans affine lifts") {
  PointConfig a = line3();
  Mat lin = secondary_lineality(a);
  CHECK(lin.cols() == 2);
  Vec affine = lift({3, 5, 7});  // 2*a + 3
  CHECK((affine - lin * (lin.transpose() * affine)).norm() <= 1e-9);
  Vec bent = lift({0, -1, 0});
  CHECK((bent - lin * (lin.transpose() * bent)).norm() > 0.1);
}

TEST_CASE("exhaustive subdivision scan finds walls") {
  PointConfig a = line3();
  std::vector<Subdivision> all = exhaustive_regular_subdivisions(a);
  // two triangulations plus the trivial coarsening
  CHECK(all.size() == 3);
  int triangulations = 0;
  for (const Subdivision& s : all) triangulations += is_triangulation(s, a) ? 1 : 0;
  CHECK(triangulations == 2);
}

TEST_CASE("subdivision validation rejects gaps") {
  PointConfig a = square();
  Subdivision bad;
  bad.facets = {{0, 1, 3}};  // misses the upper-left triangle
  bad.faces = bad.facets;
  CHECK_THROWS(validate_subdivision(a, bad));
}

TEST_CASE("config faces of a simplex") {
  PointConfig a({"x", "y", "z"}, {v2(0, 0), v2(1, 0), v2(0, 1)}, false);
  std::vector<std::vector<int>> faces = config_faces(a);
  CHECK(faces.size() == 7);  // 3 vertices, 3 edges, the triangle
  CHECK(faces.back() == std::vector<int>{0, 1, 2});
}
