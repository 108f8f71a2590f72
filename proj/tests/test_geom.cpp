#include "doctest.h"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}

}  // namespace

TEST_CASE("quadrant cone basics") {
  Cone q({v2(1, 0), v2(0, 1)}, 2);
  CHECK(q.dim() == 2);
  CHECK(q.lineality_dim() == 0);
  CHECK(q.rays().size() == 2);
  CHECK(q.contains(v2(3, 5)));
  CHECK(q.contains_relint(v2(1, 1)));
  CHECK(!q.contains_relint(v2(1, 0)));
  CHECK(!q.contains(v2(-1, 0.5)));
  CHECK(q.contains_relint(q.interior_sample()));

  // self-dual
  CHECK(cone_distance(q, q.dual()) == doctest::Approx(0.0).epsilon(1e-12));
  // v, 0-face, two rays, whole cone
  CHECK(q.face_lattice().faces.size() == 4);
}

TEST_CASE("duality is an involution") {
  Cone c({v2(2, 1), v2(1, 3)}, 2);
  CHECK(cone_distance(c, c.dual().dual()) <= 1e-9);
  // duplicated and redundant generators change nothing
  Cone c2({v2(2, 1), v2(2, 1), v2(1, 3), v2(3, 4)}, 2);
  CHECK(c.equals(c2));
  CHECK(cone_distance(c, c2) <= 1e-9);
}

TEST_CASE("half-plane has lineality") {
  Cone h({v2(1, 0), v2(-1, 0), v2(0, 1)}, 2);
  CHECK(h.lineality_dim() == 1);
  REQUIRE(h.rays().size() == 1);
  CHECK((h.rays()[0] - v2(0, 1)).norm() <= 1e-12);
  // dual is the ray spanned by e1
  Cone d = h.dual();
  CHECK(d.dim() == 1);
  CHECK(d.lineality_dim() == 0);
  CHECK(d.contains(v2(0, 2)));
  CHECK(!d.contains(v2(1e-3, 1)));
}

TEST_CASE("zero and full cones are dual") {
  Cone z = Cone::zero(2);
  Cone f = Cone::full_space(2);
  CHECK(z.dim() == 0);
  CHECK(f.lineality_dim() == 2);
  CHECK(z.dual().equals(f));
  CHECK(f.dual().equals(z));
}

TEST_CASE("intersection of cones") {
  Cone q({v2(1, 0), v2(0, 1)}, 2);
  Cone w({v2(1, 1), v2(-1, 1)}, 2);
  Cone i = intersect(q, w);
  CHECK(i.equals(Cone({v2(1, 1), v2(0, 1)}, 2)));
  CHECK(is_face_of(Cone({v2(1, 1)}, 2), w));
  CHECK(!is_face_of(Cone({v2(0, 1)}, 2), w));
}

TEST_CASE("face lattice ordering") {
  Cone q({v2(1, 0), v2(0, 1)}, 2);
  const FaceLattice& lat = q.face_lattice();
  // minimal face first, whole cone last
  CHECK(lat.faces.front().dim == 0);
  CHECK(lat.faces.back().dim == 2);
  for (size_t i = 0; i < lat.faces.size(); ++i) {
    CHECK(lat.leq(0, i));
    CHECK(lat.leq(i, lat.faces.size() - 1));
  }
  // rays are incomparable
  CHECK(!lat.leq(1, 2));
  CHECK(!lat.leq(2, 1));
}

TEST_CASE("dual decomposition over a face") {
  Cone sigma({v2(1, 0), v2(0, 1)}, 2);
  Cone tau({v2(1, 0)}, 2);
  Vec w = v2(1, -2);  // in tau's dual but not sigma's
  auto [u, l] = decompose_over_face(sigma, tau, w);
  CHECK((w - (u - l)).norm() <= 1e-9);
  CHECK(sigma.dual().contains(u));
  CHECK(sigma.dual().contains(l));
  CHECK(std::abs(l.dot(v2(1, 0))) <= 1e-9);  // l vanishes on tau
}

TEST_CASE("fan of the line is complete") {
  Fan f = Fan::from_cones({Cone({v1(1)}, 1), Cone({v1(-1)}, 1)});
  CHECK(f.size() == 3);  // the origin is added by face closure
  CHECK(f.is_complete());
  REQUIRE(f.minimal_containing_cone(v1(-0.5)).has_value());
  CHECK(f.cone(*f.minimal_containing_cone(v1(-0.5))).contains(v1(-1)));
  CHECK(*f.minimal_containing_cone(v1(0)) == f.minimal_cone());
}

TEST_CASE("incomplete fan misses directions") {
  Fan f = Fan::from_cones({Cone({v2(1, 0), v2(0, 1)}, 2)});
  CHECK(!f.is_complete());
  CHECK(!f.minimal_containing_cone(v2(-1, -1)).has_value());
}

TEST_CASE("fan star adds lineality") {
  Fan f = Fan::from_cones({Cone({v2(1, 0), v2(0, 1)}, 2), Cone({v2(0, 1), v2(-1, 0)}, 2)});
  std::optional<size_t> ray = f.find_cone(Cone({v2(0, 1)}, 2));
  REQUIRE(ray.has_value());
  auto [star, origin] = f.star(*ray);
  CHECK(star.lineality().cols() == 1);
  for (size_t i = 0; i < star.size(); ++i) CHECK(star.cone(i).contains(v2(0, -1)));
  CHECK(origin.size() == star.size());
}

TEST_CASE("mixing cones from incompatible fans throws") {
  CHECK_THROWS(Fan::from_cones({Cone({v2(1, 0), v2(0, 1)}, 2), Cone({v2(1, 1), v2(0, -1)}, 2)}));
}

TEST_CASE("normal fan of the unit square") {
  std::vector<Vec> square = {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)};
  NormalFanResult nf = normal_fan(square);
  CHECK(nf.fan.is_complete());
  // 4 vertices, 4 edges, the square itself
  CHECK(nf.face_labels.size() == 9);
  CHECK(nf.fan.size() == 9);
  // the vertex (0,0) minimizes over the quadrant
  for (size_t i = 0; i < nf.face_labels.size(); ++i)
    if (nf.face_labels[i] == std::vector<int>{0})
      CHECK(nf.fan.cone(nf.cone_of_face[i]).contains_relint(v2(1, 1)));
}

TEST_CASE("point set faces include interior labels") {
  std::vector<Vec> pts = {v2(0, 0), v2(2, 0), v2(0, 2), v2(1, 0)};
  std::vector<std::vector<int>> faces = point_set_faces(pts);
  // label 3 sits inside the edge {0,1}
  bool found = false;
  for (const auto& f : faces)
    if (f == std::vector<int>{0, 1, 3}) found = true;
  CHECK(found);
  CHECK(faces.back() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("polytope drops redundant points") {
  Polytope p({v2(0, 0), v2(2, 0), v2(0, 2), v2(1, 0), v2(0.5, 0.5)});
  CHECK(p.vertices().size() == 3);
}
