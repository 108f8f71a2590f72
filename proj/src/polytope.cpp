#include "toric/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

std::vector<Vec> homogenize(const std::vector<Vec>& points) {
  std::vector<Vec> lifted;
  lifted.reserve(points.size());
  for (const Vec& p : points) {
    Vec q(p.size() + 1);
    q.head(p.size()) = p;
    q(p.size()) = 1.0;
    lifted.push_back(std::move(q));
  }
  return lifted;
}

std::vector<std::vector<int>> faces_from_cone(const std::vector<Vec>& gens, int dim,
                                              Tolerance tol, bool include_empty) {
  Cone c(gens, dim, tol);
  std::vector<std::vector<int>> out;
  for (const Face& f : c.face_lattice().faces) {
    Cone fc = c.face_cone(f);
    std::vector<int> labels;
    for (size_t i = 0; i < gens.size(); ++i)
      if (fc.contains(gens[i])) labels.push_back(static_cast<int>(i));
    if (labels.empty() && !include_empty) continue;
    if (std::find(out.begin(), out.end(), labels) == out.end()) out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

Polytope::Polytope(std::vector<Vec> points, Tolerance tol)
    : dim_(points.empty() ? 0 : static_cast<int>(points.front().size())), tol_(tol) {
  tol_.validate();
  if (points.empty()) throw std::invalid_argument("Polytope: no points");
  for (const Vec& p : points)
    if (p.size() != dim_) throw std::invalid_argument("Polytope: dimension mismatch");
  // dedupe, then keep only extreme points
  std::vector<Vec> unique;
  for (const Vec& p : points) {
    bool dup = false;
    for (const Vec& q : unique)
      if ((p - q).norm() <= tol_.eps_geom) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(p);
  }
  for (size_t i = 0; i < unique.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (others.empty() || !in_convex_hull(others, unique[i], tol_.eps_geom))
      vertices_.push_back(unique[i]);
  }
  if (vertices_.empty()) vertices_.push_back(points.front());
}

std::vector<std::vector<int>> point_set_faces(const std::vector<Vec>& points, Tolerance tol) {
  if (points.empty()) throw std::invalid_argument("point_set_faces: empty point set");
  int dim = static_cast<int>(points.front().size());
  return faces_from_cone(homogenize(points), dim + 1, tol, false);
}

std::vector<std::vector<int>> cone_point_faces(const std::vector<Vec>& points, Tolerance tol) {
  if (points.empty()) throw std::invalid_argument("cone_point_faces: empty point set");
  int dim = static_cast<int>(points.front().size());
  return faces_from_cone(points, dim, tol, false);
}

NormalFanResult normal_fan(const std::vector<Vec>& points, Tolerance tol) {
  tol.validate();
  if (points.empty()) throw std::invalid_argument("normal_fan: empty polytope rejected");
  const int d = static_cast<int>(points.front().size());
  std::vector<Vec> lifted = homogenize(points);
  Cone hom(lifted, d + 1, tol);
  // facet normals (u, c): u.p + c >= 0 on all points, = 0 on the facet
  struct Facet {
    Vec normal;               // inner normal u in R^d
    std::vector<bool> on_it;  // which points lie on the facet
  };
  std::vector<Facet> facets;
  for (const Vec& w : hom.dual_rays()) {
    Facet f;
    f.normal = w.head(d);
    double c = w(d);
    f.on_it.resize(points.size());
    for (size_t i = 0; i < points.size(); ++i)
      f.on_it[i] = std::abs(f.normal.dot(points[i]) + c) <= tol.eps_geom * std::max(1.0, lifted[i].norm());
    facets.push_back(std::move(f));
  }
  // lineality of the normal fan: directions constant on the point set
  std::vector<Vec> diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  Mat diff_span = orthonormal_span(diffs, d, tol.eps_geom);
  Mat lin = orthogonal_complement(diff_span, d);

  std::vector<std::vector<int>> face_labels = point_set_faces(points, tol);
  std::vector<Cone> cones;
  for (const std::vector<int>& labels : face_labels) {
    std::vector<Vec> gens;
    for (const Facet& f : facets) {
      bool contains_face = true;
      for (int i : labels)
        if (!f.on_it[static_cast<size_t>(i)]) {
          contains_face = false;
          break;
        }
      if (contains_face) gens.push_back(f.normal);
    }
    for (Eigen::Index j = 0; j < lin.cols(); ++j) {
      gens.push_back(lin.col(j));
      gens.push_back(-lin.col(j));
    }
    cones.emplace_back(std::move(gens), d, tol);
  }
  NormalFanResult out{Fan::from_cones(cones, tol, false), std::move(face_labels), {}};
  out.cone_of_face.reserve(cones.size());
  for (const Cone& c : cones) {
    auto idx = out.fan.find_cone(c);
    if (!idx) throw std::logic_error("normal_fan: cone lost during fan construction");
    out.cone_of_face.push_back(*idx);
  }
  return out;
}

}  // namespace toric
