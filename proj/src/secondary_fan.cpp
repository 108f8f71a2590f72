#include "toric/secondary_fan.hpp"

#include <stdexcept>

namespace toric {

Mat secondary_cone_span(const PointConfig& a, const Subdivision& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  // constraints: for each facet F, lambda|F must be affine on F, i.e.
  // orthogonal to the kernel of F's effective columns
  std::vector<Vec> rows;
  for (const std::vector<int>& f : s.facets) {
    Mat cols(a.effective_dim(), static_cast<Eigen::Index>(f.size()));
    for (size_t j = 0; j < f.size(); ++j)
      cols.col(static_cast<Eigen::Index>(j)) = a.effective_points()[static_cast<size_t>(f[j])];
    Mat ker = kernel_basis(cols, a.tol().eps_geom);
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
      Vec row = Vec::Zero(n);
      for (size_t j = 0; j < f.size(); ++j) row(f[j]) = ker(static_cast<Eigen::Index>(j), k);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Mat::Identity(n, n);
  Mat constraint(static_cast<Eigen::Index>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i)
    constraint.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return kernel_basis(constraint, a.tol().eps_geom);
}

bool secondary_points_equal(const PointConfig& a, const SecondaryFanPoint& p,
                            const SecondaryFanPoint& q) {
  if (!p.cone.same_as(q.cone)) return false;
  Mat span = secondary_cone_span(a, p.cone);
  Vec dp = p.orbit_coord - project_onto(span, p.orbit_coord);
  Vec dq = q.orbit_coord - project_onto(span, q.orbit_coord);
  return (dp - dq).norm() <= a.tol().eps_geom * 1e2;
}

SecondaryFanPoint psi_point(const PointConfig& a, const Vec& w) {
  if (w.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("psi_point: weight count mismatch");
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!(w(i) > 0.0)) throw std::invalid_argument("psi_point: weights must be positive");
  Vec base = -w.array().log();
  return secondary_ray_limit(a, base, Vec::Zero(w.size()));
}

SecondaryFanPoint secondary_ray_limit(const PointConfig& a, const Vec& base, const Vec& dir) {
  SecondaryFanPoint out;
  out.cone = regular_subdivision(a, dir);
  Mat span = secondary_cone_span(a, out.cone);
  out.orbit_coord = base - project_onto(span, base);
  return out;
}

}  // namespace toric
