#include "toric/point_config.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

PointConfig::PointConfig(std::vector<std::string> labels, std::vector<Vec> points,
                         bool affine_flag, Tolerance tol)
    : dim_(points.empty() ? 0 : static_cast<int>(points.front().size())),
      affine_flag_(affine_flag),
      tol_(tol),
      labels_(std::move(labels)),
      points_(std::move(points)) {
  tol_.validate();
  if (points_.empty()) throw std::invalid_argument("PointConfig: no points");
  if (labels_.size() != points_.size())
    throw std::invalid_argument("PointConfig: label/point count mismatch");
  std::set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("PointConfig: duplicate label '" + l + "'");
  for (const Vec& p : points_)
    if (p.size() != dim_) throw std::invalid_argument("PointConfig: dimension mismatch");
  if (affine_flag_) {
    effective_ = points_;
  } else {
    for (const Vec& p : points_) {
      Vec q(dim_ + 1);
      q.head(dim_) = p;
      q(dim_) = 1.0;
      effective_.push_back(std::move(q));
    }
  }
}

int PointConfig::label_index(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("PointConfig: unknown label '" + label + "'");
}

double PointConfig::diameter() const {
  double d = 0.0;
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      d = std::max(d, (points_[i] - points_[j]).norm());
  return d;
}

bool detect_affine(const std::vector<Vec>& points, Tolerance tol) {
  if (points.empty()) return false;
  // least-squares solve of p_i . u = 1 for all i
  Mat a(points.size(), points.front().size());
  for (size_t i = 0; i < points.size(); ++i) a.row(i) = points[i].transpose();
  Vec rhs = Vec::Ones(static_cast<Eigen::Index>(points.size()));
  Vec u = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  return (a * u - rhs).lpNorm<Eigen::Infinity>() <= tol.eps_geom * 1e2;
}

std::vector<std::vector<int>> config_faces(const PointConfig& a) {
  return point_set_faces(a.points(), a.tol());
}

}  // namespace toric
