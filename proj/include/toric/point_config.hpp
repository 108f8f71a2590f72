#pragma once

#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

// A labeled point configuration in M.  Labels are unique; points may
// coincide.  If affine_flag is false the points are auto-lifted (an extra
// coordinate 1 is appended) whenever a construction needs the points on an
// affine hyperplane off the origin.
class PointConfig {
 public:
  PointConfig(std::vector<std::string> labels, std::vector<Vec> points,
              bool affine_flag, Tolerance tol = {});

  size_t size() const { return points_.size(); }
  int ambient_dim() const { return dim_; }
  bool affine() const { return affine_flag_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& point(size_t i) const { return points_.at(i); }
  const Tolerance& tol() const { return tol_; }

  // raw points if affine_flag, else points with coordinate 1 appended
  const std::vector<Vec>& effective_points() const { return effective_; }
  int effective_dim() const { return affine_flag_ ? dim_ : dim_ + 1; }

  int label_index(const std::string& label) const;  // throws if unknown
  double diameter() const;

 private:
  int dim_;
  bool affine_flag_;
  Tolerance tol_;
  std::vector<std::string> labels_;
  std::vector<Vec> points_;
  std::vector<Vec> effective_;
};

// Do all points lie on a common affine hyperplane u.p = r with r != 0?
bool detect_affine(const std::vector<Vec>& points, Tolerance tol = {});

// Label-index sets of points lying on each face of conv(points), the full
// set included, sorted by size then lexicographically.
std::vector<std::vector<int>> config_faces(const PointConfig& a);

}  // namespace toric
