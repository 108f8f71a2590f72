#pragma once

#include <vector>

#include "toric/fan.hpp"

namespace toric {

// A polytope given by its vertices (extreme points); redundant input
// points are dropped on construction.
class Polytope {
 public:
  Polytope(std::vector<Vec> points, Tolerance tol = {});

  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Tolerance& tol() const { return tol_; }

 private:
  int dim_;
  Tolerance tol_;
  std::vector<Vec> vertices_;
};

// Label sets of points lying on each face of conv(points), the full set
// included, sorted by size then lexicographically.  Points that are not
// vertices still appear in the faces whose convex hull contains them.
std::vector<std::vector<int>> point_set_faces(const std::vector<Vec>& points, Tolerance tol = {});

// Label sets of points lying on each nonzero face of cone(points),
// including the full set.  The empty face is omitted.
std::vector<std::vector<int>> cone_point_faces(const std::vector<Vec>& points, Tolerance tol = {});

struct NormalFanResult {
  Fan fan;
  std::vector<std::vector<int>> face_labels;  // faces of the point set
  std::vector<size_t> cone_of_face;           // fan index of each face's normal cone
};

// Inner normal fan: one cone per face F, sigma_F = { v : F minimizes <.,v> }.
NormalFanResult normal_fan(const std::vector<Vec>& points, Tolerance tol = {});

inline NormalFanResult normal_fan(const Polytope& p) { return normal_fan(p.vertices(), p.tol()); }

}  // namespace toric
