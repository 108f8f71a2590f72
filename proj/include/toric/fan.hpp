#pragma once

#include <optional>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

// A finite collection of cones closed under taking faces, pairwise
// intersecting in common faces, with a common lineality space.
class Fan {
 public:
  // Builds the face closure of the given cones.  With validate=true the
  // fan axioms (common faces, common lineality) are checked and violations
  // throw; construction from a normal fan can skip the quadratic check.
  static Fan from_cones(std::vector<Cone> cones, Tolerance tol = {}, bool validate = true);

  int ambient_dim() const { return dim_; }
  size_t size() const { return cones_.size(); }
  const Cone& cone(size_t i) const { return cones_.at(i); }
  const std::vector<Cone>& cones() const { return cones_; }
  const Mat& lineality() const { return lineality_; }
  size_t minimal_cone() const { return minimal_; }
  const Tolerance& tol() const { return tol_; }

  // index of the unique cone whose relative interior contains v
  std::optional<size_t> minimal_containing_cone(const Vec& v) const;

  // index of a cone equal to c, if present
  std::optional<size_t> find_cone(const Cone& c) const;

  // is cone i a face of cone j?
  bool face_of(size_t i, size_t j) const { return face_of_[i][j]; }

  // Star(sigma) = { <sigma> + tau | sigma a face of tau }, a fan with
  // lineality <sigma>.  The returned pairs map star cones back to the
  // cones tau of this fan they came from.
  std::pair<Fan, std::vector<size_t>> star(size_t sigma) const;

  // smallest cone containing both cones i and j, if any
  std::optional<size_t> smallest_common_cone(size_t i, size_t j) const;

  // Deterministic facet-pairing completeness test plus randomized
  // direction probing.
  bool is_complete() const;

  void validate() const;

 private:
  Fan() = default;
  int dim_ = 0;
  Tolerance tol_;
  std::vector<Cone> cones_;
  Mat lineality_;
  size_t minimal_ = 0;
  std::vector<std::vector<bool>> face_of_;
};

}  // namespace toric
