#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/tolerance.hpp"

namespace toric {

class Cone;

// One face of a cone, identified by the extreme rays lying on it.
struct Face {
  std::vector<int> ray_set;  // indices into Cone::rays(), sorted
  Vec exposing;              // u in the dual cone with face = {v : u.v = 0}
  int dim = 0;
};

// A face lattice: faces ordered by dimension, minimal face (the lineality
// space) first, the whole cone last.
struct FaceLattice {
  std::vector<Face> faces;
  // face i is contained in face j
  bool leq(size_t i, size_t j) const;
};

// A polyhedral cone cone{v_1,...,v_k} in R^d, generator based.  The dual
// description (facet normals) and the lineality space are computed on
// construction.  Immutable after construction.  Intended for ambient
// dimension <= 8; the facet enumeration is combinatorial and will refuse
// larger ambient spaces.
class Cone {
 public:
  Cone(std::vector<Vec> generators, int ambient_dim, Tolerance tol = {});

  static Cone zero(int ambient_dim, Tolerance tol = {});
  static Cone full_space(int ambient_dim, Tolerance tol = {});

  int ambient_dim() const { return dim_; }
  int span_dim() const { return span_dim_; }
  int lineality_dim() const { return static_cast<int>(lineality_.cols()); }
  // dimension of the cone itself
  int dim() const { return span_dim_; }

  const std::vector<Vec>& generators() const { return gens_; }
  // extreme rays, unit length, excluding lineality directions
  const std::vector<Vec>& rays() const { return rays_; }
  // orthonormal basis of the lineality space (maximal linear subspace)
  const Mat& lineality_basis() const { return lineality_; }
  // orthonormal basis of the linear span of the cone
  const Mat& span_basis() const { return span_; }

  // unit generators of the rays of the dual cone (= inner facet normals)
  const std::vector<Vec>& dual_rays() const { return dual_rays_; }
  // orthonormal basis of span(cone)^perp, the lineality of the dual
  const Mat& dual_lineality() const { return dual_lineality_; }

  Cone dual() const;

  bool contains(const Vec& v) const;
  bool contains_relint(const Vec& v) const;
  bool contains_cone(const Cone& other) const;
  bool equals(const Cone& other) const;

  // a point in the relative interior (0 for the zero cone)
  Vec interior_sample() const;

  const FaceLattice& face_lattice() const;
  // the sub-cone spanned by a face
  Cone face_cone(const Face& f) const;
  // index of the face whose ray set matches, if any
  std::optional<size_t> find_face(const std::vector<int>& ray_set) const;

  const Tolerance& tol() const { return tol_; }

  // v and -v both in the cone
  bool in_lineality(const Vec& v) const;

 private:
  void compute_lineality_and_rays();
  void compute_dual_rays();

  int dim_;
  int span_dim_ = 0;
  Tolerance tol_;
  std::vector<Vec> gens_;
  std::vector<Vec> rays_;
  std::vector<Vec> dual_rays_;
  Mat lineality_;
  Mat span_;
  Mat dual_lineality_;
  Mat gen_matrix_;  // all generators plus +-lineality basis, for membership
  mutable std::shared_ptr<FaceLattice> lattice_;
};

// Generators of the intersection of two cones, via dual addition.
Cone intersect(const Cone& a, const Cone& b);

// Is `face` a face of `c`?  (equality with some element of the lattice)
bool is_face_of(const Cone& face, const Cone& c);

// Distance between cones as the Hausdorff distance between their sets of
// normalized extreme rays plus the lineality projector difference.
double cone_distance(const Cone& a, const Cone& b);

// w in tau_dual, tau a face of sigma: find u, l in sigma_dual with
// l in tau_perp and w = u - l.  Throws if the preconditions fail.
std::pair<Vec, Vec> decompose_over_face(const Cone& sigma, const Cone& tau,
                                        const Vec& w);

}  // namespace toric
