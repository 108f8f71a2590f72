#pragma once

#include "toric/subdivision.hpp"

namespace toric {

// The torus element gamma_v, acting on characters by u -> exp(-u.v).
// v lives in the effective space of the configuration at hand.
struct TorusElement {
  Vec v;
};

// (t^a | a in A) for t = gamma_v; coordinates exp(-a.v) over the effective
// points.  Always a point of the dense orbit.
Vec phi(const PointConfig& a, const TorusElement& t);

// Orthonormal basis of the kernel of the effective-point column matrix.
// Each column kappa encodes one binomial prod z^{kappa+} = prod z^{kappa-}.
Mat relation_basis(const PointConfig& a);

// Support faces: label sets on faces of the cone spanned by the effective
// points.  For auto-lifted configurations these are the faces of conv(A).
std::vector<std::vector<int>> support_faces(const PointConfig& a);

// z is a variety point iff its support is a support face and the positive
// coordinates satisfy the face's relations (checked as log-space residuals).
bool is_member(const PointConfig& a, const Vec& z);

// The face carrying z's orbit, i.e. the labels with z_i > eps_geom.
// Rejects non-members (including the empty support).
std::vector<int> support_face(const PointConfig& a, const Vec& z);

// Tautological map sum z_i a_i over the raw points.
Vec moment(const PointConfig& a, const Vec& z);

struct BirchResult {
  Vec z;         // the unique point of w.Z_A with moment z = u
  Vec v;         // recovered cocharacter, minimal-norm in the difference span
  double residual = 0.0;
  std::vector<int> face;  // minimal face of conv(A) containing the target
};

// Inverts the moment map on w.Z_A at target u in conv(A) by damped Newton
// on the log-partition potential, restricted to the minimal face holding u.
BirchResult birch_inverse(const PointConfig& a, const Vec& w, const Vec& u);

// A weighted complex: the union over subdivision facets F of w.Z_F.
struct ToricComplex {
  Subdivision subdivision;
  Vec weights;
};

using PointCloud = std::vector<Vec>;

// Samples the complex: per facet, the deterministic skeleton (barycenters
// of all faces of the facet subconfiguration) plus n uniform points of
// conv(F), all mapped through the facet's Birch inverse.  Random streams
// are split per (seed, facet), so the result is independent of evaluation
// order.
PointCloud sample_complex(const PointConfig& a, const ToricComplex& cx, int n, uint64_t seed);

}  // namespace toric
