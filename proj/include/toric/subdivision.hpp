#pragma once

#include <cstdint>
#include <optional>

#include "toric/point_config.hpp"

namespace toric {

// A polyhedral subdivision of conv(A), stored as the face system of label
// index sets.  Faces are sorted by size then lexicographically; facets are
// the inclusion-maximal faces.
struct Subdivision {
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> facets;
  std::optional<Vec> defining_lift;

  bool same_as(const Subdivision& other) const { return facets == other.facets; }
};

// The subdivision S(lift) induced by the lower faces of the lifted polytope
// conv{(a, lift_a)}.  Faces exposed only by vertical normals are excluded.
Subdivision regular_subdivision(const PointConfig& a, const Vec& lift);

// Checks the subdivision axioms by sampling: facets cover conv(A) and
// pairwise facet intersections are common faces.  Throws on violation.
void validate_subdivision(const PointConfig& a, const Subdivision& s);

// Every facet is the vertex set of a simplex.
bool is_triangulation(const Subdivision& s, const PointConfig& a);

// Per-label sum of facet volumes over the facets containing the label
// (Euclidean volume within the affine span).  Requires a triangulation.
Vec gkz_vertex(const PointConfig& a, const Subdivision& t);

bool same_secondary_cone(const PointConfig& a, const Vec& lam, const Vec& mu);

// Every facet of s1 is contained in some facet of s2.
bool refines(const Subdivision& s1, const Subdivision& s2);

// Orthonormal basis (columns, one row per label) of the lineality space of
// the secondary fan: lifts of the form lam_a = a.v + c.
Mat secondary_lineality(const PointConfig& a);

struct TriangulationList {
  std::vector<Subdivision> triangulations;
  std::vector<Vec> gkz;
  uint64_t budget = 0;
  bool exhaustive = false;  // set when the grid oracle is applicable and agreed
};

// Random lift sampling plus boundary perturbation.  Deterministic for a
// fixed seed; the report may be incomplete (budget recorded).
TriangulationList enumerate_regular_triangulations(const PointConfig& a, uint64_t budget,
                                                   uint64_t seed);

// Exhaustive small-scale enumeration of distinct regular subdivisions by a
// fine direction grid over lift space modulo the secondary lineality, with
// wall subdivisions located by bisection between adjacent chambers.
// Intended for |A| <= 6 in ambient dimension <= 2.
std::vector<Subdivision> exhaustive_regular_subdivisions(const PointConfig& a);

}  // namespace toric
