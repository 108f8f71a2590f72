#pragma once

#include "toric/affine_variety.hpp"

namespace toric {

// A point of the variety of the secondary fan.  The fan is never built as
// a cone list: a cone is identified by the regular subdivision its
// relative interior induces, and orbit coordinates live modulo the cone's
// linear span (the lifts piecewise-affine on the subdivision).
struct SecondaryFanPoint {
  Subdivision cone;
  Vec orbit_coord;
};

// Orthonormal basis (columns, one row per label) of the span of the
// secondary cone of s: lifts affine on every facet of s.
Mat secondary_cone_span(const PointConfig& a, const Subdivision& s);

bool secondary_points_equal(const PointConfig& a, const SecondaryFanPoint& p,
                            const SecondaryFanPoint& q);

// psi: w.Z_A -> gamma_{-log w}.epsilon in the secondary-fan variety.
SecondaryFanPoint psi_point(const PointConfig& a, const Vec& w);

// Limit along base + s.dir in the secondary-fan variety: the cone is the
// subdivision induced by dir, the orbit coordinate is base modulo its span.
SecondaryFanPoint secondary_ray_limit(const PointConfig& a, const Vec& base, const Vec& dir);

}  // namespace toric
