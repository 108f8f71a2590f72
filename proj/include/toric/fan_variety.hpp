#pragma once

#include <optional>

#include "toric/affine_variety.hpp"
#include "toric/fan.hpp"

namespace toric {

// A point gamma_v.x_sigma of the toric variety of a fan, stored as its
// orbit chart: the cone and an orbit coordinate canonicalized to the
// orthogonal complement of the cone's span.
struct FanPoint {
  size_t cone_id = 0;
  Vec orbit_coord;
};

// Projection of v to the complement of span(cone sigma).
Vec canonicalize(const Fan& f, size_t sigma, const Vec& v);

bool fan_points_equal(const Fan& f, const FanPoint& p, const FanPoint& q);

// x_sigma = the idempotent of the orbit attached to sigma.
FanPoint distinguished_point(const Fan& f, size_t sigma);

// The point epsilon of the dense orbit (distinguished point of the
// minimal cone).
FanPoint epsilon(const Fan& f);

FanPoint act(const Fan& f, const TorusElement& t, const FanPoint& p);

// The point as a homomorphism on the dual cone: exp(-u.v) when u kills
// the cone, 0 on the rest of the dual.  Throws if u is outside the dual.
double evaluate(const Fan& f, const FanPoint& p, const Vec& u);

// Limit of gamma_{sv}.p as s grows, computed in the star fan of p's cone;
// absent when the direction leaves the support of the star.
std::optional<FanPoint> one_param_limit(const Fan& f, const FanPoint& p, const Vec& v);

// Limit along the affine ray base + s.dir: gamma_base.x_tau for tau the
// minimal cone containing dir; absent when dir is outside the support.
std::optional<FanPoint> ray_sequence_limit(const Fan& f, const Vec& base, const Vec& dir);

// Y_Sigma with an absorbing zero adjoined; nullopt encodes the zero.
using MonoidElement = std::optional<FanPoint>;

// Product in the smallest cone containing both factors' cones; zero when
// no such cone exists or either factor is zero.
MonoidElement monoid_mul(const Fan& f, const MonoidElement& x, const MonoidElement& y);

// Image of p under a map of fans given by the matrix psi (columns act on
// source coordinates).  Throws, naming the offending cone, if some cone
// of f does not land inside a cone of f2.
FanPoint fan_map_apply(const Mat& psi, const Fan& f, const Fan& f2, const FanPoint& p);

struct RecoverReport {
  // per limit class: the cone reached (nullopt for no limit) and how many
  // sampled directions landed there
  std::vector<std::pair<std::optional<size_t>, size_t>> groups;
  size_t mismatches = 0;  // directions whose limit disagrees with their cone
  size_t absent = 0;
};

// Samples directions, takes limits from epsilon, and checks that the limit
// classes are exactly the relative interiors of the cones.
RecoverReport recover_fan(const Fan& f, int n_dirs, uint64_t seed);

// The projective embedding of a point of the normal-fan variety of A:
// coordinates exp(-(a - f).v) over the face attached to p's cone, zero
// elsewhere, normalized to the simplex.  Independent of the choice of f.
Vec embed_simplex(const PointConfig& a, const NormalFanResult& nf, const FanPoint& p);

// Same map with the reference label forced; base_label must lie on the face
// attached to p's cone.
Vec embed_simplex(const PointConfig& a, const NormalFanResult& nf, const FanPoint& p,
                  int base_label);

}  // namespace toric
