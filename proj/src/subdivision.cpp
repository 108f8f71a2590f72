#include "toric/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "toric/cone.hpp"

namespace toric {

namespace {

void sort_face_system(std::vector<std::vector<int>>& faces) {
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

double simplex_volume(const PointConfig& a, const std::vector<int>& facet) {
  const int k = static_cast<int>(facet.size()) - 1;
  if (k <= 0) return 1.0;
  Mat d(a.ambient_dim(), k);
  for (int i = 1; i <= k; ++i)
    d.col(i - 1) = a.point(static_cast<size_t>(facet[static_cast<size_t>(i)])) -
                   a.point(static_cast<size_t>(facet[0]));
  double gram = (d.transpose() * d).determinant();
  if (gram < 0.0) gram = 0.0;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return std::sqrt(gram) / fact;
}

}  // namespace

Subdivision regular_subdivision(const PointConfig& a, const Vec& lift) {
  if (lift.size() != static_cast<Eigen::Index>(a.size()))
    throw std::invalid_argument("regular_subdivision: lift size mismatch");
  const int d = a.ambient_dim();
  // homogenized lifted points plus the vertical up-ray: bounded faces of
  // conv{(a, lift_a)} + R>=up are exactly the lower faces
  std::vector<Vec> gens;
  for (size_t i = 0; i < a.size(); ++i) {
    Vec g(d + 2);
    g.head(d) = a.point(i);
    g(d) = lift(static_cast<Eigen::Index>(i));
    g(d + 1) = 1.0;
    gens.push_back(std::move(g));
  }
  Vec up = Vec::Zero(d + 2);
  up(d) = 1.0;
  std::vector<Vec> all = gens;
  all.push_back(up);
  Cone c(all, d + 2, a.tol());

  Subdivision s;
  s.defining_lift = lift;
  for (const Face& f : c.face_lattice().faces) {
    Cone fc = c.face_cone(f);
    if (fc.contains(up)) continue;  // unbounded (vertical) face
    std::vector<int> labels;
    for (size_t i = 0; i < gens.size(); ++i)
      if (fc.contains(gens[i])) labels.push_back(static_cast<int>(i));
    if (labels.empty()) continue;
    if (std::find(s.faces.begin(), s.faces.end(), labels) == s.faces.end())
      s.faces.push_back(std::move(labels));
  }
  sort_face_system(s.faces);
  for (const std::vector<int>& f : s.faces) {
    bool maximal = true;
    for (const std::vector<int>& g : s.faces)
      if (f != g && subset_of(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) s.facets.push_back(f);
  }
  sort_face_system(s.facets);
  return s;
}

void validate_subdivision(const PointConfig& a, const Subdivision& s) {
  if (s.facets.empty()) throw std::invalid_argument("Subdivision: no facets");
  const double eps = a.tol().eps_geom;
  auto facet_points = [&](const std::vector<int>& f) {
    std::vector<Vec> pts;
    for (int i : f) pts.push_back(a.point(static_cast<size_t>(i)));
    return pts;
  };
  // cover: random convex combinations of A land in some facet hull
  std::mt19937_64 rng(0xc0feu);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 64; ++trial) {
    Vec u = Vec::Zero(a.ambient_dim());
    double total = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      double w = unif(rng);
      u += w * a.point(i);
      total += w;
    }
    u /= total;
    bool covered = false;
    for (const std::vector<int>& f : s.facets)
      if (in_convex_hull(facet_points(f), u, eps * 1e2)) {
        covered = true;
        break;
      }
    if (!covered) throw std::invalid_argument("Subdivision: facets do not cover conv(A)");
  }
  // pairwise: facet hulls meet only along the hull of their common labels
  for (size_t i = 0; i < s.facets.size(); ++i)
    for (size_t j = i + 1; j < s.facets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(s.facets[i].begin(), s.facets[i].end(), s.facets[j].begin(),
                            s.facets[j].end(), std::back_inserter(common));
      std::vector<Vec> pi = facet_points(s.facets[i]);
      std::vector<Vec> pj = facet_points(s.facets[j]);
      std::vector<Vec> pc = facet_points(common);
      for (int trial = 0; trial < 32; ++trial) {
        Vec u = Vec::Zero(a.ambient_dim());
        double total = 0.0;
        for (const Vec& p : pi) {
          double w = 0.05 + unif(rng);
          u += w * p;
          total += w;
        }
        u /= total;
        if (in_convex_hull(pj, u, eps) && !(common.empty() ? false : in_convex_hull(pc, u, eps * 1e2)))
          throw std::invalid_argument("Subdivision: facets overlap beyond a common face");
      }
      if (!common.empty()) {
        // the common label set must be a face of both facet subconfigs
        for (const std::vector<int>& f : {s.facets[i], s.facets[j]}) {
          std::vector<std::vector<int>> local = point_set_faces(facet_points(f), a.tol());
          std::vector<int> relabeled;
          for (int c : common)
            relabeled.push_back(static_cast<int>(
                std::find(f.begin(), f.end(), c) - f.begin()));
          std::sort(relabeled.begin(), relabeled.end());
          if (std::find(local.begin(), local.end(), relabeled) == local.end())
            throw std::invalid_argument("Subdivision: facet intersection is not a common face");
        }
      }
    }
}

bool is_triangulation(const Subdivision& s, const PointConfig& a) {
  for (const std::vector<int>& f : s.facets) {
    if (f.empty()) return false;
    std::vector<Vec> diffs;
    for (size_t i = 1; i < f.size(); ++i)
      diffs.push_back(a.point(static_cast<size_t>(f[i])) - a.point(static_cast<size_t>(f[0])));
    Mat span = orthonormal_span(diffs, a.ambient_dim(), a.tol().eps_geom);
    if (span.cols() != static_cast<Eigen::Index>(f.size()) - 1) return false;
  }
  return true;
}

Vec gkz_vertex(const PointConfig& a, const Subdivision& t) {
  if (!is_triangulation(t, a)) throw std::invalid_argument("gkz_vertex: not a triangulation");
  Vec out = Vec::Zero(static_cast<Eigen::Index>(a.size()));
  for (const std::vector<int>& f : t.facets) {
    double vol = simplex_volume(a, f);
    for (int i : f) out(i) += vol;
  }
  return out;
}

bool same_secondary_cone(const PointConfig& a, const Vec& lam, const Vec& mu) {
  return regular_subdivision(a, lam).same_as(regular_subdivision(a, mu));
}

bool refines(const Subdivision& s1, const Subdivision& s2) {
  for (const std::vector<int>& f : s1.facets) {
    bool inside = false;
    for (const std::vector<int>& g : s2.facets)
      if (subset_of(f, g)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Mat secondary_lineality(const PointConfig& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  std::vector<Vec> cols;
  for (int k = 0; k < a.ambient_dim(); ++k) {
    Vec c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = a.point(static_cast<size_t>(i))(k);
    cols.push_back(std::move(c));
  }
  cols.push_back(Vec::Ones(n));
  return orthonormal_span(cols, static_cast<int>(n), a.tol().eps_geom);
}

namespace {

// directions in the orthogonal complement of the secondary lineality
std::vector<Vec> oracle_directions(const Mat& basis) {
  const Eigen::Index m = basis.cols();
  std::vector<Vec> dirs;
  if (m == 1) {
    dirs.push_back(basis.col(0));
    dirs.push_back(-basis.col(0));
  } else if (m == 2) {
    for (int k = 0; k < 1440; ++k) {
      double t = 2.0 * M_PI * k / 1440.0;
      dirs.push_back(std::cos(t) * basis.col(0) + std::sin(t) * basis.col(1));
    }
  } else {
    for (int p = 0; p <= 48; ++p) {
      double phi = M_PI * p / 48.0;
      int nq = std::max(1, static_cast<int>(std::lround(96 * std::sin(phi))));
      for (int q = 0; q < nq; ++q) {
        double th = 2.0 * M_PI * q / nq;
        Vec d = std::cos(phi) * basis.col(2) +
                std::sin(phi) * (std::cos(th) * basis.col(0) + std::sin(th) * basis.col(1));
        dirs.push_back(std::move(d));
      }
    }
  }
  return dirs;
}

struct SubdivisionSet {
  std::vector<Subdivision> subs;
  std::vector<Vec> reps;  // unit-norm representative lift (zero for trivial)

  // rejects half-merged face systems computed too close to a wall
  bool add(const PointConfig& a, Subdivision s, Vec rep) {
    for (const Subdivision& have : subs)
      if (have.same_as(s)) return false;
    try {
      validate_subdivision(a, s);
    } catch (const std::invalid_argument&) {
      return false;
    }
    subs.push_back(std::move(s));
    reps.push_back(std::move(rep));
    return true;
  }
};

// A copy of the configuration with a loosened eps_geom, for evaluating
// lifts sitting on (or numerically near) secondary-fan walls.
PointConfig coarse_copy(const PointConfig& a) {
  Tolerance t = a.tol();
  t.eps_geom = std::max(t.eps_geom, 1e-5);
  t.eps_opt = std::min(t.eps_opt, t.eps_geom);
  return PointConfig(a.labels(), a.points(), a.affine(), t);
}

}  // namespace

std::vector<Subdivision> exhaustive_regular_subdivisions(const PointConfig& a) {
  if (a.size() > 6 || a.ambient_dim() > 2)
    throw std::invalid_argument("exhaustive_regular_subdivisions: configuration too large");
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Mat lin = secondary_lineality(a);
  Mat basis = orthogonal_complement(lin, static_cast<int>(n));
  SubdivisionSet found;
  found.add(a, regular_subdivision(a, Vec::Zero(n)), Vec::Zero(n));
  if (basis.cols() > 3)
    throw std::invalid_argument("exhaustive_regular_subdivisions: secondary fan too large");
  // chamber pass
  size_t first_chamber = found.subs.size();
  for (const Vec& d : oracle_directions(basis)) found.add(a, regular_subdivision(a, d), d);
  // wall pass: bisect between distinct chambers, then evaluate the flip
  // point with a loosened tolerance so the adjacent facets merge cleanly
  PointConfig coarse = coarse_copy(a);
  size_t n_chambers = found.subs.size();
  for (size_t i = first_chamber; i < n_chambers; ++i)
    for (size_t j = i + 1; j < n_chambers; ++j) {
      Vec lo = found.reps[i], hi = found.reps[j];
      if ((lo + hi).norm() < 1e-9) continue;  // antipodal: segment passes through 0
      double t0 = 0.0, t1 = 1.0;
      for (int it = 0; it < 44; ++it) {
        double tm = 0.5 * (t0 + t1);
        Vec mid = (1.0 - tm) * lo + tm * hi;
        if (regular_subdivision(a, mid).same_as(found.subs[i]))
          t0 = tm;
        else
          t1 = tm;
      }
      Vec wall = (1.0 - t1) * lo + t1 * hi;
      found.add(coarse, regular_subdivision(coarse, wall), wall);
    }
  return found.subs;
}

TriangulationList enumerate_regular_triangulations(const PointConfig& a, uint64_t budget,
                                                   uint64_t seed) {
  if (budget == 0) throw std::invalid_argument("enumerate_regular_triangulations: zero budget");
  if (a.size() > 12)
    throw std::invalid_argument("enumerate_regular_triangulations: configuration too large");
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Mat lin = secondary_lineality(a);
  Mat basis = orthogonal_complement(lin, static_cast<int>(n));
  const Eigen::Index m = basis.cols();

  TriangulationList out;
  out.budget = budget;
  std::vector<Vec> reps;
  uint64_t used = 0;
  auto try_lift = [&](const Vec& lam) {
    ++used;
    Subdivision s = regular_subdivision(a, lam);
    if (!is_triangulation(s, a)) return;
    for (const Subdivision& have : out.triangulations)
      if (have.same_as(s)) return;
    try {
      validate_subdivision(a, s);
    } catch (const std::invalid_argument&) {
      return;  // near-wall artifact
    }
    out.triangulations.push_back(std::move(s));
    reps.push_back(lam);
  };

  try_lift(Vec::Zero(n));
  if (m > 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    uint64_t sample_budget = budget - std::min<uint64_t>(budget, budget / 3);
    while (used < sample_budget) {
      Vec g(m);
      for (Eigen::Index k = 0; k < m; ++k) g(k) = gauss(rng);
      if (g.norm() < 1e-9) continue;
      try_lift(basis * g.normalized());
    }
    // probe near boundaries between the cones found so far
    for (size_t pass = 0; pass < 4 && used < budget; ++pass) {
      size_t count = reps.size();
      for (size_t i = 0; i < count && used < budget; ++i)
        for (size_t j = i + 1; j < count && used < budget; ++j)
          for (double t : {0.5, 0.25, 0.75}) {
            if (used >= budget) break;
            Vec mix = (1.0 - t) * reps[i] + t * reps[j];
            if (mix.norm() > 1e-9) try_lift(mix.normalized() * 1.0);
          }
      if (reps.size() == count) break;
    }
  }

  // deterministic order
  std::vector<size_t> order(out.triangulations.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return out.triangulations[i].facets < out.triangulations[j].facets;
  });
  std::vector<Subdivision> sorted;
  for (size_t i : order) sorted.push_back(std::move(out.triangulations[i]));
  out.triangulations = std::move(sorted);
  for (const Subdivision& t : out.triangulations) out.gkz.push_back(gkz_vertex(a, t));

  if (a.size() <= 6 && a.ambient_dim() <= 2) {
    std::vector<std::vector<std::vector<int>>> oracle;
    for (const Subdivision& s : exhaustive_regular_subdivisions(a))
      if (is_triangulation(s, a)) oracle.push_back(s.facets);
    std::sort(oracle.begin(), oracle.end());
    std::vector<std::vector<std::vector<int>>> got;
    for (const Subdivision& t : out.triangulations) got.push_back(t.facets);
    out.exhaustive = (oracle == got);
  }
  return out;
}

}  // namespace toric
