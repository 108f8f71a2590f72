#include "toric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

}  // namespace

std::string svg_subdivision(const PointConfig& a, const Subdivision& s) {
  if (a.ambient_dim() != 2)
    throw std::invalid_argument("svg_subdivision: only planar configurations are drawn");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Vec& p : a.points()) {
    xmin = std::min(xmin, p(0));
    xmax = std::max(xmax, p(0));
    ymin = std::min(ymin, p(1));
    ymax = std::max(ymax, p(1));
  }
  double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double size = 400.0, margin = 40.0;
  auto sx = [&](double x) { return margin + (x - xmin) / span * size; };
  auto sy = [&](double y) { return margin + size - (y - ymin) / span * size; };

  // edges: the 1-dimensional faces of each facet subconfiguration, drawn
  // between their extreme points
  std::set<std::pair<int, int>> edges;
  for (const std::vector<int>& facet : s.facets) {
    std::vector<Vec> pts;
    for (int i : facet) pts.push_back(a.point(static_cast<size_t>(i)));
    for (const std::vector<int>& f : point_set_faces(pts, a.tol())) {
      if (f.size() < 2) continue;
      std::vector<Vec> diffs;
      for (size_t j = 1; j < f.size(); ++j)
        diffs.push_back(pts[static_cast<size_t>(f[j])] - pts[static_cast<size_t>(f[0])]);
      if (orthonormal_span(diffs, 2, a.tol().eps_geom).cols() != 1) continue;
      Vec dir = diffs[0].normalized();
      int lo = f[0], hi = f[0];
      for (int j : f) {
        double t = (pts[static_cast<size_t>(j)] - pts[static_cast<size_t>(f[0])]).dot(dir);
        double tlo = (pts[static_cast<size_t>(lo)] - pts[static_cast<size_t>(f[0])]).dot(dir);
        double thi = (pts[static_cast<size_t>(hi)] - pts[static_cast<size_t>(f[0])]).dot(dir);
        if (t < tlo) lo = j;
        if (t > thi) hi = j;
      }
      int u = facet[static_cast<size_t>(lo)], v = facet[static_cast<size_t>(hi)];
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size + 2 * margin)
      << "\" height=\"" << fmt(size + 2 * margin) << "\">\n";
  for (const auto& [u, v] : edges) {
    const Vec& p = a.point(static_cast<size_t>(u));
    const Vec& q = a.point(static_cast<size_t>(v));
    out << "  <line x1=\"" << fmt(sx(p(0))) << "\" y1=\"" << fmt(sy(p(1))) << "\" x2=\""
        << fmt(sx(q(0))) << "\" y2=\"" << fmt(sy(q(1)))
        << "\" stroke=\"#336699\" stroke-width=\"2\"/>\n";
  }
  for (size_t i = 0; i < a.size(); ++i) {
    const Vec& p = a.point(i);
    out << "  <circle cx=\"" << fmt(sx(p(0))) << "\" cy=\"" << fmt(sy(p(1)))
        << "\" r=\"4\" fill=\"#cc3333\"/>\n";
    out << "  <text x=\"" << fmt(sx(p(0)) + 7) << "\" y=\"" << fmt(sy(p(1)) - 7)
        << "\" font-size=\"14\">" << a.labels()[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_distance_curve(const std::vector<double>& schedule,
                               const std::vector<double>& distances, double threshold) {
  if (schedule.size() != distances.size() || schedule.empty())
    throw std::invalid_argument("svg_distance_curve: schedule/distance mismatch");
  const double w = 480.0, h = 320.0, margin = 50.0;
  double smin = schedule.front(), smax = std::max(schedule.back(), smin + 1e-9);
  auto logd = [](double d) { return std::log10(std::max(d, 1e-16)); };
  double lmin = logd(threshold), lmax = lmin;
  for (double d : distances) {
    lmin = std::min(lmin, logd(d));
    lmax = std::max(lmax, logd(d));
  }
  lmax += 0.5;
  lmin -= 0.5;
  auto sx = [&](double s) { return margin + (s - smin) / (smax - smin) * w; };
  auto sy = [&](double l) { return margin + h - (l - lmin) / (lmax - lmin) * h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w + 2 * margin)
      << "\" height=\"" << fmt(h + 2 * margin) << "\">\n";
  out << "  <rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"#888888\"/>\n";
  out << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(sy(logd(threshold))) << "\" x2=\""
      << fmt(margin + w) << "\" y2=\"" << fmt(sy(logd(threshold)))
      << "\" stroke=\"#cc3333\" stroke-dasharray=\"6,4\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#336699\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (i) out << " ";
    out << fmt(sx(schedule[i])) << "," << fmt(sy(logd(distances[i])));
  }
  out << "\"/>\n";
  for (size_t i = 0; i < schedule.size(); ++i)
    out << "  <circle cx=\"" << fmt(sx(schedule[i])) << "\" cy=\"" << fmt(sy(logd(distances[i])))
        << "\" r=\"3\" fill=\"#336699\"/>\n";
  out << "  <text x=\"" << fmt(margin + w / 2 - 10) << "\" y=\"" << fmt(h + 2 * margin - 12)
      << "\" font-size=\"13\">s</text>\n";
  out << "  <text x=\"8\" y=\"" << fmt(margin - 14)
      << "\" font-size=\"13\">log10 d_H</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace toric
