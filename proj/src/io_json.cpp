#include "toric/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw std::runtime_error("expected a number at " + where);
  return j.get<double>();
}

}  // namespace

PointConfig point_config_from_json(const Json& j, Tolerance tol) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_object())
    throw std::runtime_error("configuration must be an object with a \"points\" object");
  std::vector<std::string> labels;
  std::vector<Vec> points;
  for (const auto& [label, coords] : j["points"].items()) {
    if (!coords.is_array() || coords.empty())
      throw std::runtime_error("point \"" + label + "\" must be a nonempty array");
    Vec p(static_cast<Eigen::Index>(coords.size()));
    for (size_t k = 0; k < coords.size(); ++k)
      p(static_cast<Eigen::Index>(k)) = number_at(coords[k], "point \"" + label + "\"");
    labels.push_back(label);
    points.push_back(std::move(p));
  }
  bool affine = j.value("affine", false);
  if (j.contains("affine") && !j["affine"].is_boolean())
    throw std::runtime_error("\"affine\" must be a boolean");
  return PointConfig(std::move(labels), std::move(points), affine, tol);
}

Fan fan_from_json(const Json& j, Tolerance tol) {
  if (!j.is_object() || !j.contains("cones") || !j["cones"].is_array() || j["cones"].empty())
    throw std::runtime_error("fan must be an object with a nonempty \"cones\" array");
  std::vector<Cone> cones;
  int dim = -1;
  for (size_t c = 0; c < j["cones"].size(); ++c) {
    const Json& jc = j["cones"][c];
    if (!jc.is_object() || !jc.contains("generators") || !jc["generators"].is_array())
      throw std::runtime_error("cone " + std::to_string(c) + " must have a \"generators\" array");
    std::vector<Vec> gens;
    for (const Json& jg : jc["generators"]) {
      if (!jg.is_array() || jg.empty())
        throw std::runtime_error("cone " + std::to_string(c) + ": generator must be an array");
      Vec g(static_cast<Eigen::Index>(jg.size()));
      for (size_t k = 0; k < jg.size(); ++k)
        g(static_cast<Eigen::Index>(k)) = number_at(jg[k], "cone " + std::to_string(c));
      if (dim < 0) dim = static_cast<int>(g.size());
      if (g.size() != dim)
        throw std::runtime_error("cone " + std::to_string(c) + ": mixed generator dimensions");
      gens.push_back(std::move(g));
    }
    if (dim < 0) throw std::runtime_error("fan: no generators anywhere");
    cones.emplace_back(std::move(gens), dim, tol);
  }
  return Fan::from_cones(std::move(cones), tol);
}

Vec labeled_values_from_json(const Json& j, const PointConfig& a, const char* what) {
  if (!j.is_object()) throw std::runtime_error(std::string(what) + " must be an object");
  Vec out(static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    const std::string& label = a.labels()[i];
    if (!j.contains(label))
      throw std::runtime_error(std::string(what) + ": missing label \"" + label + "\"");
    out(static_cast<Eigen::Index>(i)) = number_at(j[label], std::string(what));
  }
  if (j.size() != a.size())
    throw std::runtime_error(std::string(what) + ": unknown extra labels present");
  return out;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json labeled_json(const Vec& v, const PointConfig& a) {
  Json out = Json::object();
  for (size_t i = 0; i < a.size(); ++i) out[a.labels()[i]] = v(static_cast<Eigen::Index>(i));
  return out;
}

namespace {

Json face_labels_json(const std::vector<std::vector<int>>& faces, const PointConfig& a) {
  Json out = Json::array();
  for (const std::vector<int>& f : faces) {
    Json jf = Json::array();
    for (int i : f) jf.push_back(a.labels()[static_cast<size_t>(i)]);
    out.push_back(std::move(jf));
  }
  return out;
}

}  // namespace

Json subdivision_json(const Subdivision& s, const PointConfig& a) {
  Json out;
  out["faces"] = face_labels_json(s.faces, a);
  out["facets"] = face_labels_json(s.facets, a);
  out["triangulation"] = is_triangulation(s, a);
  return out;
}

Json triangulation_list_json(const TriangulationList& list, const PointConfig& a) {
  Json out;
  out["count"] = list.triangulations.size();
  out["budget"] = list.budget;
  out["complete"] = list.exhaustive;
  Json items = Json::array();
  for (size_t i = 0; i < list.triangulations.size(); ++i) {
    Json item;
    item["facets"] = face_labels_json(list.triangulations[i].facets, a);
    item["gkz"] = labeled_json(list.gkz[i], a);
    items.push_back(std::move(item));
  }
  out["triangulations"] = std::move(items);
  return out;
}

Json birch_json(const BirchResult& b, const PointConfig& a) {
  Json out;
  out["z"] = labeled_json(b.z, a);
  out["v"] = vec_json(b.v);
  out["residual"] = b.residual;
  Json face = Json::array();
  for (int i : b.face) face.push_back(a.labels()[static_cast<size_t>(i)]);
  out["face"] = std::move(face);
  return out;
}

Json degeneration_json(const DegenerationReport& r, const PointConfig& a) {
  Json out;
  out["schedule"] = Json::array();
  for (double s : r.schedule) out["schedule"].push_back(s);
  out["distances"] = Json::array();
  for (double d : r.distances) out["distances"].push_back(d);
  out["predicted_facets"] = face_labels_json(r.predicted.facets, a);
  out["threshold"] = r.threshold;
  out["sampling_constant"] = r.sampling_constant;
  out["final_distance"] = r.final_distance;
  out["monotone"] = r.monotone;
  out["cone_consistent"] = r.cone_consistent;
  out["verdict"] = r.verdict ? "pass" : "fail";
  return out;
}

std::string cloud_csv(const PointCloud& cloud, const PointConfig& a) {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a.labels()[i];
  }
  out << "\n";
  char buf[64];
  for (const Vec& z : cloud) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (i) out << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", z(i));
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace toric
