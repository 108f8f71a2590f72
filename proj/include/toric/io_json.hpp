#pragma once

#include <string>

#include "json.hpp"
#include "toric/fan_variety.hpp"
#include "toric/hausdorff.hpp"

namespace toric {

// insertion-ordered so that outputs are stable byte-for-byte
using Json = nlohmann::ordered_json;

// {"points": {"label": [x, ...], ...}, "affine": bool}
PointConfig point_config_from_json(const Json& j, Tolerance tol = {});

// {"cones": [{"generators": [[...], ...]}, ...]}; face closure is computed
Fan fan_from_json(const Json& j, Tolerance tol = {});

// {"label": value, ...}; every label of the configuration must appear
Vec labeled_values_from_json(const Json& j, const PointConfig& a, const char* what);

Json vec_json(const Vec& v);
Json labeled_json(const Vec& v, const PointConfig& a);

Json subdivision_json(const Subdivision& s, const PointConfig& a);
Json triangulation_list_json(const TriangulationList& list, const PointConfig& a);
Json birch_json(const BirchResult& b, const PointConfig& a);
Json degeneration_json(const DegenerationReport& r, const PointConfig& a);

// one row per point, columns in label order
std::string cloud_csv(const PointCloud& cloud, const PointConfig& a);

std::string read_file(const std::string& path);
// write to a temp file in the same directory, then rename into place
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace toric
