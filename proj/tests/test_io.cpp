#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "toric/io_json.hpp"
#include "toric/svg.hpp"

using namespace toric;

namespace {

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}

PointConfig line3() { return PointConfig({"0", "1", "2"}, {v1(0), v1(1), v1(2)}, false); }

Vec vec(std::initializer_list<double> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("point configuration round trip") {
  Json j = Json::parse(R"({"points": {"a": [0, 1], "b": [2, 3]}, "affine": false})");
  PointConfig a = point_config_from_json(j);
  CHECK(a.size() == 2);
  CHECK(a.ambient_dim() == 2);
  CHECK(a.labels() == std::vector<std::string>{"a", "b"});
  CHECK((a.point(1) - vec({2, 3})).norm() == 0.0);

  CHECK_THROWS(point_config_from_json(Json::parse(R"({"points": {}})")));
  // ragged coordinate lists
  CHECK_THROWS(point_config_from_json(
      Json::parse(R"({"points": {"a": [0], "b": [1, 2]}, "affine": false})")));
}

TEST_CASE("fan from generators computes the face closure") {
  Json j = Json::parse(R"({"cones": [{"generators": [[1, 0], [0, 1]]}]})");
  Fan f = fan_from_json(j);
  CHECK(f.size() == 4);  // quadrant, two rays, origin
  CHECK_THROWS(fan_from_json(Json::parse(R"({"cones": []})")));
}

TEST_CASE("labeled values follow label order") {
  PointConfig a = line3();
  Vec w = labeled_values_from_json(Json::parse(R"({"2": 3, "0": 1, "1": 2})"), a, "weights");
  CHECK((w - vec({1, 2, 3})).norm() == 0.0);
  CHECK_THROWS(labeled_values_from_json(Json::parse(R"({"0": 1})"), a, "weights"));
  CHECK_THROWS(labeled_values_from_json(Json::parse(R"({"0": 1, "1": 2, "x": 3})"), a, "weights"));
}

TEST_CASE("numbers survive serialization bit for bit") {
  Vec v = vec({1.0 / 3.0, 1e-17, -2.5});
  Json j = vec_json(v);
  std::string text = j.dump();
  Json back = Json::parse(text);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double x = back[static_cast<size_t>(i)].get<double>();
    CHECK(x == v(i));
  }
}

TEST_CASE("subdivision serialization is stable") {
  PointConfig a = line3();
  Subdivision s = regular_subdivision(a, vec({0, -1, 0}));
  Json j = subdivision_json(s, a);
  CHECK(j["triangulation"] == true);
  CHECK(j["facets"].size() == 2);
  CHECK(j.dump() == subdivision_json(s, a).dump());
}

TEST_CASE("birch report carries the solution") {
  PointConfig a = line3();
  BirchResult b = birch_inverse(a, vec({1, 1, 1}), v1(1.5));
  Json j = birch_json(b, a);
  CHECK(j["z"].size() == 3);
  CHECK(j["residual"].get<double>() <= 1e-9);
  CHECK(j.dump() == birch_json(b, a).dump());
}

TEST_CASE("csv has one labeled column per point") {
  PointConfig a = line3();
  PointCloud cloud = {vec({1, 0, 0}), vec({0.25, 0.5, 0.25})};
  std::string csv = cloud_csv(cloud, a);
  CHECK(csv.substr(0, csv.find('\n')) == "0,1,2");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("atomic writes replace files in place") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "toric_io_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "out.txt").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  CHECK(read_file(path) == "second");
  std::filesystem::remove_all(dir);
  CHECK_THROWS(read_file(path));
}

TEST_CASE("svg output draws the subdivision") {
  PointConfig a({"p", "q", "r"},
                {vec({0, 0}), vec({1, 0}), vec({0, 1})}, false);
  Subdivision s = regular_subdivision(a, vec({0, 0, 0}));
  std::string svg = svg_subdivision(a, s);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::string curve = svg_distance_curve({1, 2, 4}, {0.5, 0.25, 0.1}, 0.05);
  CHECK(curve.find("<svg") != std::string::npos);
}
