// toricdegen: regular subdivisions, secondary polytopes, moment-map
// inversion, one-parameter limits in fans, and toric degeneration runs.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toric/io_json.hpp"
#include "toric/svg.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

struct CommonOpts {
  uint64_t seed = 0;
  double tol_geom = 0.0;  // 0 = library default
  double tol_opt = 0.0;
  std::string out_dir;
  bool svg = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "random seed (default 0)");
  cmd->add_option("--tol-geom", o.tol_geom, "geometric tolerance override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-opt", o.tol_opt, "optimizer tolerance override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out_dir, "output directory (created if missing)");
  cmd->add_flag("--svg", o.svg, "emit SVG plots (requires --out)");
}

Tolerance make_tol(const CommonOpts& o) {
  Tolerance tol;
  if (o.tol_geom > 0.0) tol.eps_geom = o.tol_geom;
  if (o.tol_opt > 0.0) tol.eps_opt = o.tol_opt;
  tol.validate();
  return tol;
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// Emits the main JSON to stdout and, with --out, also to a named file.
void emit(const CommonOpts& o, const std::string& filename, const std::string& contents,
          bool to_stdout = true) {
  if (to_stdout) std::cout << contents << "\n";
  if (o.out_dir.empty()) return;
  std::filesystem::create_directories(o.out_dir);
  write_file_atomic((std::filesystem::path(o.out_dir) / filename).string(), contents);
}

Vec parse_number_list(const std::string& text, const char* what) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double x = std::stod(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size())
      throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "'");
    vals.push_back(x);
  }
  if (vals.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  Vec v(static_cast<Eigen::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

std::vector<double> parse_schedule(const std::string& text) {
  double start = 0.0, end = 0.0, step = 0.0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &end, &step) != 3 || step <= 0.0 ||
      end < start)
    throw std::invalid_argument("schedule: expected start:end:step with step > 0");
  std::vector<double> out;
  for (double s = start; s <= end + 1e-12 * step; s += step) out.push_back(s);
  return out;
}

int cmd_subdivide(const std::string& config_path, const std::string& lift_path,
                  const CommonOpts& o) {
  Tolerance tol = make_tol(o);
  PointConfig a = point_config_from_json(load_json(config_path), tol);
  Vec lift = labeled_values_from_json(load_json(lift_path), a, "lift");
  Subdivision s = regular_subdivision(a, lift);
  emit(o, "subdivision.json", subdivision_json(s, a).dump(2));
  if (o.svg) {
    if (a.ambient_dim() == 2)
      emit(o, "subdivision.svg", svg_subdivision(a, s), false);
    else
      std::cerr << "note: skipping SVG, configuration is not 2-dimensional\n";
  }
  return 0;
}

int cmd_secondary(const std::string& config_path, uint64_t budget, const CommonOpts& o) {
  Tolerance tol = make_tol(o);
  PointConfig a = point_config_from_json(load_json(config_path), tol);
  if (a.size() > 12) throw std::invalid_argument("secondary: at most 12 points supported");
  TriangulationList list = enumerate_regular_triangulations(a, budget, o.seed);
  if (!list.exhaustive)
    std::cerr << "warning: enumeration may be incomplete (budget " << budget << ")\n";
  emit(o, "secondary.json", triangulation_list_json(list, a).dump(2));
  if (o.svg) std::cerr << "note: no SVG output for secondary polytopes\n";
  return 0;
}

int cmd_birch(const std::string& config_path, const std::string& weights_path,
              const std::string& target_text, const CommonOpts& o) {
  Tolerance tol = make_tol(o);
  PointConfig a = point_config_from_json(load_json(config_path), tol);
  Vec w = labeled_values_from_json(load_json(weights_path), a, "weights");
  Vec u = parse_number_list(target_text, "target");
  if (u.size() != a.ambient_dim())
    throw std::invalid_argument("target: expected " + std::to_string(a.ambient_dim()) +
                                " coordinates");
  BirchResult b = birch_inverse(a, w, u);
  emit(o, "birch.json", birch_json(b, a).dump(2));
  return b.residual <= tol.eps_opt * std::max(a.diameter(), 1.0) * 10.0 ? 0 : 1;
}

int cmd_limit(const std::string& fan_path, const std::string& direction_text, long long cone_id,
              const std::string& coord_text, const CommonOpts& o) {
  Tolerance tol = make_tol(o);
  Fan f = fan_from_json(load_json(fan_path), tol);
  Vec dir = parse_number_list(direction_text, "direction");
  if (dir.size() != f.ambient_dim())
    throw std::invalid_argument("direction: expected " + std::to_string(f.ambient_dim()) +
                                " coordinates");
  FanPoint p = epsilon(f);
  if (cone_id >= 0) {
    if (static_cast<size_t>(cone_id) >= f.size())
      throw std::invalid_argument("cone: no cone with id " + std::to_string(cone_id));
    p.cone_id = static_cast<size_t>(cone_id);
  }
  if (!coord_text.empty()) {
    Vec c = parse_number_list(coord_text, "coord");
    if (c.size() != f.ambient_dim())
      throw std::invalid_argument("coord: expected " + std::to_string(f.ambient_dim()) +
                                  " coordinates");
    p.orbit_coord = canonicalize(f, p.cone_id, c);
  }
  std::optional<FanPoint> lim = one_param_limit(f, p, dir);
  Json j;
  j["exists"] = lim.has_value();
  if (lim) {
    j["cone"] = lim->cone_id;
    j["orbit_coord"] = vec_json(lim->orbit_coord);
  }
  emit(o, "limit.json", j.dump(2));
  return 0;
}

int cmd_degenerate(const std::string& config_path, const std::string& weights_path,
                   const std::string& direction_path, const std::string& schedule_text,
                   int density, const CommonOpts& o) {
  Tolerance tol = make_tol(o);
  PointConfig a = point_config_from_json(load_json(config_path), tol);
  Vec w = labeled_values_from_json(load_json(weights_path), a, "weights");
  Vec v = labeled_values_from_json(load_json(direction_path), a, "direction");
  std::vector<double> schedule = parse_schedule(schedule_text);
  DegenerationReport r = degenerate(a, w, v, schedule, density, o.seed);
  emit(o, "degeneration.json", degeneration_json(r, a).dump(2));
  if (!o.out_dir.empty()) {
    MomentGrid grid = sample_moment_grid(a, r.predicted, density, o.seed);
    PointCloud cloud = complex_cloud_at(a, ToricComplex{r.predicted, w}, grid);
    emit(o, "complex_cloud.csv", cloud_csv(cloud, a), false);
  }
  if (o.svg) emit(o, "degeneration.svg", svg_distance_curve(r.schedule, r.distances, r.threshold),
                  false);
  return r.verdict ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& names, const CommonOpts& o) {
  std::vector<std::string> todo = names.empty() ? suite_names() : names;
  Json summary;
  summary["seed"] = o.seed;
  summary["suites"] = Json::array();
  bool all_pass = true;
  for (const std::string& name : todo) {
    SuiteResult r = run_suite(name, o.seed);
    std::cerr << r.name << (r.pass ? "  PASS  " : "  FAIL  ") << r.details << "\n";
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["details"] = r.details;
    j["seconds"] = r.seconds;
    summary["suites"].push_back(j);
    all_pass = all_pass && r.pass;
  }
  summary["pass"] = all_pass;
  emit(o, "verify.json", summary.dump(2));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irrational toric varieties: subdivisions, moment maps, degenerations"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string config_path, lift_path, weights_path, direction, target, coord, schedule;
  uint64_t budget = 500;
  int density = 200;
  long long cone_id = -1;
  std::vector<std::string> suites;

  CLI::App* sub = app.add_subcommand("subdivide", "regular subdivision induced by a lift");
  sub->add_option("--config", config_path, "point configuration JSON")->required();
  sub->add_option("--lift", lift_path, "lift values JSON {\"label\": value}")->required();
  add_common(sub, o);

  CLI::App* sec = app.add_subcommand("secondary", "enumerate regular triangulations");
  sec->add_option("--config", config_path, "point configuration JSON")->required();
  sec->add_option("--budget", budget, "number of random lifts to try");
  add_common(sec, o);

  CLI::App* bir = app.add_subcommand("birch", "invert the moment map on a weighted translate");
  bir->add_option("--config", config_path, "point configuration JSON")->required();
  bir->add_option("--weights", weights_path, "weights JSON {\"label\": value}")->required();
  bir->add_option("--target", target, "moment target, comma-separated coordinates")->required();
  add_common(bir, o);

  CLI::App* lim = app.add_subcommand("limit", "one-parameter limit of a fan point");
  lim->add_option("--config", config_path, "fan JSON")->required();
  lim->add_option("--direction", direction, "cocharacter direction, comma-separated")->required();
  lim->add_option("--cone", cone_id, "cone id of the start point (default: minimal cone)");
  lim->add_option("--coord", coord, "orbit coordinate of the start point (default: 0)");
  add_common(lim, o);

  CLI::App* deg = app.add_subcommand("degenerate", "degeneration run against the limit complex");
  deg->add_option("--config", config_path, "point configuration JSON")->required();
  deg->add_option("--weights", weights_path, "weights JSON {\"label\": value}")->required();
  deg->add_option("--direction", direction, "direction JSON {\"label\": value}")->required();
  deg->add_option("--schedule", schedule, "parameter schedule start:end:step")->required();
  deg->add_option("--density", density, "random moment targets per facet")
      ->check(CLI::PositiveNumber);
  add_common(deg, o);

  CLI::App* ver = app.add_subcommand("verify", "run self-check suites");
  ver->add_option("suites", suites, "suite names (default: all)");
  add_common(ver, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.svg && o.out_dir.empty())
      throw std::invalid_argument("--svg requires --out to name the output directory");
    if (sub->parsed()) return cmd_subdivide(config_path, lift_path, o);
    if (sec->parsed()) return cmd_secondary(config_path, budget, o);
    if (bir->parsed()) return cmd_birch(config_path, weights_path, target, o);
    if (lim->parsed()) return cmd_limit(config_path, direction, cone_id, coord, o);
    if (deg->parsed())
      return cmd_degenerate(config_path, weights_path, direction, schedule, density, o);
    if (ver->parsed()) return cmd_verify(suites, o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
