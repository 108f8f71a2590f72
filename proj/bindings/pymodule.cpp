#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/io_json.hpp"
#include "toric/verify.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

PointConfig make_config(const std::vector<std::string>& labels, const std::vector<Vec>& points,
                        bool affine) {
  return PointConfig(labels, points, affine);
}

Fan make_fan(const std::vector<std::vector<Vec>>& cone_generators, int ambient_dim) {
  std::vector<Cone> cones;
  for (const std::vector<Vec>& gens : cone_generators) cones.emplace_back(gens, ambient_dim);
  return Fan::from_cones(std::move(cones));
}

}  // namespace

PYBIND11_MODULE(_toricdegen, m) {
  m.doc() = "irrational toric varieties: subdivisions, moment maps, degenerations";

  py::class_<PointConfig>(m, "PointConfig")
      .def(py::init(&make_config), py::arg("labels"), py::arg("points"),
           py::arg("affine") = false)
      .def_property_readonly("labels", &PointConfig::labels)
      .def_property_readonly("points", &PointConfig::points)
      .def_property_readonly("ambient_dim", &PointConfig::ambient_dim)
      .def_property_readonly("affine", &PointConfig::affine)
      .def("__len__", &PointConfig::size)
      .def("diameter", &PointConfig::diameter);

  py::class_<Subdivision>(m, "Subdivision")
      .def_readonly("faces", &Subdivision::faces)
      .def_readonly("facets", &Subdivision::facets)
      .def("same_as", &Subdivision::same_as);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def_readwrite("eps_geom", &Tolerance::eps_geom)
      .def_readwrite("eps_opt", &Tolerance::eps_opt)
      .def_readwrite("eps_limit", &Tolerance::eps_limit);

  py::class_<Cone>(m, "Cone")
      .def(py::init<std::vector<Vec>, int, Tolerance>(), py::arg("generators"),
           py::arg("ambient_dim"), py::arg("tol") = Tolerance{})
      .def_property_readonly("rays", &Cone::rays)
      .def_property_readonly("dim", &Cone::dim)
      .def_property_readonly("lineality_dim", &Cone::lineality_dim)
      .def("dual", &Cone::dual)
      .def("contains", &Cone::contains)
      .def("contains_relint", &Cone::contains_relint)
      .def("equals", &Cone::equals);

  py::class_<Fan>(m, "Fan")
      .def(py::init(&make_fan), py::arg("cone_generators"), py::arg("ambient_dim"))
      .def("__len__", &Fan::size)
      .def_property_readonly("ambient_dim", &Fan::ambient_dim)
      .def("cone", &Fan::cone)
      .def("is_complete", &Fan::is_complete)
      .def("minimal_containing_cone", &Fan::minimal_containing_cone);

  py::class_<FanPoint>(m, "FanPoint")
      .def(py::init([](size_t cone_id, Vec coord) {
             return FanPoint{cone_id, std::move(coord)};
           }),
           py::arg("cone_id"), py::arg("orbit_coord"))
      .def_readwrite("cone_id", &FanPoint::cone_id)
      .def_readwrite("orbit_coord", &FanPoint::orbit_coord);

  py::class_<BirchResult>(m, "BirchResult")
      .def_readonly("z", &BirchResult::z)
      .def_readonly("v", &BirchResult::v)
      .def_readonly("residual", &BirchResult::residual)
      .def_readonly("face", &BirchResult::face);

  py::class_<TriangulationList>(m, "TriangulationList")
      .def_readonly("triangulations", &TriangulationList::triangulations)
      .def_readonly("gkz", &TriangulationList::gkz)
      .def_readonly("exhaustive", &TriangulationList::exhaustive);

  py::class_<SecondaryFanPoint>(m, "SecondaryFanPoint")
      .def_readonly("cone", &SecondaryFanPoint::cone)
      .def_readonly("orbit_coord", &SecondaryFanPoint::orbit_coord);

  py::class_<DegenerationReport>(m, "DegenerationReport")
      .def_readonly("schedule", &DegenerationReport::schedule)
      .def_readonly("distances", &DegenerationReport::distances)
      .def_readonly("predicted", &DegenerationReport::predicted)
      .def_readonly("threshold", &DegenerationReport::threshold)
      .def_readonly("final_distance", &DegenerationReport::final_distance)
      .def_readonly("monotone", &DegenerationReport::monotone)
      .def_readonly("cone_consistent", &DegenerationReport::cone_consistent)
      .def_readonly("verdict", &DegenerationReport::verdict);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("pass_", &SuiteResult::pass)
      .def_readonly("details", &SuiteResult::details)
      .def_readonly("seconds", &SuiteResult::seconds);

  m.def("regular_subdivision", &regular_subdivision, py::arg("config"), py::arg("lift"));
  m.def("is_triangulation", &is_triangulation, py::arg("subdivision"), py::arg("config"));
  m.def("gkz_vertex", &gkz_vertex, py::arg("config"), py::arg("triangulation"));
  m.def("enumerate_regular_triangulations", &enumerate_regular_triangulations, py::arg("config"),
        py::arg("budget") = 500, py::arg("seed") = 0);
  m.def("same_secondary_cone", &same_secondary_cone, py::arg("config"), py::arg("lift_a"),
        py::arg("lift_b"));

  m.def("birch_inverse", &birch_inverse, py::arg("config"), py::arg("weights"), py::arg("target"));
  m.def("moment", &moment, py::arg("config"), py::arg("z"));
  m.def("is_member", &is_member, py::arg("config"), py::arg("z"));
  m.def(
      "phi", [](const PointConfig& a, const Vec& v) { return phi(a, TorusElement{v}); },
      py::arg("config"), py::arg("v"));

  m.def("one_param_limit", &one_param_limit, py::arg("fan"), py::arg("point"),
        py::arg("direction"));
  m.def("ray_sequence_limit", &ray_sequence_limit, py::arg("fan"), py::arg("base"),
        py::arg("direction"));
  m.def("epsilon", &epsilon, py::arg("fan"));
  m.def("distinguished_point", &distinguished_point, py::arg("fan"), py::arg("cone_id"));
  m.def(
      "monoid_mul",
      [](const Fan& f, const FanPoint& x, const FanPoint& y) {
        return monoid_mul(f, MonoidElement(x), MonoidElement(y));
      },
      py::arg("fan"), py::arg("x"), py::arg("y"));

  m.def("secondary_ray_limit", &secondary_ray_limit, py::arg("config"), py::arg("base"),
        py::arg("direction"));
  m.def("hausdorff_distance", &hausdorff_distance, py::arg("cloud_a"), py::arg("cloud_b"));
  m.def("degenerate", &degenerate, py::arg("config"), py::arg("weights"), py::arg("direction"),
        py::arg("schedule"), py::arg("density") = 200, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());

  m.def("run_suite", &run_suite, py::arg("name"), py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("suite_names", &suite_names);
}
