#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zollech/capacity_sequence.hpp"
#include "zollech/chain_complex.hpp"
#include "zollech/curve_io.hpp"
#include "zollech/exact.hpp"
#include "zollech/moment_map.hpp"
#include "zollech/obstruction.hpp"

namespace py = pybind11;

using namespace zollech;

PYBIND11_MODULE(_zollech, m) {
  m.doc() = "ECH capacities of disk cotangent bundles over the round S2 and RP2";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnitError>(m, "UnitError", PyExc_ValueError);
  py::register_exception<ExhaustionError>(m, "ExhaustionError", PyExc_RuntimeError);
  py::register_exception<HomologyMismatchError>(m, "HomologyMismatchError",
                                                PyExc_ValueError);
  py::register_exception<GradingUndefinedError>(m, "GradingUndefinedError",
                                                PyExc_ValueError);
  py::register_exception<NumericalInstabilityError>(m, "NumericalInstabilityError",
                                                    PyExc_RuntimeError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

  py::class_<ExactQuantity>(m, "ExactQuantity")
      .def_static("parse", &ExactQuantity::parse)
      .def_static("integer", &ExactQuantity::integer)
      .def_static("rational", &ExactQuantity::rational)
      .def_static("pi", &ExactQuantity::pi)
      .def_static("two_pi", &ExactQuantity::two_pi)
      .def_property_readonly("num", [](const ExactQuantity& q) { return q.coeff().num(); })
      .def_property_readonly("den", [](const ExactQuantity& q) { return q.coeff().den(); })
      .def_property_readonly("pi_power", &ExactQuantity::pi_power)
      .def("__float__", &ExactQuantity::to_double)
      .def("__str__", &ExactQuantity::to_string)
      .def("__repr__",
           [](const ExactQuantity& q) { return "ExactQuantity(" + q.to_string() + ")"; })
      .def("__eq__", [](const ExactQuantity& a, const ExactQuantity& b) { return a == b; })
      .def("__le__", [](const ExactQuantity& a, const ExactQuantity& b) { return a <= b; })
      .def("__lt__", [](const ExactQuantity& a, const ExactQuantity& b) { return a < b; })
      .def("__mul__", [](const ExactQuantity& a, const ExactQuantity& b) { return a * b; })
      .def("__truediv__",
           [](const ExactQuantity& a, const ExactQuantity& b) { return a / b; });

  py::class_<CapacitySequence>(m, "CapacitySequence")
      .def_static("combinations", &CapacitySequence::combinations)
      .def_static("multiples_of", &CapacitySequence::multiples_of)
      .def_static("scaled", &CapacitySequence::scaled)
      .def("term", &CapacitySequence::term)
      .def("prefix", &CapacitySequence::prefix)
      .def_property_readonly("rule", &CapacitySequence::rule);

  py::enum_<Surface>(m, "Surface").value("S2", Surface::S2).value("RP2", Surface::RP2);

  m.def("nseq_prefix", &nseq_prefix);
  m.def("nseq_kth", &nseq_kth);
  m.def("ball_capacities", &ball_capacities);
  m.def("ellipsoid_capacities", &ellipsoid_capacities);
  m.def("dstar_capacities", &dstar_capacities);

  py::enum_<Model>(m, "Model")
      .value("S3", Model::S3)
      .value("SstarS2", Model::SstarS2)
      .value("SstarRP2", Model::SstarRP2);

  py::class_<OrbitSet>(m, "OrbitSet")
      .def(py::init([](std::int64_t m1, std::int64_t m2) { return OrbitSet{m1, m2}; }))
      .def_readonly("m1", &OrbitSet::m1)
      .def_readonly("m2", &OrbitSet::m2)
      .def("__eq__", [](const OrbitSet& a, const OrbitSet& b) { return a == b; })
      .def("__repr__", [](const OrbitSet& a) { return "OrbitSet" + a.to_string(); });

  py::class_<IndexPair>(m, "IndexPair")
      .def_property_readonly("c_tau",
                             [](const IndexPair& p) { return p.c_tau.to_string(); })
      .def_property_readonly("q_tau",
                             [](const IndexPair& p) { return p.q_tau.to_string(); })
      .def_readonly("cz_sum_alpha", &IndexPair::cz_sum_alpha)
      .def_readonly("cz_sum_beta", &IndexPair::cz_sum_beta);

  m.def("homology_class", &homology_class);
  m.def("cz_total", &cz_total);
  m.def("index_components", &index_components);
  m.def("ech_index", &ech_index);
  m.def("grading", &grading);
  m.def("action", &action);
  m.def("generators_by_grading", &generators_by_grading);
  m.def("u_map", &u_map);
  m.def("spectrum", &spectrum);

  py::class_<DominanceResult>(m, "DominanceResult")
      .def_readonly("holds", &DominanceResult::holds)
      .def_readonly("witness_k", &DominanceResult::witness_k)
      .def_readonly("inner_term", &DominanceResult::inner_term)
      .def_readonly("outer_term", &DominanceResult::outer_term);

  py::class_<WidthCertificate>(m, "WidthCertificate")
      .def_readonly("width", &WidthCertificate::width)
      .def_readonly("upper", &WidthCertificate::upper)
      .def_readonly("upper_description", &WidthCertificate::upper_description)
      .def_readonly("lower", &WidthCertificate::lower)
      .def_readonly("lower_description", &WidthCertificate::lower_description);

  m.def("dominates", &dominates);
  m.def("dominates_mixed_units", &dominates_mixed_units);
  m.def("gromov_width", &gromov_width, py::arg("surface"), py::arg("K") = 100);
  m.def("gromov_width_volume_bound", &gromov_width_volume_bound);
  m.def("disk_cotangent_volume", &disk_cotangent_volume);
  m.def("volume_from_capacities", &volume_from_capacities);

  py::enum_<Variant>(m, "Variant")
      .value("Full", Variant::Full)
      .value("Hemisphere", Variant::Hemisphere);

  py::class_<PerturbParams>(m, "PerturbParams")
      .def_static("full", &PerturbParams::full)
      .def_static("hemisphere", &PerturbParams::hemisphere)
      .def_static("custom", &PerturbParams::custom)
      .def_readonly("epsilon", &PerturbParams::epsilon)
      .def_readonly("C", &PerturbParams::C);

  py::class_<CurveSample>(m, "CurveSample")
      .def_readonly("j", &CurveSample::j)
      .def_readonly("x", &CurveSample::x)
      .def_readonly("y", &CurveSample::y)
      .def_readonly("err", &CurveSample::err);

  py::class_<PlanarCurve>(m, "PlanarCurve")
      .def_readonly("samples", &PlanarCurve::samples);

  py::class_<RadialMinimum>(m, "RadialMinimum")
      .def_readonly("value", &RadialMinimum::value)
      .def_readonly("argmin_u", &RadialMinimum::argmin_u);

  py::class_<RadialRoots>(m, "RadialRoots")
      .def_readonly("r_min", &RadialRoots::r_min)
      .def_readonly("r_max", &RadialRoots::r_max);

  py::class_<RadialAction>(m, "RadialAction")
      .def_readonly("value", &RadialAction::value)
      .def_readonly("err", &RadialAction::err);

  py::class_<BoundaryPoint>(m, "BoundaryPoint")
      .def_readonly("rho1", &BoundaryPoint::rho1)
      .def_readonly("rho2", &BoundaryPoint::rho2)
      .def_readonly("err", &BoundaryPoint::err);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("epsilons", &ConvergenceReport::epsilons)
      .def_readonly("sup_steps", &ConvergenceReport::sup_steps)
      .def_readonly("max_extrapolation_correction",
                    &ConvergenceReport::max_extrapolation_correction);

  py::class_<LimitResult>(m, "LimitResult")
      .def_readonly("curve", &LimitResult::curve)
      .def_readonly("report", &LimitResult::report);

  m.def("hamiltonian", [](const PerturbParams& params, std::array<double, 2> x,
                          std::array<double, 2> y) {
    return hamiltonian(params, PhasePoint{x, y});
  });
  m.def("angular_momentum", [](std::array<double, 2> x, std::array<double, 2> y) {
    return angular_momentum(PhasePoint{x, y});
  });
  m.def("poisson_bracket_check", [](const PerturbParams& params, std::array<double, 2> x,
                                    std::array<double, 2> y, double h) {
    return poisson_bracket_check(params, PhasePoint{x, y}, h);
  });
  m.def("h_min", &h_min);
  m.def("radial_roots", &radial_roots);
  m.def("radial_action", &radial_action);
  m.def("radial_roots_closed_form", &radial_roots_closed_form);
  m.def("radial_action_closed_form", &radial_action_closed_form);
  m.def("theta_term", &theta_term);
  m.def("boundary_point", &boundary_point);
  m.def("boundary_curve", [](const PerturbParams& params, std::vector<double> grid) {
    return boundary_curve(params, grid);
  });
  m.def("limit_domain",
        [](Variant variant, std::vector<double> ladder, std::vector<double> grid) {
          return limit_domain(variant, ladder, grid);
        });
  m.def("default_epsilon_ladder", &default_epsilon_ladder);
  m.def("default_j_grid", [](std::vector<double> ladder, std::size_t per_side) {
    return default_j_grid(ladder, per_side);
  }, py::arg("ladder"), py::arg("per_side") = 16);
  m.def("toric_area", &toric_area);
  m.def("save_curve", &save_curve);
  m.def("load_curve", &load_curve);
}
