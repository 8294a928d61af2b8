#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wbm/assembly.hpp"
#include "wbm/config.hpp"
#include "wbm/csv.hpp"
#include "wbm/errors.hpp"
#include "wbm/experiments.hpp"
#include "wbm/solver.hpp"
#include "wbm/specfun.hpp"
#include "wbm/wavebasis.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

wbm::Formulation formulation(const std::string& name) {
  return wbm::formulation_from_string(name);
}

}  // namespace

PYBIND11_MODULE(_wbm, m) {
  m.doc() = "Wave Based Method for interior 2D Helmholtz problems";

  py::register_exception<wbm::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<wbm::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<wbm::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<wbm::DegenerateCurveError>(m, "DegenerateCurveError",
                                                    PyExc_RuntimeError);

  m.def("bessel_j0", &wbm::bessel_j0, "x"_a);
  m.def("bessel_y0", &wbm::bessel_y0, "x"_a);
  m.def("bessel_j1", &wbm::bessel_j1, "x"_a);
  m.def("bessel_y1", &wbm::bessel_y1, "x"_a);
  m.def("hankel1_0", &wbm::hankel1_0, "x"_a);
  m.def("hankel1_1", &wbm::hankel1_1, "x"_a);

  py::class_<wbm::BoundingBox>(m, "BoundingBox")
      .def(py::init([](double x0, double y0, double lx, double ly) {
             return wbm::BoundingBox({x0, y0}, lx, ly);
           }),
           "x0"_a, "y0"_a, "lx"_a, "ly"_a)
      .def_property_readonly("origin", [](const wbm::BoundingBox& b) { return b.origin; })
      .def_readonly("lx", &wbm::BoundingBox::lx)
      .def_readonly("ly", &wbm::BoundingBox::ly)
      .def("contains_curve", &wbm::BoundingBox::contains_curve, "curve"_a, "samples"_a = 4096,
           "tol"_a = 1e-12);

  py::class_<wbm::BoundaryCurve>(m, "BoundaryCurve")
      .def_static("disk", [](double cx, double cy, double r) {
        return wbm::BoundaryCurve::disk({cx, cy}, r);
      }, "cx"_a, "cy"_a, "radius"_a)
      .def_static("crescent", [](double x0, double y0, double a, double b) {
        return wbm::BoundaryCurve::crescent({x0, y0}, a, b);
      }, "x0"_a, "y0"_a, "a"_a, "b"_a)
      .def_static("inverted_ellipse", [](double x0, double y0, double tau) {
        return wbm::BoundaryCurve::inverted_ellipse({x0, y0}, tau);
      }, "x0"_a, "y0"_a, "tau"_a)
      .def_property_readonly("kind", [](const wbm::BoundaryCurve& c) {
        return wbm::to_string(c.kind());
      })
      .def("point", &wbm::BoundaryCurve::point, "t"_a)
      .def("unit_normal", &wbm::BoundaryCurve::unit_normal, "t"_a)
      .def("speed", &wbm::BoundaryCurve::speed, "t"_a);

  py::class_<wbm::WaveBasisSpec>(m, "WaveBasisSpec")
      .def(py::init<const wbm::BoundingBox&, double, double>(), "box"_a, "k"_a, "T"_a)
      .def_readonly("nm", &wbm::WaveBasisSpec::nm)
      .def_readonly("nn", &wbm::WaveBasisSpec::nn)
      .def_readonly("k", &wbm::WaveBasisSpec::k)
      .def_property_readonly("size", &wbm::WaveBasisSpec::size);

  m.def("evaluate", [](const wbm::WaveBasisSpec& spec, int family, int order, double x,
                       double y) { return wbm::evaluate(spec, {family, order}, {x, y}); },
        "spec"_a, "family"_a, "order"_a, "x"_a, "y"_a);

  py::class_<wbm::AnalyticField>(m, "AnalyticField")
      .def_static("plane_wave", &wbm::AnalyticField::plane_wave, "k"_a, "angle"_a)
      .def_static("point_source", [](double k, double xs, double ys) {
        return wbm::AnalyticField::point_source(k, {xs, ys});
      }, "k"_a, "xs"_a, "ys"_a)
      .def_static("constant", &wbm::AnalyticField::constant, "value"_a)
      .def("value", [](const wbm::AnalyticField& f, double x, double y) {
        return wbm::field_value(f, {x, y});
      }, "x"_a, "y"_a);

  py::class_<wbm::BoundaryCondition>(m, "BoundaryCondition")
      .def(py::init([](const std::string& type, const wbm::AnalyticField& f) {
             return wbm::BoundaryCondition(wbm::boundary_type_from_string(type), f);
           }),
           "type"_a, "field"_a);

  py::class_<wbm::LinearSystem>(m, "LinearSystem")
      .def_readonly("matrix", &wbm::LinearSystem::matrix)
      .def_readonly("rhs", &wbm::LinearSystem::rhs)
      .def_property_readonly("formulation", [](const wbm::LinearSystem& s) {
        return wbm::to_string(s.formulation);
      });

  m.def("collocation_system",
        [](const wbm::WaveBasisSpec& spec, const wbm::BoundaryCurve& curve,
           const wbm::BoundaryCondition& bc, double gamma, bool arc_length_weights) {
          return wbm::collocation_system(spec, curve, bc, {gamma, arc_length_weights});
        },
        "spec"_a, "curve"_a, "bc"_a, "gamma"_a = 2.0, "arc_length_weights"_a = false);
  m.def("weighted_residual_system",
        [](const wbm::WaveBasisSpec& spec, const wbm::BoundaryCurve& curve,
           const wbm::BoundaryCondition& bc, int q) {
          if (q <= 0) q = wbm::default_quadrature_points(spec.size());
          return wbm::weighted_residual_system(spec, curve, bc, q);
        },
        "spec"_a, "curve"_a, "bc"_a, "quadrature_points"_a = 0);

  py::class_<wbm::SolveReport>(m, "SolveReport")
      .def_readonly("coefficients", &wbm::SolveReport::coefficients)
      .def_readonly("residual_norm", &wbm::SolveReport::residual_norm)
      .def_readonly("coef_norm", &wbm::SolveReport::coef_norm)
      .def_readonly("condition_number", &wbm::SolveReport::condition_number)
      .def_readonly("numerical_rank", &wbm::SolveReport::numerical_rank);

  m.def("solve",
        [](const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, const std::string& method,
           double epsilon) {
          const auto m = wbm::solver_method_from_string(method);
          if (epsilon <= 0.0) epsilon = m == wbm::SolverMethod::kPivotedQr ? 2e-13 : 1e-14;
          return wbm::solve(a, b, {m, epsilon});
        },
        "matrix"_a, "rhs"_a, "method"_a = "tsvd", "epsilon"_a = 0.0);
  m.def("condition_number", py::overload_cast<const Eigen::MatrixXcd&>(&wbm::condition_number),
        "matrix"_a);

  py::class_<wbm::ExperimentConfig>(m, "ExperimentConfig")
      .def_readwrite("name", &wbm::ExperimentConfig::name)
      .def_readwrite("k", &wbm::ExperimentConfig::k)
      .def_readwrite("t_sweep", &wbm::ExperimentConfig::t_sweep)
      .def_readwrite("gamma", &wbm::ExperimentConfig::gamma)
      .def_readwrite("n_points", &wbm::ExperimentConfig::n_points)
      .def_property(
          "formulations",
          [](const wbm::ExperimentConfig& c) {
            std::vector<std::string> out;
            for (auto f : c.formulations) out.push_back(wbm::to_string(f));
            return out;
          },
          [](wbm::ExperimentConfig& c, const std::vector<std::string>& names) {
            c.formulations.clear();
            for (const auto& n : names) c.formulations.push_back(formulation(n));
          })
      .def_property_readonly("curve", [](const wbm::ExperimentConfig& c) { return c.curve; })
      .def_property_readonly("box", [](const wbm::ExperimentConfig& c) { return c.box; })
      .def("validate", [](const wbm::ExperimentConfig& c) { wbm::validate(c); });

  py::class_<wbm::ExperimentRecord>(m, "ExperimentRecord")
      .def_readonly("experiment", &wbm::ExperimentRecord::experiment)
      .def_property_readonly("formulation", [](const wbm::ExperimentRecord& r) {
        return wbm::to_string(r.formulation);
      })
      .def_readonly("T", &wbm::ExperimentRecord::truncation)
      .def_readonly("N", &wbm::ExperimentRecord::n)
      .def_readonly("M", &wbm::ExperimentRecord::m)
      .def_readonly("error", &wbm::ExperimentRecord::error)
      .def_readonly("cond", &wbm::ExperimentRecord::cond)
      .def_readonly("coef_norm", &wbm::ExperimentRecord::coef_norm)
      .def_readonly("residual_norm", &wbm::ExperimentRecord::residual_norm)
      .def_readonly("wall_ms", &wbm::ExperimentRecord::wall_ms)
      .def_readonly("rank", &wbm::ExperimentRecord::rank)
      .def_readonly("ok", &wbm::ExperimentRecord::ok)
      .def_readonly("diagnostic", &wbm::ExperimentRecord::diagnostic);

  m.def("parse_config", &wbm::parse_config, "text"_a);
  m.def("load_config", &wbm::load_config, "path"_a);
  m.def("format_config", &wbm::format_config, "config"_a);
  m.def("preset_names", [] {
    std::vector<std::string> names;
    for (const auto& p : wbm::presets()) names.push_back(p.name);
    return names;
  });
  m.def("find_preset",
        [](const std::string& name, double k) {
          const auto p = wbm::find_preset(name, k);
          if (!p) throw py::key_error("unknown preset '" + name + "'");
          return p->variants;
        },
        "name"_a, "k"_a = 0.924);

  m.def("run_sweep",
        [](const wbm::ExperimentConfig& cfg, bool measure_time) {
          py::gil_scoped_release release;
          return wbm::run_sweep(cfg, {measure_time});
        },
        "config"_a, "measure_time"_a = true);
  m.def("run_single",
        [](const wbm::ExperimentConfig& cfg, const std::string& f, double t) {
          wbm::Solution sol;
          auto rec = wbm::run_single(cfg, formulation(f), t, {false}, &sol);
          return py::make_tuple(rec, sol.coefficients);
        },
        "config"_a, "formulation"_a, "T"_a,
        "Run one (formulation, T) point; returns (record, coefficients).");
  m.def("evaluate_solution",
        [](const wbm::WaveBasisSpec& spec, const Eigen::VectorXcd& coefficients, double x,
           double y) {
          return wbm::evaluate_solution({spec, coefficients, {}}, {x, y});
        },
        "spec"_a, "coefficients"_a, "x"_a, "y"_a);

  m.def("csv_header", [] { return std::string(wbm::kCsvHeader); });
  m.def("to_csv", [](const std::vector<wbm::ExperimentRecord>& records) {
    std::ostringstream os;
    wbm::write_csv_header(os);
    wbm::write_csv_rows(os, records);
    return os.str();
  }, "records"_a);
}
