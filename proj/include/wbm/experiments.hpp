#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "wbm/assembly.hpp"
#include "wbm/boundarydata.hpp"
#include "wbm/geometry.hpp"
#include "wbm/solver.hpp"
#include "wbm/wavebasis.hpp"

namespace wbm {

/// Wave-function expansion u(p) = sum_j alpha_j Phi_j(p).
struct Solution {
  WaveBasisSpec spec;
  Eigen::VectorXcd coefficients;
  SolveReport report;
};

cdouble evaluate_solution(const Solution& sol, const Point2& p);
cdouble solution_normal_derivative(const Solution& sol, const Point2& p, const Point2& n);

/// Mean relative error of the imposed trace at n_p points
/// t_i = 2 pi i / n_p + pi / n_p. Where |w| < 1e-8 max|w| the absolute error
/// normalized by max|w| is used instead.
double boundary_error(const Solution& sol, const BoundaryCondition& bc,
                      const BoundaryCurve& curve, int n_points);

/// One variant of an experiment: a geometry, box, data and a T sweep.
struct ExperimentConfig {
  std::string name = "experiment";
  BoundaryCurve curve = BoundaryCurve::disk({0.0, 0.0}, 1.0);
  BoundingBox box;
  double k = 1.0;
  BoundaryCondition bc;
  std::vector<Formulation> formulations{Formulation::kWeightedResidual,
                                        Formulation::kCollocation};
  double gamma = 2.0;
  bool arc_length_weights = false;
  double quad_factor = 20.0;
  SolverOptions solver;
  std::vector<double> t_sweep;
  int n_points = 3000;
  std::string output;  // optional CSV path
};

/// Throws ConfigError when the sweep is not strictly increasing, the curve
/// leaves the box, or n_p does not exceed the largest collocation count.
void validate(const ExperimentConfig& cfg);

struct ExperimentRecord {
  std::string experiment;
  Formulation formulation = Formulation::kCollocation;
  double truncation = 0.0;
  int n = 0;
  int m = 0;  // collocation rows, or quadrature points for weighted residual
  double error = 0.0;
  double cond = 0.0;
  double coef_norm = 0.0;
  double residual_norm = 0.0;
  double wall_ms = 0.0;
  int rank = 0;
  bool ok = true;
  std::string diagnostic;
};

struct SweepOptions {
  /// When false wall_ms is left at zero, making the CSV reproducible byte for byte.
  bool measure_time = true;
};

/// Assemble, solve and measure one (formulation, T) point. Throws on failure.
ExperimentRecord run_single(const ExperimentConfig& cfg, Formulation formulation,
                            double truncation, const SweepOptions& options = {},
                            Solution* solution_out = nullptr);

/// Records ordered by formulation (as listed in the config) then by T. A
/// failing point yields a record with ok = false and the sweep continues.
std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& cfg,
                                        const SweepOptions& options = {});

struct Preset {
  std::string name;
  std::string description;
  std::vector<ExperimentConfig> variants;
};

std::vector<Preset> presets(double k = 0.924);
std::optional<Preset> find_preset(const std::string& name, double k = 0.924);

}  // namespace wbm
