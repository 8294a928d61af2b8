#include "wbm/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "wbm/errors.hpp"

namespace wbm {

cdouble evaluate_solution(const Solution& sol, const Point2& p) {
  const WaveBasis basis(sol.spec);
  return (basis.values(p).transpose() * sol.coefficients)(0);
}

cdouble solution_normal_derivative(const Solution& sol, const Point2& p, const Point2& n) {
  const WaveBasis basis(sol.spec);
  return (basis.normal_derivatives(p, n).transpose() * sol.coefficients)(0);
}

double boundary_error(const Solution& sol, const BoundaryCondition& bc,
                      const BoundaryCurve& curve, int n_points) {
  if (n_points < 1) throw std::invalid_argument("boundary_error: n_p must be >= 1");
  const WaveBasis basis(sol.spec);
  const auto samples = sample_boundary(curve, n_points, std::numbers::pi / n_points);
  const bool neumann = bc.type == BoundaryType::kNeumann;
  std::vector<cdouble> exact(n_points);
  std::vector<cdouble> approx(n_points);
  Eigen::VectorXcd value(basis.size());
  Eigen::VectorXcd dn(basis.size());
  double wmax = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const auto& s = samples[i];
    basis.evaluate_row(s.point, s.normal, value, dn);
    approx[i] = ((neumann ? dn : value).transpose() * sol.coefficients)(0);
    exact[i] = trace(bc, s.point, s.normal);
    wmax = std::max(wmax, std::abs(exact[i]));
  }
  const double floor = 1e-8 * wmax;
  double sum = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double diff = std::abs(approx[i] - exact[i]);
    const double w = std::abs(exact[i]);
    if (w < floor || w == 0.0) {
      sum += wmax > 0.0 ? diff / wmax : diff;
    } else {
      sum += diff / w;
    }
  }
  return sum / n_points;
}

void validate(const ExperimentConfig& cfg) {
  if (!(cfg.k > 0.0)) throw ConfigError("k must be positive");
  if (cfg.t_sweep.empty()) throw ConfigError("t_sweep is empty");
  for (std::size_t i = 0; i < cfg.t_sweep.size(); ++i) {
    if (!(cfg.t_sweep[i] > 0.0)) throw ConfigError("t_sweep values must be positive");
    if (i > 0 && !(cfg.t_sweep[i] > cfg.t_sweep[i - 1])) {
      throw ConfigError("t_sweep must be strictly increasing");
    }
  }
  if (cfg.formulations.empty()) throw ConfigError("no formulation selected");
  if (!(cfg.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (!(cfg.quad_factor >= 2.0)) throw ConfigError("quad_factor must be at least 2");
  if (!(cfg.solver.epsilon > 0.0 && cfg.solver.epsilon < 1.0)) {
    throw ConfigError("solver.epsilon must lie in (0, 1)");
  }
  if (!cfg.box.contains_curve(cfg.curve)) {
    throw ConfigError("boundary curve is not contained in the bounding box");
  }
  if (cfg.bc.type == BoundaryType::kNeumann && cfg.bc.field.kind == FieldKind::kConstant) {
    throw ConfigError("constant data can only be imposed as a Dirichlet condition");
  }
  const bool collocation =
      std::find(cfg.formulations.begin(), cfg.formulations.end(),
                Formulation::kCollocation) != cfg.formulations.end();
  if (collocation) {
    const WaveBasisSpec largest(cfg.box, cfg.k, cfg.t_sweep.back());
    const int m = collocation_rows(largest.size(), cfg.gamma);
    if (cfg.n_points <= m) {
      throw ConfigError("n_p = " + std::to_string(cfg.n_points) +
                        " must exceed the largest collocation count " + std::to_string(m));
    }
  }
}

ExperimentRecord run_single(const ExperimentConfig& cfg, Formulation formulation,
                            double truncation, const SweepOptions& options,
                            Solution* solution_out) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  ExperimentRecord rec;
  rec.experiment = cfg.name;
  rec.formulation = formulation;
  rec.truncation = truncation;

  const WaveBasisSpec spec(cfg.box, cfg.k, truncation);
  rec.n = spec.size();
  LinearSystem sys;
  if (formulation == Formulation::kCollocation) {
    sys = collocation_system(spec, cfg.curve, cfg.bc, {cfg.gamma, cfg.arc_length_weights});
    rec.m = sys.rows();
  } else {
    const int q = default_quadrature_points(rec.n, cfg.quad_factor);
    sys = weighted_residual_system(spec, cfg.curve, cfg.bc, q);
    rec.m = q;
  }
  Solution sol{spec, {}, solve(sys, cfg.solver)};
  sol.coefficients = sol.report.coefficients;
  if (!sol.coefficients.allFinite()) throw InputError("solve produced non-finite coefficients");
  rec.error = boundary_error(sol, cfg.bc, cfg.curve, cfg.n_points);
  rec.cond = sol.report.condition_number;
  rec.coef_norm = sol.report.coef_norm;
  rec.residual_norm = sol.report.residual_norm;
  rec.rank = sol.report.numerical_rank;
  if (options.measure_time) {
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
  }
  if (solution_out) *solution_out = std::move(sol);
  return rec;
}

std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& cfg,
                                        const SweepOptions& options) {
  validate(cfg);
  std::vector<ExperimentRecord> records;
  for (const Formulation f : cfg.formulations) {
    for (const double t : cfg.t_sweep) {
      try {
        records.push_back(run_single(cfg, f, t, options));
      } catch (const std::exception& e) {
        ExperimentRecord rec;
        rec.experiment = cfg.name;
        rec.formulation = f;
        rec.truncation = t;
        rec.n = WaveBasisSpec(cfg.box, cfg.k, t).size();
        rec.ok = false;
        rec.diagnostic = e.what();
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rec.error = rec.cond = rec.coef_norm = rec.residual_norm = nan;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

}  // namespace wbm
