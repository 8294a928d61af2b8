#include "wbm/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wbm {

std::string to_string(Formulation f) {
  return f == Formulation::kCollocation ? "collocation" : "weighted-residual";
}

Formulation formulation_from_string(const std::string& name) {
  if (name == "collocation") return Formulation::kCollocation;
  if (name == "weighted-residual") return Formulation::kWeightedResidual;
  throw std::invalid_argument("unknown formulation '" + name + "'");
}

int collocation_rows(int n, double gamma) {
  const double exact = gamma * n;
  return static_cast<int>(std::ceil(exact - 1e-12 * exact));
}

int default_quadrature_points(int n, double factor) {
  return std::max(static_cast<int>(std::ceil(factor * n)), 400);
}

LinearSystem collocation_system(const WaveBasisSpec& spec, const BoundaryCurve& curve,
                                const BoundaryCondition& bc,
                                const CollocationOptions& options) {
  if (!(options.gamma > 1.0)) {
    throw std::invalid_argument("collocation requires oversampling factor gamma > 1");
  }
  check_source_clearance(bc, curve);
  const WaveBasis basis(spec);
  const int n = basis.size();
  const int m = collocation_rows(n, options.gamma);
  const auto samples = sample_boundary(curve, m);
  const bool neumann = bc.type == BoundaryType::kNeumann;

  LinearSystem sys;
  sys.formulation = Formulation::kCollocation;
  sys.gamma = options.gamma;
  sys.matrix.resize(m, n);
  sys.rhs.resize(m);
  Eigen::VectorXcd value(n);
  Eigen::VectorXcd dn(n);
  for (int i = 0; i < m; ++i) {
    const auto& s = samples[i];
    basis.evaluate_row(s.point, s.normal, value, dn);
    double w = 1.0;
    if (options.arc_length_weights) {
      w = std::sqrt(2.0 * std::numbers::pi * s.speed / m);
    }
    sys.matrix.row(i) = w * (neumann ? dn : value).transpose();
    sys.rhs[i] = w * trace(bc, s.point, s.normal);
  }
  return sys;
}

LinearSystem weighted_residual_system(const WaveBasisSpec& spec, const BoundaryCurve& curve,
                                      const BoundaryCondition& bc, int quadrature_points) {
  const WaveBasis basis(spec);
  const int n = basis.size();
  const int q = quadrature_points;
  if (q < 2 * n) {
    throw std::invalid_argument("weighted residual quadrature needs Q >= 2N (Q = " +
                                std::to_string(q) + ", N = " + std::to_string(n) + ")");
  }
  check_source_clearance(bc, curve);
  const auto samples = sample_boundary(curve, q);
  const bool neumann = bc.type == BoundaryType::kNeumann;

  // Quadrature nodes as rows: A = V^T diag(w) D, b = V^T diag(w) g.
  Eigen::MatrixXcd values(q, n);
  Eigen::MatrixXcd tested(q, n);
  Eigen::VectorXcd data(q);
  Eigen::VectorXd weights(q);
  Eigen::VectorXcd value(n);
  Eigen::VectorXcd dn(n);
  const double h = 2.0 * std::numbers::pi / q;
  for (int i = 0; i < q; ++i) {
    const auto& s = samples[i];
    basis.evaluate_row(s.point, s.normal, value, dn);
    values.row(i) = value.transpose();
    tested.row(i) = (neumann ? dn : value).transpose();
    data[i] = trace(bc, s.point, s.normal);
    weights[i] = h * s.speed;
  }

  LinearSystem sys;
  sys.formulation = Formulation::kWeightedResidual;
  sys.quadrature_points = q;
  const Eigen::MatrixXcd weighted = weights.asDiagonal() * values;
  sys.matrix = weighted.transpose() * tested;
  sys.rhs = weighted.transpose() * data;
  return sys;
}

}  // namespace wbm
