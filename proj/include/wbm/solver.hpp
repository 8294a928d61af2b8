#pragma once

#include <string>

#include <Eigen/Core>

#include "wbm/assembly.hpp"

namespace wbm {

enum class SolverMethod { kTruncatedSvd, kPivotedQr };

std::string to_string(SolverMethod m);
SolverMethod solver_method_from_string(const std::string& name);

/// Regularization threshold, relative to sigma_max (tsvd) or |r_11| (cpqr).
struct SolverOptions {
  SolverMethod method = SolverMethod::kTruncatedSvd;
  double epsilon = 1e-14;

  static SolverOptions tsvd(double epsilon = 1e-14) {
    return {SolverMethod::kTruncatedSvd, epsilon};
  }
  static SolverOptions cpqr(double epsilon = 2e-13) {
    return {SolverMethod::kPivotedQr, epsilon};
  }
};

struct SolveReport {
  Eigen::VectorXcd coefficients;
  double residual_norm = 0.0;
  double coef_norm = 0.0;
  double condition_number = 0.0;
  int numerical_rank = 0;
  double threshold = 0.0;
};

/// Regularized least-squares solve of A x = b.
///   tsvd: x = sum over sigma_j >= eps sigma_max of (u_j^* b / sigma_j) v_j
///   cpqr: A P = Q R; pivots with |r_jj| < eps |r_11| are dropped (their
///         coefficients set to zero) and the leading block is back-substituted.
/// Throws InputError on non-finite entries.
SolveReport solve(const LinearSystem& sys, const SolverOptions& opts);
SolveReport solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b,
                  const SolverOptions& opts);

/// sigma_max / sigma_min from a full SVD; +inf for a zero matrix.
double condition_number(const Eigen::MatrixXcd& a);
inline double condition_number(const LinearSystem& sys) {
  return condition_number(sys.matrix);
}

}  // namespace wbm
