#include "wbm/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "wbm/errors.hpp"

namespace wbm {
namespace {

double condition_from(const Eigen::VectorXd& sigma) {
  if (sigma.size() == 0 || !(sigma[0] > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  const double smallest = sigma[sigma.size() - 1];
  if (!(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return sigma[0] / smallest;
}

void finish(SolveReport& report, const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b) {
  report.residual_norm = (a * report.coefficients - b).norm();
  report.coef_norm = report.coefficients.norm();
}

SolveReport solve_tsvd(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double eps) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  SolveReport report;
  report.condition_number = condition_from(sigma);
  report.threshold = sigma.size() > 0 ? eps * sigma[0] : 0.0;
  report.coefficients = Eigen::VectorXcd::Zero(a.cols());
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > 0.0 && sigma[rank] >= report.threshold) {
    ++rank;
  }
  report.numerical_rank = rank;
  if (rank > 0) {
    const Eigen::VectorXcd ub = svd.matrixU().leftCols(rank).adjoint() * b;
    const Eigen::VectorXcd scaled = ub.cwiseQuotient(sigma.head(rank).cast<cdouble>());
    report.coefficients = svd.matrixV().leftCols(rank) * scaled;
  }
  return report;
}

SolveReport solve_cpqr(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double eps) {
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  const Eigen::MatrixXcd& packed = qr.matrixQR();
  const Eigen::Index diag = std::min(a.rows(), a.cols());

  SolveReport report;
  report.condition_number = condition_number(a);
  report.coefficients = Eigen::VectorXcd::Zero(a.cols());
  const double r11 = diag > 0 ? std::abs(packed(0, 0)) : 0.0;
  report.threshold = eps * r11;
  int rank = 0;
  while (rank < diag && r11 > 0.0 && std::abs(packed(rank, rank)) >= report.threshold) {
    ++rank;
  }
  report.numerical_rank = rank;
  if (rank == 0) return report;

  Eigen::VectorXcd qtb = b;
  qtb.applyOnTheLeft(qr.householderQ().adjoint());
  const Eigen::VectorXcd head = packed.topLeftCorner(rank, rank)
                                    .triangularView<Eigen::Upper>()
                                    .solve(qtb.head(rank));
  Eigen::VectorXcd permuted = Eigen::VectorXcd::Zero(a.cols());
  permuted.head(rank) = head;
  report.coefficients = qr.colsPermutation() * permuted;
  return report;
}

}  // namespace

std::string to_string(SolverMethod m) {
  return m == SolverMethod::kTruncatedSvd ? "tsvd" : "cpqr";
}

SolverMethod solver_method_from_string(const std::string& name) {
  if (name == "tsvd") return SolverMethod::kTruncatedSvd;
  if (name == "cpqr") return SolverMethod::kPivotedQr;
  throw std::invalid_argument("unknown solver method '" + name + "'");
}

SolveReport solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b,
                  const SolverOptions& opts) {
  if (a.rows() < 1 || a.cols() < 1) throw InputError("solve: empty system");
  if (b.size() != a.rows()) throw InputError("solve: right-hand side size mismatch");
  if (!a.allFinite() || !b.allFinite()) throw InputError("solve: non-finite entries");
  if (!(opts.epsilon > 0.0 && opts.epsilon < 1.0)) {
    throw InputError("solve: threshold must lie in (0, 1)");
  }
  SolveReport report = opts.method == SolverMethod::kTruncatedSvd
                           ? solve_tsvd(a, b, opts.epsilon)
                           : solve_cpqr(a, b, opts.epsilon);
  finish(report, a, b);
  return report;
}

SolveReport solve(const LinearSystem& sys, const SolverOptions& opts) {
  return solve(sys.matrix, sys.rhs, opts);
}

double condition_number(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return std::numeric_limits<double>::infinity();
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return condition_from(svd.singularValues());
}

}  // namespace wbm
