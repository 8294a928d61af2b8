#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "wbm/errors.hpp"
#include "wbm/solver.hpp"
#include "oracles.hpp"

using wbm::SolverOptions;

namespace {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat random_matrix(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> g;
  Mat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = cd(g(rng), g(rng));
  return m;
}

Vec random_vector(std::mt19937_64& rng, int n) { return random_matrix(rng, n, 1).col(0); }

Mat orthonormal(std::mt19937_64& rng, int r, int c) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(rng, r, c));
  return qr.householderQ() * Mat::Identity(r, c);
}

/// U diag(sigma) V^* with random unitary factors.
Mat with_singular_values(std::mt19937_64& rng, int r, int c, const Eigen::VectorXd& sigma) {
  const int k = static_cast<int>(sigma.size());
  return orthonormal(rng, r, k) * sigma.cast<cd>().asDiagonal() *
         orthonormal(rng, c, k).adjoint();
}

// sqrt(lambda_max / lambda_min) of A^* A in 113-bit precision. The Hermitian
// Gram matrix is embedded as the real symmetric [[Re, -Im], [Im, Re]] (same
// eigenvalues, each repeated twice) and diagonalized by cyclic Jacobi rotations.
double normal_equations_condition(const Mat& a) {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  const int dim = 2 * n;
  std::vector<Quad> g(dim * dim);
  auto at = [&](int i, int j) -> Quad& { return g[i * dim + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quad re = 0;
      Quad im = 0;
      for (int r = 0; r < m; ++r) {
        const Quad ar = a(r, i).real(), ai = a(r, i).imag();
        const Quad br = a(r, j).real(), bi = a(r, j).imag();
        re += ar * br + ai * bi;  // conj(a_ri) a_rj
        im += ar * bi - ai * br;
      }
      at(i, j) = re;
      at(i + n, j + n) = re;
      at(i + n, j) = im;
      at(i, j + n) = -im;
    }
  }
  for (int sweep = 0; sweep < 50; ++sweep) {
    Quad off = 0;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) off += at(p, q) * at(p, q);
    Quad diag = 0;
    for (int p = 0; p < dim; ++p) diag += at(p, p) * at(p, p);
    if (off <= Quad("1e-70") * diag) break;
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        if (at(p, q) == 0) continue;
        const Quad theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        const Quad t = (theta >= 0 ? 1 : -1) / (abs(theta) + sqrt(theta * theta + 1));
        const Quad c = 1 / sqrt(t * t + 1);
        const Quad s = t * c;
        for (int k = 0; k < dim; ++k) {
          const Quad gkp = at(k, p), gkq = at(k, q);
          at(k, p) = c * gkp - s * gkq;
          at(k, q) = s * gkp + c * gkq;
        }
        for (int k = 0; k < dim; ++k) {
          const Quad gpk = at(p, k), gqk = at(q, k);
          at(p, k) = c * gpk - s * gqk;
          at(q, k) = s * gpk + c * gqk;
        }
      }
    }
  }
  Quad lo = at(0, 0);
  Quad hi = at(0, 0);
  for (int p = 1; p < dim; ++p) {
    lo = std::min(lo, at(p, p));
    hi = std::max(hi, at(p, p));
  }
  return static_cast<double>(sqrt(hi / lo));
}

}  // namespace

TEST_CASE("identity system") {
  const Mat a = Mat::Identity(5, 5);
  const Vec b = Vec::LinSpaced(5, cd(1, 2), cd(-3, 0.5));
  for (auto opts : {SolverOptions::tsvd(), SolverOptions::cpqr()}) {
    const auto r = wbm::solve(a, b, opts);
    CHECK((r.coefficients - b).norm() < 1e-15);
    CHECK(r.residual_norm < 1e-15);
    CHECK(r.numerical_rank == 5);
    CHECK(r.condition_number == doctest::Approx(1.0));
  }
}

TEST_CASE("rank-one ones matrix gives the minimal-norm solution") {
  const Mat a = Mat::Ones(2, 2);
  const Vec b = Vec::Constant(2, cd(2, 0));
  const auto r = wbm::solve(a, b, SolverOptions::tsvd());
  CHECK((r.coefficients - Vec::Ones(2)).norm() < 1e-14);
  CHECK(r.numerical_rank == 1);
  CHECK(r.residual_norm < 1e-14);
}

TEST_CASE("truncation drops tiny singular values") {
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-20;
  const Vec b = Vec::Ones(2);
  for (auto opts : {SolverOptions::tsvd(1e-14), SolverOptions::cpqr(1e-14)}) {
    const auto r = wbm::solve(a, b, opts);
    CHECK(std::abs(r.coefficients[0] - 1.0) < 1e-15);
    CHECK(r.coefficients[1] == cd(0, 0));
    CHECK(r.numerical_rank == 1);
    CHECK(r.residual_norm == doctest::Approx(1.0));
    CHECK(r.condition_number == doctest::Approx(1e20));
  }
}

TEST_CASE("condition numbers") {
  CHECK(wbm::condition_number(Mat::Identity(4, 4)) == doctest::Approx(1.0));
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 10.0;
  d(1, 1) = 0.1;
  CHECK(wbm::condition_number(d) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(std::isinf(wbm::condition_number(Mat::Zero(3, 2))));

  std::mt19937_64 rng(41);
  const double plain = wbm::condition_number(random_matrix(rng, 30, 20));
  const Mat r = random_matrix(rng, 30, 20);
  CHECK(wbm::condition_number(r) == doctest::Approx(normal_equations_condition(r)).epsilon(1e-6));
  CHECK(plain < 1e8);
  for (double kappa : {1e3, 1e6, 5e7}) {
    Eigen::VectorXd sigma(20);
    for (int i = 0; i < 20; ++i) sigma[i] = std::pow(kappa, -i / 19.0);
    const Mat a = with_singular_values(rng, 30, 20, sigma);
    const double got = wbm::condition_number(a);
    const double oracle = normal_equations_condition(a);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-6));
  }
}

TEST_CASE("zero matrix and invalid input") {
  const auto r = wbm::solve(Mat::Zero(3, 2), Vec::Ones(3), SolverOptions::tsvd());
  CHECK(r.numerical_rank == 0);
  CHECK(r.coefficients.norm() == 0.0);
  CHECK(std::isinf(r.condition_number));
  const auto q = wbm::solve(Mat::Zero(3, 2), Vec::Ones(3), SolverOptions::cpqr());
  CHECK(q.numerical_rank == 0);
  CHECK(q.coefficients.norm() == 0.0);

  Mat bad = Mat::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(wbm::solve(bad, Vec::Ones(2), SolverOptions::tsvd()), wbm::InputError);
  CHECK_THROWS_AS(wbm::solve(Mat::Identity(2, 2), Vec::Ones(3), SolverOptions::tsvd()),
                  wbm::InputError);
  CHECK_THROWS_AS(wbm::solve(Mat(0, 0), Vec(0), SolverOptions::tsvd()), wbm::InputError);
  CHECK_THROWS_AS(wbm::solve(Mat::Identity(2, 2), Vec::Ones(2), SolverOptions::tsvd(0.0)),
                  wbm::InputError);
  CHECK_THROWS_AS(wbm::solve(Mat::Identity(2, 2), Vec::Ones(2), SolverOptions::cpqr(1.0)),
                  wbm::InputError);
}

TEST_CASE("tsvd matches the factored pseudo-inverse on rank-deficient systems") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat bf = random_matrix(rng, 20, 5);
    const Mat cf = random_matrix(rng, 5, 10);
    const Mat a = bf * cf;
    const Vec b = random_vector(rng, 20);
    const auto r = wbm::solve(a, b, SolverOptions::tsvd(1e-10));
    CHECK(r.numerical_rank == 5);
    const Vec oracle = wbm_test::factored_pinv_solve(bf, cf, b);
    CHECK((r.coefficients - oracle).norm() <= 1e-10 * oracle.norm());

    // Retained range is range(B): A alpha equals the orthogonal projection of b.
    Eigen::HouseholderQR<Mat> qr(bf);
    const Mat q = qr.householderQ() * Mat::Identity(20, 5);
    CHECK((a * r.coefficients - q * (q.adjoint() * b)).norm() <= 1e-12 * b.norm());
  }
}

TEST_CASE("tsvd solution has minimal norm among equal-residual solutions") {
  std::mt19937_64 rng(202);
  const Mat a = random_matrix(rng, 20, 5) * random_matrix(rng, 5, 10);
  const Vec b = random_vector(rng, 20);
  const auto r = wbm::solve(a, b, SolverOptions::tsvd(1e-10));
  Eigen::FullPivLU<Mat> lu(a);
  const Mat kernel = lu.kernel();
  REQUIRE(kernel.cols() == 5);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec z = r.coefficients + kernel * random_vector(rng, 5);
    const double res = (a * z - b).norm();
    if (std::abs(res - r.residual_norm) > 1e-12 * std::max(1.0, b.norm())) continue;
    CHECK(r.coef_norm <= z.norm() * (1 + 1e-12));
    ++compared;
  }
  CHECK(compared >= 900);
}

TEST_CASE("frame residual bound") {
  // Two orthonormal bases of nearly the same subspace, concatenated.
  std::mt19937_64 rng(303);
  const int m = 60;
  const int n = 20;
  const Mat phi1 = orthonormal(rng, m, n);
  Eigen::HouseholderQR<Mat> qr(phi1 * random_matrix(rng, n, n) + 1e-7 * random_matrix(rng, m, n));
  const Mat phi2 = qr.householderQ() * Mat::Identity(m, n);
  Mat a(m, 2 * n);
  a << phi1, phi2;
  const double sigma_max = Eigen::JacobiSVD<Mat>(a).singularValues()[0];
  for (double eps : {1e-4, 1e-8, 1e-12}) {
    const Vec z = random_vector(rng, 2 * n);
    const Vec b = a * z + 1e-10 * random_vector(rng, m);
    const auto r = wbm::solve(a, b, SolverOptions::tsvd(eps));
    const double planted = (a * z - b).norm();
    CHECK(r.residual_norm <= planted + eps * z.norm() * sigma_max);
  }
}

TEST_CASE("cpqr and tsvd agree on well-conditioned systems") {
  std::mt19937_64 rng(404);
  for (double kappa : {1.0, 1e2, 1e4, 5e5}) {
    Eigen::VectorXd sigma(12);
    for (int i = 0; i < 12; ++i) sigma[i] = std::pow(kappa, -i / 11.0);
    const Mat a = with_singular_values(rng, 30, 12, sigma);
    const Vec b = random_vector(rng, 30);
    const auto t = wbm::solve(a, b, SolverOptions::tsvd());
    const auto q = wbm::solve(a, b, SolverOptions::cpqr());
    CHECK(q.numerical_rank == 12);
    CHECK((t.coefficients - q.coefficients).norm() <= 1e-10 * t.coef_norm);
  }
}

TEST_CASE("report norms") {
  std::mt19937_64 rng(505);
  const Mat a = random_matrix(rng, 15, 8);
  const Vec b = random_vector(rng, 15);
  const auto r = wbm::solve(a, b, SolverOptions::tsvd());
  CHECK(r.coef_norm == doctest::Approx(r.coefficients.norm()));
  CHECK(r.residual_norm == doctest::Approx((a * r.coefficients - b).norm()));
  CHECK(r.threshold > 0.0);
  CHECK(wbm::solver_method_from_string("cpqr") == wbm::SolverMethod::kPivotedQr);
  CHECK(wbm::to_string(wbm::SolverMethod::kTruncatedSvd) == "tsvd");
  CHECK_THROWS(wbm::solver_method_from_string("lu"));
}
