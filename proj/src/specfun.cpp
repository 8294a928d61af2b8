#include "wbm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wbm/errors.hpp"

namespace wbm {
namespace specfun_detail {
namespace {

using Real = long double;
// Partial sums in quad precision: alternating terms near the switch point reach
// ~1e7.
__extension__ typedef __float128 Sum;

constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr Real kEulerGamma = std::numbers::egamma_v<long double>;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
}

void require_positive(double x, const char* fn) {
  require_finite(x, fn);
  if (!(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be positive, got " +
                      std::to_string(x));
  }
}

void require_nonnegative(double x, const char* fn) {
  require_finite(x, fn);
  if (x < 0.0) {
    throw DomainError(std::string(fn) + ": argument must be non-negative, got " +
                      std::to_string(x));
  }
}

}  // namespace

BesselPair series(int order, double xd) {
  const Real x = xd;
  const Real half = x / 2;
  const Real q = half * half;
  constexpr Real tiny = 1e-24L;

  if (order == 0) {
    // J0 = sum (-q)^k / (k!)^2
    // Y0 = (2/pi) [ (ln(x/2) + gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2 ]
    const Sum qs = static_cast<Sum>(q);
    Sum term = 1;
    Sum jq = 1;
    Sum ysum_q = 0;
    Sum harmonic = 0;
    for (int k = 1; k < 200; ++k) {
      term *= -qs / (static_cast<Sum>(k) * k);
      harmonic += Sum{1} / k;
      jq += term;
      ysum_q -= harmonic * term;
      const Real mag = static_cast<Real>(term < 0 ? -term : term);
      if (mag * (1 + static_cast<Real>(harmonic)) < tiny && k > q) break;
    }
    const Real j = static_cast<Real>(jq);
    const Real ysum = static_cast<Real>(ysum_q);
    Real y = std::numeric_limits<Real>::quiet_NaN();
    if (x > 0) {
      y = (2 / kPi) * ((std::log(half) + kEulerGamma) * j + ysum);
    }
    return {static_cast<double>(j), static_cast<double>(y)};
  }

  // J1 = (x/2) sum (-q)^k / (k! (k+1)!)
  // Y1 = -2/(pi x) + (2/pi) ln(x/2) J1
  //      - (1/pi) (x/2) sum (-q)^k (psi(k+1) + psi(k+2)) / (k! (k+1)!)
  // with psi(n+1) = H_n - gamma.
  const Sum qs = static_cast<Sum>(q);
  Sum term = 1;
  Sum jsum_q = 1;
  Sum harmonic_k = 0;
  Sum harmonic_k1 = 1;
  Sum hsum_q = harmonic_k + harmonic_k1;
  for (int k = 1; k < 200; ++k) {
    term *= -qs / (static_cast<Sum>(k) * (k + 1));
    harmonic_k += Sum{1} / k;
    harmonic_k1 += Sum{1} / (k + 1);
    jsum_q += term;
    hsum_q += (harmonic_k + harmonic_k1) * term;
    const Real mag = static_cast<Real>(term < 0 ? -term : term);
    if (mag * (1 + static_cast<Real>(harmonic_k1)) < tiny && k > q) break;
  }
  const Real jsum = static_cast<Real>(jsum_q);
  const Real ysum = static_cast<Real>(hsum_q) - 2 * kEulerGamma * jsum;
  const Real j = half * jsum;
  Real y = std::numeric_limits<Real>::quiet_NaN();
  if (x > 0) {
    y = -2 / (kPi * x) + (2 / kPi) * std::log(half) * j - half * ysum / kPi;
  }
  return {static_cast<double>(j), static_cast<double>(y)};
}

BesselPair asymptotic(int order, double xd) {
  // J = sqrt(2/(pi x)) (P cos chi - Q sin chi)
  // Y = sqrt(2/(pi x)) (P sin chi + Q cos chi),  chi = x - (order/2 + 1/4) pi
  const Real x = xd;
  const Real mu = 4 * static_cast<Real>(order) * order;
  Real p = 1;
  Real qsum = 0;
  Real coeff = 1;  // a_k(nu) / x^k
  Real last = std::numeric_limits<Real>::infinity();
  for (int k = 1; k < 100; ++k) {
    const Real odd = 2 * k - 1;
    coeff *= (mu - odd * odd) / (8 * k * x);
    const Real mag = std::fabs(coeff);
    if (mag >= last) break;  // past the smallest term of the divergent series
    last = mag;
    // sign pattern: P gets (-1)^{k/2} a_{2m}, Q gets (-1)^{m} a_{2m+1}
    switch (k % 4) {
      case 0: p += coeff; break;
      case 1: qsum += coeff; break;
      case 2: p -= coeff; break;
      case 3: qsum -= coeff; break;
    }
    if (mag < 1e-22L) break;
  }

  const Real c = std::cos(x);
  const Real s = std::sin(x);
  const Real r2 = std::numbers::sqrt2_v<long double>;
  Real cos_chi;
  Real sin_chi;
  if (order == 0) {
    cos_chi = (c + s) / r2;
    sin_chi = (s - c) / r2;
  } else {
    cos_chi = (s - c) / r2;
    sin_chi = -(s + c) / r2;
  }
  const Real amp = std::sqrt(2 / (kPi * x));
  return {static_cast<double>(amp * (p * cos_chi - qsum * sin_chi)),
          static_cast<double>(amp * (p * sin_chi + qsum * cos_chi))};
}

}  // namespace specfun_detail

namespace {

specfun_detail::BesselPair evaluate(int order, double x) {
  return x < specfun_detail::kAsymptoticThreshold
             ? specfun_detail::series(order, x)
             : specfun_detail::asymptotic(order, x);
}

}  // namespace

double bessel_j0(double x) {
  specfun_detail::require_nonnegative(x, "bessel_j0");
  return evaluate(0, x).j;
}

double bessel_y0(double x) {
  specfun_detail::require_positive(x, "bessel_y0");
  return evaluate(0, x).y;
}

double bessel_j1(double x) {
  specfun_detail::require_nonnegative(x, "bessel_j1");
  return evaluate(1, x).j;
}

double bessel_y1(double x) {
  specfun_detail::require_positive(x, "bessel_y1");
  return evaluate(1, x).y;
}

std::complex<double> hankel1_0(double x) {
  specfun_detail::require_positive(x, "hankel1_0");
  const auto v = evaluate(0, x);
  return {v.j, v.y};
}

std::complex<double> hankel1_1(double x) {
  specfun_detail::require_positive(x, "hankel1_1");
  const auto v = evaluate(1, x);
  return {v.j, v.y};
}

}  // namespace wbm
