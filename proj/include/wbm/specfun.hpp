#pragma once

#include <complex>

namespace wbm {

// Bessel functions of the first and second kind, orders 0 and 1, for real
// arguments. Small arguments use the ascending series in extended precision,
// large arguments the Hankel asymptotic expansion.

double bessel_j0(double x);
double bessel_y0(double x);
double bessel_j1(double x);
double bessel_y1(double x);

/// H0^(1)(x) = J0(x) + i Y0(x), x > 0.
std::complex<double> hankel1_0(double x);
/// H1^(1)(x) = J1(x) + i Y1(x), x > 0. Note d/dx H0^(1) = -H1^(1).
std::complex<double> hankel1_1(double x);

namespace specfun_detail {

/// Switch point between the series and the asymptotic branch.
inline constexpr double kAsymptoticThreshold = 17.0;

struct BesselPair {
  double j;
  double y;  // NaN when only the first kind was requested (x == 0)
};

BesselPair series(int order, double x);
BesselPair asymptotic(int order, double x);

}  // namespace specfun_detail
}  // namespace wbm
