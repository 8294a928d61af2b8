#pragma once

#include <complex>
#include <utility>

#include <Eigen/Core>

#include "wbm/geometry.hpp"

namespace wbm {

using cdouble = std::complex<double>;

struct TruncationCounts {
  int nm;
  int nn;
};

/// Nm = ceil(k T Lx / pi), Nn = ceil(k T Ly / pi).
TruncationCounts truncation_counts(double k, double truncation, const BoundingBox& box);

/// Wave function set on a bounding box for wavenumber k, truncated by T.
struct WaveBasisSpec {
  BoundingBox box;
  double k = 0.0;
  double truncation = 0.0;
  int nm = 0;
  int nn = 0;

  WaveBasisSpec() = default;
  WaveBasisSpec(const BoundingBox& box, double k, double truncation);

  /// 2 (Nm + 1) + 2 (Nn + 1)
  int size() const { return 2 * (nm + 1) + 2 * (nn + 1); }
};

/// Family 1/2: cos(kx x) e^{-i ky y} with ky = +-sqrt(k^2 - kx^2), kx = m pi / Lx.
/// Family 3/4: e^{-i kx x} cos(ky y) with kx = +-sqrt(k^2 - ky^2), ky = n pi / Ly.
struct BasisIndex {
  int family = 1;
  int order = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Position in the coefficient vector: family 1 orders 0..Nm, family 2,
/// family 3 orders 0..Nn, family 4.
int linear_index(const WaveBasisSpec& spec, BasisIndex idx);
BasisIndex basis_index(const WaveBasisSpec& spec, int j);

/// Throws std::out_of_range for an index outside the truncated set.
void check_index(const WaveBasisSpec& spec, BasisIndex idx);

/// (kx, ky). In the evanescent regime family 1 (3) gets ky (kx) = -i beta
/// and family 2 (4) gets +i beta, beta = sqrt(kx^2 - k^2), so each pair holds
/// one function decaying away from each of the two opposite box edges.
std::pair<cdouble, cdouble> wavenumbers(const WaveBasisSpec& spec, BasisIndex idx);

/// Scaled wave function. Evanescent factors are multiplied by the reciprocal
/// of their supremum over the box, so |value| <= 1 on the box.
/// Coordinates are taken relative to the box origin.
cdouble evaluate(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p);

/// (d/dx, d/dy) of the scaled wave function.
Eigen::Vector2cd gradient(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p);

/// gradient . n for a unit vector n. Throws std::invalid_argument otherwise.
cdouble normal_derivative(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p,
                          const Point2& n);

/// Precomputed wavenumbers and scalings for every function of a spec.
/// Row-wise evaluation helpers used by assembly and solution evaluation.
class WaveBasis {
 public:
  explicit WaveBasis(const WaveBasisSpec& spec);

  const WaveBasisSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(terms_.size()); }

  /// Values of all N functions at p.
  Eigen::VectorXcd values(const Point2& p) const;
  /// Normal derivatives of all N functions at p.
  Eigen::VectorXcd normal_derivatives(const Point2& p, const Point2& n) const;
  /// Values and normal derivatives in one pass.
  void evaluate_row(const Point2& p, const Point2& n, Eigen::Ref<Eigen::VectorXcd> value,
                    Eigen::Ref<Eigen::VectorXcd> dn) const;

 private:
  struct Term {
    bool x_standing;  // families 1, 2
    double standing;  // real wavenumber of the cosine factor
    cdouble travel;   // complex wavenumber of the exponential factor
    double log_scale; // log of the evanescent normalization
  };

  WaveBasisSpec spec_;
  std::vector<Term> terms_;
};

}  // namespace wbm
