#pragma once

#include <string>

#include <Eigen/Core>

#include "wbm/boundarydata.hpp"
#include "wbm/geometry.hpp"
#include "wbm/wavebasis.hpp"

namespace wbm {

enum class Formulation { kWeightedResidual, kCollocation };

std::string to_string(Formulation f);
Formulation formulation_from_string(const std::string& name);

struct LinearSystem {
  Eigen::MatrixXcd matrix;
  Eigen::VectorXcd rhs;
  Formulation formulation = Formulation::kCollocation;
  double gamma = 0.0;          // collocation only
  int quadrature_points = 0;   // weighted residual only

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
};

/// ceil(gamma N), computed so that exact products are not pushed up by rounding.
int collocation_rows(int n, double gamma);

/// max(factor N, 400)
int default_quadrature_points(int n, double factor = 20.0);

struct CollocationOptions {
  double gamma = 2.0;
  /// Scale row i by sqrt(2 pi |f'(t_i)| / M).
  bool arc_length_weights = false;
};

/// M = ceil(gamma N) rows at t_i = 2 pi i / M. Entry (i, j) is basis j (or its
/// normal derivative for Neumann data) at collocation point i.
LinearSystem collocation_system(const WaveBasisSpec& spec, const BoundaryCurve& curve,
                                const BoundaryCondition& bc,
                                const CollocationOptions& options = {});

/// Square N x N system from testing the boundary residual with the wave
/// functions (unconjugated), integrated with the Q-point trapezoidal rule:
///   Neumann:   a_ij = int Phi_i dPhi_j/dn ds,  b_i = int Phi_i w ds
///   Dirichlet: a_ij = int Phi_i Phi_j ds,      b_i = int Phi_i w ds
/// Requires Q >= 2N.
LinearSystem weighted_residual_system(const WaveBasisSpec& spec, const BoundaryCurve& curve,
                                      const BoundaryCondition& bc, int quadrature_points);

}  // namespace wbm
