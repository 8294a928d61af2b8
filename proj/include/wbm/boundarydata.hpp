#pragma once

#include <complex>
#include <string>

#include <Eigen/Core>

#include "wbm/geometry.hpp"

namespace wbm {

enum class FieldKind { kPlaneWave, kPointSource, kConstant };

std::string to_string(FieldKind kind);
FieldKind field_kind_from_string(const std::string& name);

/// Incident field used to generate boundary data.
///   plane wave:   e^{i k (x cos(theta) + y sin(theta))}
///   point source: H0^(1)(k |p - p_s|)
///   constant:     c (boundary data only, not a Helmholtz solution)
struct AnalyticField {
  FieldKind kind = FieldKind::kConstant;
  double k = 0.0;
  double angle = 0.0;
  Point2 source{0.0, 0.0};
  std::complex<double> value{1.0, 0.0};
  /// Overall factor applied to plane-wave and point-source fields.
  std::complex<double> amplitude{1.0, 0.0};

  static AnalyticField plane_wave(double k, double angle);
  static AnalyticField point_source(double k, Point2 source);
  static AnalyticField constant(std::complex<double> c);
};

/// Throws DomainError at the source of a point-source field.
std::complex<double> field_value(const AnalyticField& f, const Point2& p);
Eigen::Vector2cd field_gradient(const AnalyticField& f, const Point2& p);

enum class BoundaryType { kDirichlet, kNeumann };

std::string to_string(BoundaryType type);
BoundaryType boundary_type_from_string(const std::string& name);

struct BoundaryCondition {
  BoundaryType type = BoundaryType::kDirichlet;
  AnalyticField field;

  BoundaryCondition() = default;
  /// Throws std::invalid_argument for Neumann data from a constant field.
  BoundaryCondition(BoundaryType type, AnalyticField field);
};

/// Dirichlet: field value. Neumann: field gradient . n.
std::complex<double> trace(const BoundaryCondition& bc, const Point2& p, const Point2& n);

/// Throws DomainError if a point source lies within 1e-9 of the sampled boundary.
void check_source_clearance(const BoundaryCondition& bc, const BoundaryCurve& curve);

}  // namespace wbm
