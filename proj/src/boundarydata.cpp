#include "wbm/boundarydata.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wbm/errors.hpp"
#include "wbm/specfun.hpp"

namespace wbm {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double source_distance(const AnalyticField& f, const Point2& p) {
  const double r = (p - f.source).norm();
  if (!(r > 0.0)) throw DomainError("field evaluated at the point source");
  return r;
}

}  // namespace

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::kPlaneWave: return "plane-wave";
    case FieldKind::kPointSource: return "point-source";
    case FieldKind::kConstant: return "constant";
  }
  return "unknown";
}

FieldKind field_kind_from_string(const std::string& name) {
  if (name == "plane-wave") return FieldKind::kPlaneWave;
  if (name == "point-source") return FieldKind::kPointSource;
  if (name == "constant") return FieldKind::kConstant;
  throw std::invalid_argument("unknown field kind '" + name + "'");
}

std::string to_string(BoundaryType type) {
  return type == BoundaryType::kDirichlet ? "dirichlet" : "neumann";
}

BoundaryType boundary_type_from_string(const std::string& name) {
  if (name == "dirichlet") return BoundaryType::kDirichlet;
  if (name == "neumann") return BoundaryType::kNeumann;
  throw std::invalid_argument("unknown boundary condition type '" + name + "'");
}

AnalyticField AnalyticField::plane_wave(double k, double angle) {
  AnalyticField f;
  f.kind = FieldKind::kPlaneWave;
  f.k = k;
  f.angle = angle;
  return f;
}

AnalyticField AnalyticField::point_source(double k, Point2 source) {
  AnalyticField f;
  f.kind = FieldKind::kPointSource;
  f.k = k;
  f.source = source;
  return f;
}

AnalyticField AnalyticField::constant(cd c) {
  AnalyticField f;
  f.kind = FieldKind::kConstant;
  f.value = c;
  return f;
}

cd field_value(const AnalyticField& f, const Point2& p) {
  switch (f.kind) {
    case FieldKind::kPlaneWave:
      return f.amplitude *
             std::exp(kI * f.k * (p.x() * std::cos(f.angle) + p.y() * std::sin(f.angle)));
    case FieldKind::kPointSource:
      return f.amplitude * hankel1_0(f.k * source_distance(f, p));
    case FieldKind::kConstant: return f.value;
  }
  return 0.0;
}

Eigen::Vector2cd field_gradient(const AnalyticField& f, const Point2& p) {
  switch (f.kind) {
    case FieldKind::kPlaneWave: {
      const cd v = field_value(f, p);
      return {kI * f.k * std::cos(f.angle) * v, kI * f.k * std::sin(f.angle) * v};
    }
    case FieldKind::kPointSource: {
      const double r = source_distance(f, p);
      const cd h1 = f.amplitude * hankel1_1(f.k * r);
      const Point2 dir = (p - f.source) / r;
      return {-f.k * h1 * dir.x(), -f.k * h1 * dir.y()};
    }
    case FieldKind::kConstant: return Eigen::Vector2cd::Zero();
  }
  return Eigen::Vector2cd::Zero();
}

BoundaryCondition::BoundaryCondition(BoundaryType type_, AnalyticField field_)
    : type(type_), field(field_) {
  if (type == BoundaryType::kNeumann && field.kind == FieldKind::kConstant) {
    throw std::invalid_argument("constant fields can only be used as Dirichlet data");
  }
}

cd trace(const BoundaryCondition& bc, const Point2& p, const Point2& n) {
  if (bc.type == BoundaryType::kDirichlet) return field_value(bc.field, p);
  const auto g = field_gradient(bc.field, p);
  return g.x() * n.x() + g.y() * n.y();
}

void check_source_clearance(const BoundaryCondition& bc, const BoundaryCurve& curve) {
  if (bc.field.kind != FieldKind::kPointSource) return;
  constexpr int kSamples = 4096;
  for (int j = 0; j < kSamples; ++j) {
    const Point2 p = curve.point(2.0 * std::numbers::pi * j / kSamples);
    if ((p - bc.field.source).norm() <= 1e-9) {
      throw DomainError("point source lies on the boundary");
    }
  }
}

}  // namespace wbm
