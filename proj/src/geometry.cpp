#include "wbm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wbm/errors.hpp"

namespace wbm {
namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cd kI{0.0, 1.0};

cd to_complex(const Point2& p) { return {p.x(), p.y()}; }
Point2 to_point(cd z) { return {z.real(), z.imag()}; }

}  // namespace

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kDisk: return "disk";
    case CurveKind::kCrescent: return "crescent";
    case CurveKind::kInvertedEllipse: return "inverted-ellipse";
  }
  return "unknown";
}

CurveKind curve_kind_from_string(const std::string& name) {
  if (name == "disk") return CurveKind::kDisk;
  if (name == "crescent") return CurveKind::kCrescent;
  if (name == "inverted-ellipse") return CurveKind::kInvertedEllipse;
  throw std::invalid_argument("unknown curve kind '" + name + "'");
}

BoundaryCurve::BoundaryCurve(CurveKind kind, Point2 center, double radius,
                             double a, double b, double tau)
    : kind_(kind), center_(center), radius_(radius), a_(a), b_(b), tau_(tau) {
  constexpr int kAreaSamples = 512;
  double twice_area = 0.0;
  Point2 prev = point(0.0);
  for (int j = 1; j <= kAreaSamples; ++j) {
    const Point2 cur = point(kTwoPi * j / kAreaSamples);
    twice_area += prev.x() * cur.y() - cur.x() * prev.y();
    prev = cur;
  }
  orientation_ = twice_area >= 0.0 ? 1 : -1;
}

BoundaryCurve BoundaryCurve::disk(Point2 center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
  return BoundaryCurve(CurveKind::kDisk, center, radius, 0.0, 0.0, 0.0);
}

BoundaryCurve BoundaryCurve::crescent(Point2 z0, double a, double b) {
  // The pole of a/(e^{it}+b) must stay off the unit circle.
  if (!(std::abs(b) < 1.0)) throw std::invalid_argument("crescent requires |b| < 1");
  return BoundaryCurve(CurveKind::kCrescent, z0, 0.0, a, b, 0.0);
}

BoundaryCurve BoundaryCurve::inverted_ellipse(Point2 z0, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("inverted ellipse requires 0 < tau < 1");
  }
  return BoundaryCurve(CurveKind::kInvertedEllipse, z0, 0.0, 0.0, 0.0, tau);
}

cd BoundaryCurve::position(double t) const {
  const cd e = std::exp(kI * t);
  const cd z0 = to_complex(center_);
  switch (kind_) {
    case CurveKind::kDisk: return z0 + radius_ * e;
    case CurveKind::kCrescent: return z0 + e - a_ / (e + b_);
    case CurveKind::kInvertedEllipse: return z0 + e / (1.0 + tau_ * e * e);
  }
  return z0;
}

cd BoundaryCurve::derivative(double t) const {
  const cd e = std::exp(kI * t);
  switch (kind_) {
    case CurveKind::kDisk: return kI * radius_ * e;
    case CurveKind::kCrescent: {
      const cd d = e + b_;
      return kI * e * (1.0 + a_ / (d * d));
    }
    case CurveKind::kInvertedEllipse: {
      const cd e2 = e * e;
      const cd d = 1.0 + tau_ * e2;
      return kI * e * (1.0 - tau_ * e2) / (d * d);
    }
  }
  return 0.0;
}

Point2 BoundaryCurve::point(double t) const { return to_point(position(t)); }

Point2 BoundaryCurve::unit_normal(double t) const {
  const cd d = derivative(t);
  const double s = std::abs(d);
  if (s < 1e-12) {
    throw DegenerateCurveError("curve derivative vanishes at t = " + std::to_string(t));
  }
  // Tangent rotated by -pi/2 is outward for a counterclockwise curve.
  return Point2(d.imag(), -d.real()) * (orientation_ / s);
}

std::vector<BoundarySample> sample_boundary(const BoundaryCurve& curve, int count,
                                            double offset) {
  if (count < 1) throw std::invalid_argument("sample_boundary: count must be >= 1");
  std::vector<BoundarySample> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double t = kTwoPi * j / count + offset;
    out.push_back({t, curve.point(t), curve.unit_normal(t), curve.speed(t)});
  }
  return out;
}

double signed_area(const std::vector<BoundarySample>& samples) {
  double twice = 0.0;
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = samples[i].point;
    const Point2& q = samples[(i + 1) % n].point;
    twice += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * twice;
}

BoundingBox::BoundingBox(Point2 origin_, double lx_, double ly_)
    : origin(origin_), lx(lx_), ly(ly_) {
  if (!(lx > 0.0 && ly > 0.0)) {
    throw std::invalid_argument("bounding box sides must be positive");
  }
}

BoundingBox BoundingBox::centered(Point2 center, double lx, double ly) {
  return BoundingBox(center - Point2(lx / 2, ly / 2), lx, ly);
}

bool BoundingBox::contains(const Point2& p, double tol) const {
  return p.x() >= origin.x() - tol && p.x() <= origin.x() + lx + tol &&
         p.y() >= origin.y() - tol && p.y() <= origin.y() + ly + tol;
}

bool BoundingBox::contains_curve(const BoundaryCurve& curve, int samples,
                                 double tol) const {
  for (int j = 0; j < samples; ++j) {
    if (!contains(curve.point(kTwoPi * j / samples), tol)) return false;
  }
  return true;
}

SingularityInfo schwartz_singularities(const BoundaryCurve& curve,
                                       const BoundingBox& box) {
  std::vector<std::pair<cd, SingularityKind>> raw;
  const cd z0 = to_complex(curve.center());
  switch (curve.kind()) {
    case CurveKind::kDisk: break;
    case CurveKind::kCrescent: {
      const cd offset = 2.0 * kI * std::sqrt(curve.a());
      raw.emplace_back(z0 - curve.b() + offset, SingularityKind::kBranchPoint);
      raw.emplace_back(z0 - curve.b() - offset, SingularityKind::kBranchPoint);
      raw.emplace_back(z0 - curve.a() / curve.b(), SingularityKind::kPole);
      break;
    }
    case CurveKind::kInvertedEllipse: {
      const double offset = std::sqrt(1.0 / (4.0 * curve.tau()));
      raw.emplace_back(z0 + offset, SingularityKind::kBranchPoint);
      raw.emplace_back(z0 - offset, SingularityKind::kBranchPoint);
      break;
    }
  }

  SingularityInfo info;
  if (raw.empty()) return info;
  constexpr int kDistanceSamples = 10000;
  std::vector<Point2> pts;
  pts.reserve(kDistanceSamples);
  for (int j = 0; j < kDistanceSamples; ++j) {
    pts.push_back(curve.point(kTwoPi * j / kDistanceSamples));
  }
  for (const auto& [z, kind] : raw) {
    const Point2 p = to_point(z);
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& q : pts) dmin = std::min(dmin, (q - p).norm());
    info.singularities.push_back({p, kind, box.contains(p), dmin});
  }
  return info;
}

}  // namespace wbm
