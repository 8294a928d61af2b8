#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace wbm {

using Point2 = Eigen::Vector2d;

enum class CurveKind { kDisk, kCrescent, kInvertedEllipse };

std::string to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& name);

/// Closed analytic curve f: [0, 2pi) -> C, identified with R^2.
///
///   disk:              f(t) = c + r e^{it}
///   crescent:          f(t) = z0 + e^{it} - a / (e^{it} + b)
///   inverted ellipse:  f(t) = z0 + e^{it} / (1 + tau e^{2it})
///
/// The outward normal is fixed once at construction from the sign of the
/// enclosed area, so the parameterization direction does not matter.
class BoundaryCurve {
 public:
  static BoundaryCurve disk(Point2 center, double radius);
  static BoundaryCurve crescent(Point2 z0, double a, double b);
  static BoundaryCurve inverted_ellipse(Point2 z0, double tau);

  CurveKind kind() const { return kind_; }
  /// Disk center or z0.
  const Point2& center() const { return center_; }
  double radius() const { return radius_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double tau() const { return tau_; }

  std::complex<double> position(double t) const;
  /// f'(t), analytic.
  std::complex<double> derivative(double t) const;

  Point2 point(double t) const;
  /// |f'(t)|, the arc-length Jacobian.
  double speed(double t) const { return std::abs(derivative(t)); }
  /// Outward unit normal. Throws DegenerateCurveError if |f'(t)| < 1e-12.
  Point2 unit_normal(double t) const;

  /// +1 if increasing t runs counterclockwise, -1 otherwise.
  int orientation() const { return orientation_; }

 private:
  BoundaryCurve(CurveKind kind, Point2 center, double radius, double a, double b,
                double tau);

  CurveKind kind_;
  Point2 center_;
  double radius_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double tau_ = 0.0;
  int orientation_ = 1;
};

struct BoundarySample {
  double t;
  Point2 point;
  Point2 normal;
  double speed;
};

/// M samples at t_j = 2 pi j / M + offset, j = 0..M-1.
std::vector<BoundarySample> sample_boundary(const BoundaryCurve& curve, int count,
                                            double offset = 0.0);

/// Signed area of the polygon through the samples (shoelace formula).
double signed_area(const std::vector<BoundarySample>& samples);

/// Axis-aligned box [x0, x0 + lx] x [y0, y0 + ly].
struct BoundingBox {
  Point2 origin{0.0, 0.0};
  double lx = 1.0;
  double ly = 1.0;

  BoundingBox() = default;
  BoundingBox(Point2 origin, double lx, double ly);

  static BoundingBox centered(Point2 center, double lx, double ly);

  Point2 center() const { return origin + Point2(lx / 2, ly / 2); }
  bool contains(const Point2& p, double tol = 1e-12) const;
  /// True when every one of `samples` boundary points lies in the box.
  bool contains_curve(const BoundaryCurve& curve, int samples = 4096,
                      double tol = 1e-12) const;
};

enum class SingularityKind { kPole, kBranchPoint };

struct Singularity {
  Point2 location;
  SingularityKind kind;
  bool inside_box;
  double distance_to_curve;
};

struct SingularityInfo {
  std::vector<Singularity> singularities;
};

/// Closed-form singularities of the Schwartz function of the curve.
/// Crescent: branch points z0 - b +- 2i sqrt(a), pole z0 - a/b.
/// Inverted ellipse: branch points z0 +- sqrt(1/(4 tau)).
/// Disk: none. Distances are the minimum over 10^4 boundary samples.
SingularityInfo schwartz_singularities(const BoundaryCurve& curve,
                                       const BoundingBox& box);

}  // namespace wbm
