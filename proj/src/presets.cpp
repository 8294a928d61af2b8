#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wbm/csv.hpp"
#include "wbm/experiments.hpp"

namespace wbm {
namespace {

std::vector<double> t_range(double lo, double hi, double step = 1.0) {
  std::vector<double> out;
  for (double t = lo; t <= hi + 1e-9; t += step) out.push_back(t);
  return out;
}

std::string label(const std::string& preset, const std::string& variant) {
  return preset + "/" + variant;
}

// z0 that centers the crescent's horizontal and vertical extent at `center`.
Point2 crescent_origin_centered_at(const Point2& center, double a, double b) {
  const BoundaryCurve probe = BoundaryCurve::crescent({0.0, 0.0}, a, b);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  constexpr int kSamples = 20000;
  for (int j = 0; j < kSamples; ++j) {
    const Point2 p = probe.point(2.0 * std::numbers::pi * j / kSamples);
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  return center - Point2((xmin + xmax) / 2, (ymin + ymax) / 2);
}

Preset disk_boxsize(double k) {
  Preset p{"disk-boxsize",
           "unit disk centred in square boxes of edge 2, 2.5, 3, 3.5; Neumann data "
           "from a plane wave at 0.3 rad",
           {}};
  for (const double edge : {2.0, 2.5, 3.0, 3.5}) {
    ExperimentConfig c;
    c.name = label(p.name, "L=" + format_double(edge));
    c.box = BoundingBox({0.0, 0.0}, edge, edge);
    c.curve = BoundaryCurve::disk(c.box.center(), 1.0);
    c.k = k;
    c.bc = BoundaryCondition(BoundaryType::kNeumann, AnalyticField::plane_wave(k, 0.3));
    c.gamma = 2.0;
    c.t_sweep = t_range(1, 32);
    c.n_points = 3000;
    p.variants.push_back(std::move(c));
  }
  return p;
}

Preset disk_pointsource(double k) {
  Preset p{"disk-pointsource",
           "disk of radius 1 at (1.5, 1.5) in [0,3]^2; Dirichlet data H0(k|p - p_s|) "
           "with y_s = 1.5",
           {}};
  for (const double xs : {-1.0, -0.01, 0.01, 0.2, 0.4}) {
    ExperimentConfig c;
    c.name = label(p.name, "xs=" + format_double(xs));
    c.box = BoundingBox({0.0, 0.0}, 3.0, 3.0);
    c.curve = BoundaryCurve::disk({1.5, 1.5}, 1.0);
    c.k = k;
    c.bc = BoundaryCondition(BoundaryType::kDirichlet,
                             AnalyticField::point_source(k, {xs, 1.5}));
    c.t_sweep = t_range(1, 40);
    c.n_points = 3000;
    p.variants.push_back(std::move(c));
  }
  return p;
}

struct CrescentParams {
  const char* tag;
  double a;
  double b;
};

constexpr CrescentParams kCrescents[] = {{"I", 0.5, 0.5}, {"II", 0.4, 0.6}, {"III", 0.1, 0.9}};

Preset crescent_const(double k) {
  Preset p{"crescent-const",
           "crescents I-III with z0 = 1.5+1.5i in [0,3]^2; constant Dirichlet data", {}};
  for (const auto& cp : kCrescents) {
    ExperimentConfig c;
    c.name = label(p.name, cp.tag);
    c.box = BoundingBox({0.0, 0.0}, 3.0, 3.0);
    c.curve = BoundaryCurve::crescent({1.5, 1.5}, cp.a, cp.b);
    c.k = k;
    c.bc = BoundaryCondition(BoundaryType::kDirichlet, AnalyticField::constant(1.0));
    c.t_sweep = t_range(1, 24);
    c.n_points = 3000;
    p.variants.push_back(std::move(c));
  }
  return p;
}

Preset crescent_tallbox(double k) {
  // The crescent is re-centred on the box centre: with z0 = 1.5+1.5i it would
  // lie outside the 1.4 x 3.5 box, and crescent II is only 1.37 wide.
  Preset p{"crescent-tallbox",
           "crescents I and II in a 1.4 x 3.5 box centred at 0.64+1.75i that excludes "
           "the Schwartz pole; each crescent is re-centred so its extent is centred in "
           "the box; constant Dirichlet data",
           {}};
  const Point2 center(0.64, 1.75);
  for (const auto& cp : kCrescents) {
    if (std::string(cp.tag) == "III") continue;
    ExperimentConfig c;
    c.name = label(p.name, cp.tag);
    c.box = BoundingBox::centered(center, 1.4, 3.5);
    c.curve = BoundaryCurve::crescent(crescent_origin_centered_at(center, cp.a, cp.b),
                                      cp.a, cp.b);
    c.k = k;
    c.bc = BoundaryCondition(BoundaryType::kDirichlet, AnalyticField::constant(1.0));
    c.t_sweep = t_range(2, 50, 2);
    c.n_points = 3000;
    p.variants.push_back(std::move(c));
  }
  return p;
}

Preset inverted_ellipse(double k) {
  Preset p{"inverted-ellipse",
           "inverted ellipses tau = 0.25, 0.35 with z0 = 1+1.75i in [0,2]x[0,3.5]; "
           "constant Dirichlet data; gamma = 4",
           {}};
  for (const double tau : {0.25, 0.35}) {
    ExperimentConfig c;
    c.name = label(p.name, "tau=" + format_double(tau));
    c.box = BoundingBox({0.0, 0.0}, 2.0, 3.5);
    c.curve = BoundaryCurve::inverted_ellipse({1.0, 1.75}, tau);
    c.k = k;
    c.bc = BoundaryCondition(BoundaryType::kDirichlet, AnalyticField::constant(1.0));
    c.gamma = 4.0;
    c.t_sweep = t_range(10, 140, 10);
    c.n_points = 3000;
    p.variants.push_back(std::move(c));
  }
  return p;
}

}  // namespace

std::vector<Preset> presets(double k) {
  return {disk_boxsize(k), disk_pointsource(k), crescent_const(k), crescent_tallbox(k),
          inverted_ellipse(k)};
}

std::optional<Preset> find_preset(const std::string& name, double k) {
  for (auto& p : presets(k)) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace wbm
