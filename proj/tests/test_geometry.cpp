#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wbm/errors.hpp"
#include "wbm/experiments.hpp"
#include "wbm/geometry.hpp"

using wbm::BoundaryCurve;
using wbm::BoundingBox;
using wbm::Point2;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<BoundaryCurve> sample_curves() {
  return {BoundaryCurve::disk({1.5, 1.5}, 1.0),
          BoundaryCurve::crescent({1.5, 1.5}, 0.5, 0.5),
          BoundaryCurve::crescent({1.5, 1.5}, 0.4, 0.6),
          BoundaryCurve::crescent({1.5, 1.5}, 0.1, 0.9),
          BoundaryCurve::inverted_ellipse({1.0, 1.75}, 0.25),
          BoundaryCurve::inverted_ellipse({1.0, 1.75}, 0.35)};
}

}  // namespace

TEST_CASE("parameterization examples") {
  const auto disk = BoundaryCurve::disk({1.5, 1.5}, 1.0);
  CHECK((disk.point(0.0) - Point2(2.5, 1.5)).norm() < 1e-15);

  const auto cres = BoundaryCurve::crescent({1.5, 1.5}, 0.5, 0.5);
  CHECK((cres.point(0.0) - Point2(1.5 + 1.0 - 0.5 / 1.5, 1.5)).norm() < 1e-15);

  const auto ell = BoundaryCurve::inverted_ellipse({1.0, 1.75}, 0.25);
  CHECK((ell.point(kPi / 2) - Point2(1.0, 1.75 + 1.0 / 0.75)).norm() < 1e-14);
}

TEST_CASE("periodicity") {
  for (const auto& c : sample_curves()) {
    for (double t : {0.0, 0.7, 2.9, 5.1}) {
      CHECK((c.point(t) - c.point(t + 2 * kPi)).norm() < 1e-13);
    }
  }
}

TEST_CASE("invalid curve parameters") {
  CHECK_THROWS_AS(BoundaryCurve::disk({0, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryCurve::crescent({0, 0}, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryCurve::inverted_ellipse({0, 0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryCurve::inverted_ellipse({0, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundingBox({0, 0}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("analytic derivative matches central differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 2 * kPi);
  const double h = 1e-6;
  for (const auto& c : sample_curves()) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = dist(rng);
      const auto fd = (c.position(t + h) - c.position(t - h)) / (2 * h);
      worst = std::max(worst, std::abs(fd - c.derivative(t)));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("unit normals") {
  const auto unit = BoundaryCurve::disk({0, 0}, 1.0);
  CHECK((unit.unit_normal(0.0) - Point2(1, 0)).norm() < 1e-15);
  CHECK((unit.unit_normal(kPi / 2) - Point2(0, 1)).norm() < 1e-15);

  const auto cres = BoundaryCurve::crescent({1.5, 1.5}, 0.5, 0.5);
  CHECK(cres.unit_normal(kPi).x() < 0.0);

  for (const auto& c : sample_curves()) {
    for (const auto& s : wbm::sample_boundary(c, 257)) {
      CHECK(std::abs(s.normal.norm() - 1.0) < 1e-14);
      // Outward: perpendicular to the tangent and on the right of a
      // counterclockwise traversal.
      const auto d = c.derivative(s.t) * static_cast<double>(c.orientation());
      CHECK(std::abs(s.normal.x() * d.real() + s.normal.y() * d.imag()) < 1e-12 * s.speed);
      CHECK(d.real() * s.normal.y() - d.imag() * s.normal.x() < 0.0);
    }
  }
}

TEST_CASE("sample_boundary") {
  const auto unit = BoundaryCurve::disk({0, 0}, 1.0);
  const auto s = wbm::sample_boundary(unit, 4);
  REQUIRE(s.size() == 4);
  CHECK((s[0].point - Point2(1, 0)).norm() < 1e-15);
  CHECK((s[1].point - Point2(0, 1)).norm() < 1e-15);
  CHECK((s[2].point - Point2(-1, 0)).norm() < 1e-15);
  CHECK((s[3].point - Point2(0, -1)).norm() < 1e-15);

  const auto offset = wbm::sample_boundary(unit, 4, kPi / 4);
  CHECK(offset[0].t == doctest::Approx(kPi / 4));

  CHECK(wbm::sample_boundary(unit, 3000).size() == 3000);

  const auto c3 = BoundaryCurve::crescent({1.5, 1.5}, 0.1, 0.9);
  double min_speed = INFINITY;
  for (int i = 0; i < 100000; ++i) min_speed = std::min(min_speed, c3.speed(2 * kPi * i / 100000));
  CHECK(min_speed > 0.0);
}

TEST_CASE("orientation fix-up gives positive signed area") {
  for (const auto& c : sample_curves()) {
    auto s = wbm::sample_boundary(c, 1024);
    if (c.orientation() < 0) std::reverse(s.begin(), s.end());
    CHECK(wbm::signed_area(s) > 0.0);
  }
  const auto disk = BoundaryCurve::disk({0, 0}, 2.0);
  CHECK(wbm::signed_area(wbm::sample_boundary(disk, 4096)) ==
        doctest::Approx(4 * kPi).epsilon(1e-5));
}

TEST_CASE("degenerate crescent") {
  // a = 1, b = 0 gives f(t) = 2i sin t: f'(pi/2) = 0.
  const auto c = BoundaryCurve::crescent({0, 0}, 1.0, 0.0);
  CHECK(std::abs(c.derivative(kPi / 2)) < 1e-15);
  CHECK_THROWS_AS(c.unit_normal(kPi / 2), wbm::DegenerateCurveError);
}

TEST_CASE("bounding box") {
  const BoundingBox box({0, 0}, 3, 3);
  CHECK(box.contains({0, 0}));
  CHECK(box.contains({3, 3}));
  CHECK_FALSE(box.contains({3.1, 1}));
  CHECK((box.center() - Point2(1.5, 1.5)).norm() == 0.0);
  const auto c = BoundingBox::centered({0.64, 1.75}, 1.4, 3.5);
  CHECK((c.origin - Point2(-0.06, 0.0)).norm() < 1e-15);
  CHECK(box.contains_curve(BoundaryCurve::disk({1.5, 1.5}, 1.0)));
  CHECK_FALSE(box.contains_curve(BoundaryCurve::disk({1.5, 1.5}, 1.6)));
}

TEST_CASE("every preset curve lies in its box") {
  int variants = 0;
  for (const auto& p : wbm::presets()) {
    for (const auto& v : p.variants) {
      CHECK_MESSAGE(v.box.contains_curve(v.curve), v.name);
      ++variants;
    }
  }
  CHECK(variants == 16);
}

TEST_CASE("schwartz singularities") {
  const BoundingBox box3({0, 0}, 3, 3);
  const auto cres = BoundaryCurve::crescent({1.5, 1.5}, 0.5, 0.5);
  const auto info = wbm::schwartz_singularities(cres, box3);
  REQUIRE(info.singularities.size() == 3);
  int poles = 0;
  for (const auto& s : info.singularities) {
    CHECK(s.distance_to_curve > 0.0);
    if (s.kind == wbm::SingularityKind::kPole) {
      ++poles;
      CHECK((s.location - Point2(0.5, 1.5)).norm() < 1e-15);
      CHECK(s.inside_box);
    } else {
      CHECK(s.location.x() == doctest::Approx(1.0));
      CHECK(std::abs(std::abs(s.location.y() - 1.5) - std::sqrt(2.0)) < 1e-15);
    }
  }
  CHECK(poles == 1);

  const auto ell = BoundaryCurve::inverted_ellipse({1.0, 1.75}, 0.25);
  const auto einfo = wbm::schwartz_singularities(ell, BoundingBox({0, 0}, 2, 3.5));
  REQUIRE(einfo.singularities.size() == 2);
  for (const auto& s : einfo.singularities) {
    CHECK(s.kind == wbm::SingularityKind::kBranchPoint);
    CHECK(std::abs(s.location.y() - 1.75) < 1e-15);
    CHECK((std::abs(s.location.x()) < 1e-15 || std::abs(s.location.x() - 2.0) < 1e-15));
    CHECK(s.inside_box);
  }

  CHECK(wbm::schwartz_singularities(BoundaryCurve::disk({1.5, 1.5}, 1), box3)
            .singularities.empty());
}

TEST_CASE("curve kind names") {
  for (auto k : {wbm::CurveKind::kDisk, wbm::CurveKind::kCrescent,
                 wbm::CurveKind::kInvertedEllipse}) {
    CHECK(wbm::curve_kind_from_string(wbm::to_string(k)) == k);
  }
  CHECK_THROWS(wbm::curve_kind_from_string("square"));
}
