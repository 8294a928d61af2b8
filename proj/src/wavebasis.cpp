#include "wbm/wavebasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wbm {
namespace {

constexpr cdouble kI{0.0, 1.0};

// Travelling component paired with a standing one: +-sqrt(k^2 - q^2) when
// propagating, -+i sqrt(q^2 - k^2) when evanescent.
cdouble travelling(double k, double standing, bool first_of_pair) {
  const double disc = k * k - standing * standing;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    return first_of_pair ? cdouble(s, 0.0) : cdouble(-s, 0.0);
  }
  const double beta = std::sqrt(-disc);
  return first_of_pair ? cdouble(0.0, -beta) : cdouble(0.0, beta);
}

struct Components {
  bool x_standing;
  double standing;
  cdouble travel;
  double extent;  // box length along the travelling direction
};

Components components(const WaveBasisSpec& spec, BasisIndex idx) {
  check_index(spec, idx);
  const bool x_standing = idx.family <= 2;
  const double length = x_standing ? spec.box.lx : spec.box.ly;
  const double q = idx.order * std::numbers::pi / length;
  const bool first = idx.family == 1 || idx.family == 3;
  return {x_standing, q, travelling(spec.k, q, first),
          x_standing ? spec.box.ly : spec.box.lx};
}

// log of 1 / sup_{s in [0, L]} |e^{-i kappa s}| = -max(0, Im(kappa) L)
double log_scale(cdouble travel, double extent) {
  return -std::max(0.0, travel.imag() * extent);
}

struct LocalValue {
  cdouble value;
  cdouble d_standing;  // derivative along the standing coordinate
  cdouble d_travel;    // derivative along the travelling coordinate
};

LocalValue local_value(double standing, cdouble travel, double scale_log, double s_coord,
                       double t_coord) {
  const double c = std::cos(standing * s_coord);
  const double sn = std::sin(standing * s_coord);
  const cdouble e = std::exp(-kI * travel * t_coord + scale_log);
  return {c * e, -standing * sn * e, -kI * travel * c * e};
}

Point2 relative(const WaveBasisSpec& spec, const Point2& p) { return p - spec.box.origin; }

}  // namespace

TruncationCounts truncation_counts(double k, double truncation, const BoundingBox& box) {
  if (!(k > 0.0) || !(truncation > 0.0)) {
    throw std::invalid_argument("truncation_counts: k and T must be positive");
  }
  const auto count = [&](double length) {
    return static_cast<int>(std::ceil(k * truncation * length / std::numbers::pi));
  };
  return {count(box.lx), count(box.ly)};
}

WaveBasisSpec::WaveBasisSpec(const BoundingBox& box_, double k_, double truncation_)
    : box(box_), k(k_), truncation(truncation_) {
  const auto counts = truncation_counts(k, truncation, box);
  nm = counts.nm;
  nn = counts.nn;
}

void check_index(const WaveBasisSpec& spec, BasisIndex idx) {
  const int limit = idx.family <= 2 ? spec.nm : spec.nn;
  if (idx.family < 1 || idx.family > 4 || idx.order < 0 || idx.order > limit) {
    throw std::out_of_range("basis index (family " + std::to_string(idx.family) +
                            ", order " + std::to_string(idx.order) + ") out of range");
  }
}

int linear_index(const WaveBasisSpec& spec, BasisIndex idx) {
  check_index(spec, idx);
  const int bm = spec.nm + 1;
  const int bn = spec.nn + 1;
  switch (idx.family) {
    case 1: return idx.order;
    case 2: return bm + idx.order;
    case 3: return 2 * bm + idx.order;
    default: return 2 * bm + bn + idx.order;
  }
}

BasisIndex basis_index(const WaveBasisSpec& spec, int j) {
  const int bm = spec.nm + 1;
  const int bn = spec.nn + 1;
  if (j < 0 || j >= spec.size()) {
    throw std::out_of_range("basis position " + std::to_string(j) + " out of range");
  }
  if (j < bm) return {1, j};
  if (j < 2 * bm) return {2, j - bm};
  if (j < 2 * bm + bn) return {3, j - 2 * bm};
  return {4, j - 2 * bm - bn};
}

std::pair<cdouble, cdouble> wavenumbers(const WaveBasisSpec& spec, BasisIndex idx) {
  const auto c = components(spec, idx);
  if (c.x_standing) return {cdouble(c.standing, 0.0), c.travel};
  return {c.travel, cdouble(c.standing, 0.0)};
}

cdouble evaluate(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p) {
  const auto c = components(spec, idx);
  const Point2 r = relative(spec, p);
  const double s = c.x_standing ? r.x() : r.y();
  const double t = c.x_standing ? r.y() : r.x();
  return local_value(c.standing, c.travel, log_scale(c.travel, c.extent), s, t).value;
}

Eigen::Vector2cd gradient(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p) {
  const auto c = components(spec, idx);
  const Point2 r = relative(spec, p);
  const double s = c.x_standing ? r.x() : r.y();
  const double t = c.x_standing ? r.y() : r.x();
  const auto v = local_value(c.standing, c.travel, log_scale(c.travel, c.extent), s, t);
  if (c.x_standing) return {v.d_standing, v.d_travel};
  return {v.d_travel, v.d_standing};
}

cdouble normal_derivative(const WaveBasisSpec& spec, BasisIndex idx, const Point2& p,
                          const Point2& n) {
  if (std::abs(n.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("normal_derivative: n must be a unit vector");
  }
  const auto g = gradient(spec, idx, p);
  return g.x() * n.x() + g.y() * n.y();
}

WaveBasis::WaveBasis(const WaveBasisSpec& spec) : spec_(spec) {
  const int n = spec.size();
  terms_.reserve(n);
  for (int j = 0; j < n; ++j) {
    const auto c = components(spec, basis_index(spec, j));
    terms_.push_back({c.x_standing, c.standing, c.travel, log_scale(c.travel, c.extent)});
  }
}

Eigen::VectorXcd WaveBasis::values(const Point2& p) const {
  Eigen::VectorXcd v(size());
  Eigen::VectorXcd dn(size());
  evaluate_row(p, Point2(1.0, 0.0), v, dn);
  return v;
}

Eigen::VectorXcd WaveBasis::normal_derivatives(const Point2& p, const Point2& n) const {
  Eigen::VectorXcd v(size());
  Eigen::VectorXcd dn(size());
  evaluate_row(p, n, v, dn);
  return dn;
}

void WaveBasis::evaluate_row(const Point2& p, const Point2& n,
                             Eigen::Ref<Eigen::VectorXcd> value,
                             Eigen::Ref<Eigen::VectorXcd> dn) const {
  const Point2 r = relative(spec_, p);
  for (int j = 0; j < size(); ++j) {
    const Term& term = terms_[j];
    const double s = term.x_standing ? r.x() : r.y();
    const double t = term.x_standing ? r.y() : r.x();
    const auto v = local_value(term.standing, term.travel, term.log_scale, s, t);
    value[j] = v.value;
    dn[j] = term.x_standing ? v.d_standing * n.x() + v.d_travel * n.y()
                            : v.d_travel * n.x() + v.d_standing * n.y();
  }
}

}  // namespace wbm
