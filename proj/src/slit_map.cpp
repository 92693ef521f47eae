#include "slitsqueeze/slit_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "complex_ops.hpp"
#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

namespace {

/// Below this the base point is treated as 0 and its reflection as infinity.
constexpr double kOriginThreshold = 1e-100;

Complex reflect_in(const Circle& c, Complex z) {
  return c.center + c.radius * c.radius / std::conj(z - c.center);
}

}  // namespace

struct SlitMap::Impl {
  Impl(const CircularDomain& d, Complex y, std::size_t i, const TruncationPolicy& p)
      : domain(d), base(y), index(i), norm(normalize_boundary(d, i, y)), policy(p) {
    policy.validate();
    at_origin = i == 0 && std::abs(y) < kOriginThreshold;
    annulus = d.is_concentric_annulus();
    q = d.holes()[0].radius;
    if (!at_origin) reflected = reflect_in(d.boundary(i), y);

    // f(z) = K ω(z, y) / ω(z, w), from the normalized-domain formula.
    Complex k = 1.0;
    if (!at_origin) {
      const MobiusMap& t = norm.map;
      k = (t.c() * reflected + t.d()) / (std::abs(norm.base) * (t.c() * y + t.d()));
    }

    Complex diagonal;
    Complex opposite;
    if (annulus) {
      diagonal = omega_derivative_z(y, y, q, policy).value;
      opposite = omega_annulus(y, reflected, q, policy).value;
    } else {
      const SchottkyPrime prime(d, policy);
      numerator.emplace(prime.bind(y));
      denominator.emplace(at_origin ? prime.bind_infinity() : prime.bind(reflected));
      diagonal = prime.derivative_z(y, y).value;
      opposite = (*denominator)(y).value;
    }
    if (opposite == Complex{}) throw Error(ErrorKind::DenominatorZero, "ω(y, w) vanishes");
    const Complex raw = k * diagonal / opposite;
    derivative = std::abs(raw);
    if (!(derivative > 0.0) || !std::isfinite(derivative)) {
      throw Error(ErrorKind::DenominatorZero, "slit map derivative at the base point is degenerate");
    }
    scale = k * std::conj(raw / derivative);
  }

  SlitValue eval(Complex z) const {
    PrimeValue top, bottom;
    if (annulus) {
      top = omega_annulus(z, base, q, policy);
      bottom = omega_annulus(z, reflected, q, policy);
    } else {
      top = (*numerator)(z);
      bottom = (*denominator)(z);
    }
    if (bottom.value == Complex{}) throw Error(ErrorKind::DenominatorZero, "ω(z, w) vanishes");
    return {scale * top.value / bottom.value, top.est_error + bottom.est_error};
  }

  CircularDomain domain;
  Complex base;
  std::size_t index;
  NormalizedDomain norm;
  TruncationPolicy policy;
  bool at_origin = false;
  bool annulus = false;
  double q = 0.0;
  Complex reflected;
  Complex scale;
  double derivative = 0.0;
  std::optional<SchottkyPrime::Bound> numerator;
  std::optional<SchottkyPrime::Bound> denominator;
};

SlitMap::SlitMap(const CircularDomain& d, Complex base, std::size_t boundary_index, const TruncationPolicy& p)
    : impl_(std::make_shared<const Impl>(d, base, boundary_index, p)) {}

const CircularDomain& SlitMap::domain() const { return impl_->domain; }
Complex SlitMap::base() const { return impl_->base; }
std::size_t SlitMap::boundary_index() const { return impl_->index; }
const NormalizedDomain& SlitMap::normalization() const { return impl_->norm; }
const TruncationPolicy& SlitMap::policy() const { return impl_->policy; }
SlitValue SlitMap::eval(Complex z) const { return impl_->eval(z); }
double SlitMap::derivative_at_base() const { return impl_->derivative; }

double slit_radius_annulus_closed_form(Complex y) { return std::abs(y); }

bool SlitProfile::reliable() const {
  return std::all_of(deviations.begin(), deviations.end(),
                     [](double dev) { return dev <= kUnreliableDeviation; });
}

double SlitProfile::min_radius() const {
  return std::min_element(radii.begin(), radii.end(),
                          [](const auto& a, const auto& b) { return a.radius < b.radius; })
      ->radius;
}

double SlitProfile::max_radius() const {
  return std::max_element(radii.begin(), radii.end(),
                          [](const auto& a, const auto& b) { return a.radius < b.radius; })
      ->radius;
}

SlitProfile slit_profile(const SlitMap& m, std::size_t samples) {
  if (samples < 8) throw Error(ErrorKind::InvalidArgument, "at least 8 samples per circle are required");
  const CircularDomain& d = m.domain();
  SlitProfile profile{m.boundary_index(), {}, {}, samples, 0.0};
  for (std::size_t j = 0; j < d.connectivity(); ++j) {
    if (j == m.boundary_index()) continue;
    const Circle c = d.boundary(j);
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
      const SlitValue v = m.eval(c.point_at(angle));
      const double r = std::abs(v.value);
      sum += r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      profile.est_error = std::max(profile.est_error, v.est_error);
    }
    const double mean = sum / static_cast<double>(samples);
    if (!(mean > 0.0 && mean < 1.0)) {
      throw Error(ErrorKind::ProfileDegenerate,
                  "slit radius for boundary " + std::to_string(j) + " is " + std::to_string(mean));
    }
    profile.radii.push_back({j, mean});
    profile.deviations.push_back(hi - lo);
  }
  return profile;
}

SlitProfile slit_profile(const CircularDomain& d, Complex z0, std::size_t i, std::size_t samples,
                         const TruncationPolicy& p) {
  return slit_profile(SlitMap(d, z0, i, p), samples);
}

double canonical_derivative(const CircularDomain& d, Complex z0, std::size_t i, const TruncationPolicy& p) {
  return SlitMap(d, z0, i, p).derivative_at_base();
}

}  // namespace slitsqueeze
