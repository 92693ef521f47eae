#include "slitsqueeze/squeezing.hpp"

#include <algorithm>
#include <cmath>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

double squeeze_annulus_exact(Complex z, double q) {
  const Annulus annulus(q);
  if (!annulus.contains(z)) {
    throw Error(ErrorKind::PointOutsideAnnulus, "point must satisfy q < |z| < 1");
  }
  const double r = std::abs(z);
  return std::max(r, q / r);
}

BoundaryBounds boundary_bounds(const CircularDomain& d, Complex z0, std::size_t i, const SqueezeOptions& o) {
  const SlitProfile profile = slit_profile(d, z0, i, o.samples, o.policy);
  return {i, profile.min_radius(), profile.max_radius()};
}

SqueezeBounds squeeze_bounds(const CircularDomain& d, Complex z0, const SqueezeOptions& o) {
  SqueezeBounds out;
  out.base = z0;
  for (std::size_t i = 0; i < d.connectivity(); ++i) {
    SlitProfile profile = slit_profile(d, z0, i, o.samples, o.policy);
    out.per_boundary.push_back({i, profile.min_radius(), profile.max_radius()});
    out.profiles.push_back(std::move(profile));
  }
  for (const auto& b : out.per_boundary) {
    out.lower = std::max(out.lower, b.lower);
    out.upper = std::max(out.upper, b.upper);
  }
  out.exact = d.connectivity() == 2 || std::abs(out.upper - out.lower) < kExactnessTolerance;
  return out;
}

SqueezeBounds squeeze_doubly_connected(const CircularDomain& d, Complex z0, const SqueezeOptions& o) {
  if (d.connectivity() != 2) {
    throw Error(ErrorKind::InvalidArgument, "squeeze_doubly_connected needs exactly one hole");
  }
  SqueezeBounds out = squeeze_bounds(d, z0, o);
  // One slit per boundary, so the lower and upper bounds coincide.
  out.lower = out.upper;
  out.exact = true;
  return out;
}

std::vector<ExtremalityCertificate> extremality_certificate(const SqueezeBounds& b) {
  std::vector<ExtremalityCertificate> out;
  for (std::size_t k = 0; k < b.per_boundary.size(); ++k) {
    const auto& entry = b.per_boundary[k];
    const auto& radii = b.profiles[k].radii;
    double sum = 0.0;
    for (const auto& r : radii) sum += r.radius;
    const double spread = entry.upper - entry.lower;
    const bool attains = entry.lower >= b.lower;
    out.push_back({entry.boundary, sum / static_cast<double>(radii.size()), spread,
                   spread < kExtremalSpread && attains});
  }
  return out;
}

std::vector<ExtremalityCertificate> extremality_certificate(const CircularDomain& d, Complex z0,
                                                            const SqueezeOptions& o) {
  return extremality_certificate(squeeze_bounds(d, z0, o));
}

double refined_upper_bound(double alpha, double max_radius) {
  if (!(alpha >= 1.0 - 1e-8)) throw Error(ErrorKind::InvalidArgument, "alpha must be >= 1");
  return 2.0 / (alpha + 1.0) * max_radius;
}

double refined_upper(const CircularDomain& d, std::size_t i, const SqueezeOptions& o) {
  const SlitMap map(d, 0.0, i, o.policy);
  const SlitProfile profile = slit_profile(map, o.samples);
  return refined_upper_bound(map.derivative_at_base(), profile.max_radius());
}

}  // namespace slitsqueeze
