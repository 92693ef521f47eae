#pragma once

#include <cstddef>
#include <vector>

#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/prime.hpp"
#include "slitsqueeze/slit_map.hpp"

namespace slitsqueeze {

/// |lower - upper| below this counts as an exact value.
inline constexpr double kExactnessTolerance = 1e-9;
/// Spread of a boundary's slit radii below this counts as "all on one circle".
inline constexpr double kExtremalSpread = 1e-7;

struct SqueezeOptions {
  std::size_t samples = kDefaultSamples;
  TruncationPolicy policy{};
};

/// max{|z|, q/|z|} on {q < |z| < 1}.  Errors: PointOutsideAnnulus.
double squeeze_annulus_exact(Complex z, double q);

struct BoundaryBounds {
  std::size_t boundary;
  double lower;  ///< min over j != i of r^i_j
  double upper;  ///< max over j != i of r^i_j
};

struct SqueezeBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::vector<BoundaryBounds> per_boundary;
  Complex base;
  /// Profiles behind per_boundary (same order), kept for diagnostics.
  std::vector<SlitProfile> profiles;
};

BoundaryBounds boundary_bounds(const CircularDomain& d, Complex z0, std::size_t i, const SqueezeOptions& o = {});

/// max_i min_j r^i_j <= S(z0) <= max_i max_j r^i_j
SqueezeBounds squeeze_bounds(const CircularDomain& d, Complex z0, const SqueezeOptions& o = {});

/// Two boundaries: lower = upper = max of the two slit radii.
/// Errors: InvalidArgument when the domain is not doubly connected.
SqueezeBounds squeeze_doubly_connected(const CircularDomain& d, Complex z0, const SqueezeOptions& o = {});

struct ExtremalityCertificate {
  std::size_t boundary_index;
  double common_radius;  ///< mean of the boundary's slit radii
  double spread;         ///< max - min of the boundary's slit radii
  bool certified;        ///< spread < kExtremalSpread and the boundary attains the lower bound
};

std::vector<ExtremalityCertificate> extremality_certificate(const SqueezeBounds& b);
std::vector<ExtremalityCertificate> extremality_certificate(const CircularDomain& d, Complex z0,
                                                            const SqueezeOptions& o = {});

/// (2 / (α + 1)) * max_radius
double refined_upper_bound(double alpha, double max_radius);

/// With the base point at 0 and α = canonical_derivative(d, 0, i):
/// (2 / (α + 1)) max_j r^i_j.  Errors: BasePointOutsideDomain when 0 is not in d.
double refined_upper(const CircularDomain& d, std::size_t i, const SqueezeOptions& o = {});

}  // namespace slitsqueeze
