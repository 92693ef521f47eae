#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slitsqueeze/mobius.hpp"

namespace slitsqueeze {

/// Margin used for every strict containment / disjointness test.
inline constexpr double kGeometryMargin = 1e-12;

struct Circle {
  Complex center;
  double radius = 0.0;

  Complex point_at(double angle) const { return center + std::polar(radius, angle); }
};

/// Image of a circle under a Möbius map, assuming the circle avoids the pole.
/// Throws Error(PoleHit) when the image is a line or unbounded.
Circle image_of_circle(const MobiusMap& m, const Circle& c);

/// {q < |z| < 1}
class Annulus {
 public:
  /// Throws Error(InvalidArgument) unless 0 < q < 1.
  explicit Annulus(double q);
  double q() const { return q_; }
  bool contains(Complex z) const;

 private:
  double q_;
};

/// The unit disc with closed round holes removed.  Boundary index 0 is the
/// unit circle; index k >= 1 is holes()[k - 1].
class CircularDomain {
 public:
  const std::vector<Circle>& holes() const { return holes_; }
  std::size_t hole_count() const { return holes_.size(); }
  std::size_t connectivity() const { return holes_.size() + 1; }

  /// Circle for boundary index k (0 = unit circle).
  Circle boundary(std::size_t k) const;

  /// Strictly inside, with kGeometryMargin.
  bool contains(Complex z) const;
  /// Smallest distance from z to any boundary circle (negative outside).
  double clearance(Complex z) const;

  /// True for a single hole centred at the origin.
  bool is_concentric_annulus() const;

  friend CircularDomain make_circular_domain(std::span<const Circle> holes);

 private:
  explicit CircularDomain(std::vector<Circle> holes) : holes_(std::move(holes)) {}
  std::vector<Circle> holes_;
};

/// Validates hole geometry.  Errors: EmptyHoleList, HoleOutsideDisc,
/// HolesOverlap (messages name the offending hole indices).
CircularDomain make_circular_domain(std::span<const Circle> holes);
inline CircularDomain make_circular_domain(std::initializer_list<Circle> holes) {
  return make_circular_domain(std::span<const Circle>(holes.begin(), holes.size()));
}

CircularDomain annulus_domain(const Annulus& a);
CircularDomain rotate(const CircularDomain& d, double angle);

struct NormalizedDomain {
  CircularDomain domain;
  /// Sends the original domain onto `domain`, boundary i onto the unit circle.
  MobiusMap map;
  Complex base;
  /// original_index[k] is the original boundary index of new boundary k.
  std::vector<std::size_t> original_index;
};

/// Moves boundary i onto the unit circle.  For i = 0 the identity is
/// returned; for a hole (δ, ρ) the map is z -> ρ / (z - δ), and the image
/// holes are listed as: image of the unit circle, then the remaining holes in
/// their original order.
NormalizedDomain normalize_boundary(const CircularDomain& d, std::size_t i, Complex z0);

}  // namespace slitsqueeze
