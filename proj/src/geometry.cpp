#include "slitsqueeze/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Circle image_of_circle(const MobiusMap& m, const Circle& c) {
  if (m.is_affine()) {
    return {m.apply(c.center), std::abs(m.a() / m.d()) * c.radius};
  }
  const Complex pole = -m.d() / m.c();
  const Complex offset = pole - c.center;
  const double dist = std::abs(offset);
  if (std::abs(dist - c.radius) <= 1e-12 * std::max(1.0, c.radius)) {
    throw Error(ErrorKind::PoleHit, "circle passes through the pole; image is a line");
  }
  // The image centre is the image of the pole's reflection in the circle.
  Complex center;
  Complex far_point;
  if (dist == 0.0) {
    center = m.at_infinity();
    far_point = c.center + c.radius;
  } else {
    center = m.apply(c.center + c.radius * c.radius / std::conj(offset));
    far_point = c.center - c.radius * offset / dist;
  }
  return {center, std::abs(m.apply(far_point) - center)};
}

Annulus::Annulus(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "annulus inner radius must satisfy 0 < q < 1");
  }
}

bool Annulus::contains(Complex z) const {
  const double r = std::abs(z);
  return r > q_ && r < 1.0;
}

Circle CircularDomain::boundary(std::size_t k) const {
  if (k > holes_.size()) {
    throw Error(ErrorKind::InvalidBoundaryIndex,
                "boundary index " + std::to_string(k) + " out of range 0.." +
                    std::to_string(holes_.size()));
  }
  return k == 0 ? Circle{0.0, 1.0} : holes_[k - 1];
}

double CircularDomain::clearance(Complex z) const {
  double best = 1.0 - std::abs(z);
  for (const auto& h : holes_) best = std::min(best, std::abs(z - h.center) - h.radius);
  return best;
}

bool CircularDomain::contains(Complex z) const {
  return finite(z) && clearance(z) > kGeometryMargin;
}

bool CircularDomain::is_concentric_annulus() const {
  return holes_.size() == 1 && holes_[0].center == Complex{};
}

CircularDomain make_circular_domain(std::span<const Circle> holes) {
  if (holes.empty()) throw Error(ErrorKind::EmptyHoleList, "at least one hole is required");
  for (std::size_t k = 0; k < holes.size(); ++k) {
    const auto& h = holes[k];
    if (!finite(h.center) || !std::isfinite(h.radius) || !(h.radius > 0.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "hole " + std::to_string(k + 1) + " needs a finite centre and radius > 0");
    }
    if (!(std::abs(h.center) + h.radius < 1.0 - kGeometryMargin)) {
      throw Error(ErrorKind::HoleOutsideDisc,
                  "hole " + std::to_string(k + 1) + " violates |center| + radius < 1");
    }
  }
  for (std::size_t i = 0; i < holes.size(); ++i) {
    for (std::size_t j = i + 1; j < holes.size(); ++j) {
      const double gap = std::abs(holes[i].center - holes[j].center);
      if (!(gap > holes[i].radius + holes[j].radius + kGeometryMargin)) {
        throw Error(ErrorKind::HolesOverlap, "holes " + std::to_string(i + 1) + " and " +
                                                 std::to_string(j + 1) + " are not disjoint");
      }
    }
  }
  return CircularDomain(std::vector<Circle>(holes.begin(), holes.end()));
}

CircularDomain annulus_domain(const Annulus& a) { return make_circular_domain({Circle{0.0, a.q()}}); }

CircularDomain rotate(const CircularDomain& d, double angle) {
  const Complex phase = std::polar(1.0, angle);
  std::vector<Circle> holes;
  holes.reserve(d.hole_count());
  for (const auto& h : d.holes()) holes.push_back({phase * h.center, h.radius});
  return make_circular_domain(holes);
}

NormalizedDomain normalize_boundary(const CircularDomain& d, std::size_t i, Complex z0) {
  if (i > d.hole_count()) {
    throw Error(ErrorKind::InvalidBoundaryIndex,
                "boundary index " + std::to_string(i) + " out of range 0.." +
                    std::to_string(d.hole_count()));
  }
  if (!d.contains(z0)) throw Error(ErrorKind::BasePointOutsideDomain, "base point not inside domain");

  std::vector<std::size_t> original(d.connectivity());
  if (i == 0) {
    for (std::size_t k = 0; k < original.size(); ++k) original[k] = k;
    return {d, MobiusMap::identity(), z0, std::move(original)};
  }

  const Circle hole = d.holes()[i - 1];
  const MobiusMap t(0.0, hole.radius, 1.0, -hole.center);
  std::vector<Circle> images;
  images.reserve(d.hole_count());
  original[0] = i;
  std::size_t next = 1;
  for (std::size_t k = 0; k <= d.hole_count(); ++k) {
    if (k == i) continue;
    images.push_back(image_of_circle(t, d.boundary(k)));
    original[next++] = k;
  }
  return {make_circular_domain(images), t, t.apply(z0), std::move(original)};
}

}  // namespace slitsqueeze
