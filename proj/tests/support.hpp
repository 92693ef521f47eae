#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "slitsqueeze/geometry.hpp"

namespace testing {

using slitsqueeze::Circle;
using slitsqueeze::Complex;

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  Complex polar(double r0, double r1) { return std::polar(uniform(r0, r1), uniform(0.0, 2.0 * std::numbers::pi)); }

  /// A point of {q < |z| < 1} kept away from both circles.
  Complex annulus_point(double q) { return polar(q + 0.05 * (1.0 - q), 1.0 - 0.05 * (1.0 - q)); }

  /// `holes` disjoint discs inside the unit disc with at least `gap` between
  /// any two boundaries; radii in [rmin, rmax].
  std::vector<Circle> holes(std::size_t holes, double rmin, double rmax, double gap) {
    std::vector<Circle> out;
    while (out.size() < holes) {
      const double r = uniform(rmin, rmax);
      const Complex c = polar(0.0, 1.0 - r - gap);
      bool ok = true;
      for (const auto& h : out) ok = ok && std::abs(c - h.center) > h.radius + r + gap;
      if (ok) out.push_back({c, r});
    }
    return out;
  }

  /// A point of the domain with clearance at least `gap`.
  Complex interior(const slitsqueeze::CircularDomain& d, double gap) {
    for (;;) {
      const Complex z = polar(0.0, 1.0);
      if (d.clearance(z) > gap) return z;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing
