#include "slitsqueeze/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

namespace {

double coefficient_scale(Complex a, Complex b, Complex c, Complex d) {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
    throw Error(ErrorKind::InvalidArgument, "Mobius coefficients must be finite");
  }
  const double scale = coefficient_scale(a, b, c, d);
  if (scale == 0.0 || std::abs(determinant()) <= kSingularTolerance * scale * scale) {
    throw Error(ErrorKind::SingularMap, "ad - bc vanishes");
  }
}

Complex MobiusMap::apply(Complex z) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) <= kPoleTolerance * (std::abs(c_ * z) + std::abs(d_))) {
    throw Error(ErrorKind::PoleHit, "cz + d vanishes");
  }
  return (a_ * z + b_) / den;
}

Complex MobiusMap::at_infinity() const {
  if (std::abs(c_) <= kPoleTolerance * coefficient_scale(a_, b_, c_, d_)) {
    throw Error(ErrorKind::PoleHit, "affine map sends infinity to infinity");
  }
  return a_ / c_;
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) <= kPoleTolerance * (std::abs(c_ * z) + std::abs(d_))) {
    throw Error(ErrorKind::PoleHit, "cz + d vanishes");
  }
  return determinant() / (den * den);
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
  Complex a = m1.a() * m2.a() + m1.b() * m2.c();
  Complex b = m1.a() * m2.b() + m1.b() * m2.d();
  Complex c = m1.c() * m2.a() + m1.d() * m2.c();
  Complex d = m1.c() * m2.b() + m1.d() * m2.d();
  const double scale = coefficient_scale(a, b, c, d);
  if (scale > 0.0) {
    a /= scale;
    b /= scale;
    c /= scale;
    d /= scale;
  }
  return {a, b, c, d};
}

}  // namespace slitsqueeze
