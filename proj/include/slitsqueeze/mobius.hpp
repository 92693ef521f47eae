#pragma once

#include <complex>

namespace slitsqueeze {

using Complex = std::complex<double>;

/// Maps with |ad - bc| below this (relative to the coefficient scale) are singular.
inline constexpr double kSingularTolerance = 1e-14;
/// |cz + d| below this (relative to |c z| + |d|) is treated as the pole.
inline constexpr double kPoleTolerance = 1e-14;

/// z -> (az + b) / (cz + d).  Coefficients are only defined up to a common
/// factor; equality of maps is therefore tested by action, not by fields.
class MobiusMap {
 public:
  /// Throws Error(SingularMap) when the determinant vanishes.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MobiusMap rotation(double angle) { return {std::polar(1.0, angle), 0.0, 0.0, 1.0}; }
  static MobiusMap scaling(Complex k) { return {k, 0.0, 0.0, 1.0}; }
  /// z -> k / z
  static MobiusMap inversion(Complex k) { return {0.0, k, 1.0, 0.0}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  Complex determinant() const { return a_ * d_ - b_ * c_; }

  /// Throws Error(PoleHit) when z is (numerically) the pole -d/c.
  Complex apply(Complex z) const;
  Complex operator()(Complex z) const { return apply(z); }

  /// Image of the point at infinity; throws Error(PoleHit) for affine maps.
  Complex at_infinity() const;
  bool is_affine() const { return c_ == Complex{}; }

  /// (ad - bc) / (cz + d)^2
  Complex derivative(Complex z) const;

  MobiusMap inverse() const;

 private:
  Complex a_, b_, c_, d_;
};

/// (m1 ∘ m2)(z) = m1(m2(z)); coefficients rescaled to unit max-modulus.
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);
inline MobiusMap operator*(const MobiusMap& m1, const MobiusMap& m2) { return compose(m1, m2); }

inline MobiusMap mobius_compose(const MobiusMap& m1, const MobiusMap& m2) { return compose(m1, m2); }
inline MobiusMap mobius_inverse(const MobiusMap& m) { return m.inverse(); }
inline Complex mobius_apply(const MobiusMap& m, Complex z) { return m.apply(z); }

}  // namespace slitsqueeze
