#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/mobius.hpp"
#include "slitsqueeze/schottky.hpp"

namespace slitsqueeze {

/// Truncation of the prime-function products.
///
/// A product stops at the first term (annulus) or word level (Schottky group)
/// whose multiplicative update differs from 1 by less than `tol`.  When a cap
/// is reached first, the truncated value is still returned (with
/// `converged == false`) as long as the last update is below `capped_tol`;
/// beyond that the evaluation fails with NoConvergence.
struct TruncationPolicy {
  double tol = 1e-12;
  std::size_t max_terms = 2048;
  std::size_t max_word_length = 8;
  double capped_tol = 1e-6;

  /// Throws Error(InvalidArgument) on tol <= 0, caps < 1 or capped_tol < 0.
  void validate() const;
  /// Word-level cap for a group with `generators` generators.  A cyclic group
  /// has one representative per level, so it is capped like the annulus
  /// product.
  std::size_t level_cap(std::size_t generators) const {
    return generators == 1 ? max_terms : max_word_length;
  }
};

struct PrimeValue {
  Complex value;
  double est_error = 0.0;  ///< last relative update
  std::size_t terms_used = 0;
  bool converged = true;
};

/// ω(z, y) on {q < |z| < 1}:
///   (z - y) ∏_{n≥1} (z - q²ⁿy)(y - q²ⁿz) / ((z - q²ⁿz)(y - q²ⁿy)).
/// Errors: ZeroArgument (z or y is 0), NoConvergence.
PrimeValue omega_annulus(Complex z, Complex y, double q, const TruncationPolicy& p = {});
/// ∂ω/∂z over the same terms as omega_annulus.
PrimeValue omega_derivative_z(Complex z, Complex y, double q, const TruncationPolicy& p = {});

/// |conj(ω(1/z̄, 1/ȳ)) + ω(z, y)/(zy)| / max(1, |ω(z, y)/(zy)|)
double reflection_identity_residual(Complex z, Complex y, double q, const TruncationPolicy& p = {});

/// Right-hand side used for the quasi-periodicity check ω(z/q², y) = m(z, y) ω(z, y).
enum class QuasiPeriodicity {
  /// m = -z / (q² y): the relation the product satisfies.
  kNegativeInverseSquare,
  /// m = q z / y: a frequently quoted form, kept so it can be measured.
  kLinearInQ,
};

/// |ω(z/q², y) - m ω(z, y)| / max(1, |m ω(z, y)|)
double quasi_periodicity_residual(Complex z, Complex y, double q, const TruncationPolicy& p = {},
                                  QuasiPeriodicity form = QuasiPeriodicity::kNegativeInverseSquare);

/// The prime function of a circular domain as a truncated product over the
/// Schottky group Θ'' (one word per inverse pair, breadth-first by length):
///   ω(z, y) = (z - y) ∏ (θ(z) - y)(θ(y) - z) / ((θ(z) - z)(θ(y) - y)).
/// The word table is built once and shared by copies.
class SchottkyPrime {
 public:
  explicit SchottkyPrime(const CircularDomain& d, const TruncationPolicy& p = {});

  PrimeValue operator()(Complex z, Complex y) const;
  PrimeValue derivative_z(Complex z, Complex y) const;
  /// lim_{Y→∞} ω(z, Y) / Y = -∏ (θ(∞) - z) / (θ(z) - z).
  PrimeValue at_infinity(Complex z) const;

  /// ω(·, y) for a fixed second argument, with the word images of y cached.
  class Bound {
   public:
    PrimeValue operator()(Complex z) const;
    Complex argument() const { return y_; }
    bool is_infinity() const { return infinite_; }

   private:
    friend class SchottkyPrime;
    std::shared_ptr<const SchottkyWords> words_;
    TruncationPolicy policy_;
    std::size_t cap_ = 0;
    Complex y_;
    bool infinite_ = false;
    std::vector<Complex> image_;          // θ(y), or θ(∞)
    std::vector<Complex> inv_self_gap_;   // 1 / (θ(y) - y)
  };

  Bound bind(Complex y) const;
  /// Binds the normalized point at infinity (see at_infinity).
  Bound bind_infinity() const;

  const SchottkyWords& words() const { return *words_; }
  const TruncationPolicy& policy() const { return policy_; }
  std::size_t level_cap() const { return cap_; }

 private:
  std::shared_ptr<const SchottkyWords> words_;
  TruncationPolicy policy_;
  std::size_t cap_;
};

PrimeValue omega_circular(Complex z, Complex y, const CircularDomain& d, const TruncationPolicy& p = {});
PrimeValue omega_derivative_z(Complex z, Complex y, const CircularDomain& d, const TruncationPolicy& p = {});

}  // namespace slitsqueeze
