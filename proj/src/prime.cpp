#include "slitsqueeze/prime.hpp"

#include <cmath>
#include <string>

#include "complex_ops.hpp"
#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

using detail::finite;
using detail::quotient;

void TruncationPolicy::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
  if (max_terms < 1 || max_word_length < 1) {
    throw Error(ErrorKind::InvalidArgument, "truncation caps must be >= 1");
  }
  if (!(capped_tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "capped_tol must be >= 0");
}

namespace {

void require_finite(Complex z, const char* name) {
  if (!finite(z)) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be finite");
}

void require_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "q must satisfy 0 < q < 1");
}

/// Tracks the stopping rule shared by all products.
class Stopper {
 public:
  Stopper(const TruncationPolicy& p, std::size_t cap) : policy_(p), cap_(cap) { history_.reserve(64); }

  /// Records the update of step `n`; true when the product may stop.
  bool settle(Complex update) {
    last_ = std::abs(update - 1.0);
    history_.push_back(last_);
    ++steps_;
    return last_ < policy_.tol;
  }

  PrimeValue finish(Complex value, bool converged, const char* what) const {
    if (!converged && !(last_ <= policy_.capped_tol)) {
      throw NoConvergenceError(std::string(what) + ": cap of " + std::to_string(cap_) +
                                   " reached with relative update " + std::to_string(last_),
                               history_);
    }
    if (!finite(value)) throw Error(ErrorKind::DenominatorZero, std::string(what) + ": non-finite product");
    return {value, last_, steps_, converged};
  }

 private:
  const TruncationPolicy& policy_;
  std::size_t cap_;
  std::vector<double> history_;
  double last_ = 0.0;
  std::size_t steps_ = 0;
};

}  // namespace

PrimeValue omega_annulus(Complex z, Complex y, double q, const TruncationPolicy& p) {
  p.validate();
  require_q(q);
  require_finite(z, "z");
  require_finite(y, "y");
  if (z == Complex{} || y == Complex{}) throw Error(ErrorKind::ZeroArgument, "omega_annulus needs z, y != 0");

  const double q2 = q * q;
  double t = 1.0;
  Complex value = z - y;
  Stopper stop(p, p.max_terms);
  bool converged = false;
  for (std::size_t n = 1; n <= p.max_terms && !converged; ++n) {
    t *= q2;
    const Complex factor = quotient((z - t * y) * (y - t * z), (z - t * z) * (y - t * y));
    value *= factor;
    converged = stop.settle(factor);
  }
  return stop.finish(value, converged, "omega_annulus");
}

PrimeValue omega_derivative_z(Complex z, Complex y, double q, const TruncationPolicy& p) {
  p.validate();
  require_q(q);
  require_finite(z, "z");
  require_finite(y, "y");
  if (z == Complex{} || y == Complex{}) throw Error(ErrorKind::ZeroArgument, "omega_derivative_z needs z, y != 0");

  const double q2 = q * q;
  double t = 1.0;
  Complex product = 1.0;
  Complex log_derivative = 0.0;
  Stopper stop(p, p.max_terms);
  bool converged = false;
  for (std::size_t n = 1; n <= p.max_terms && !converged; ++n) {
    t *= q2;
    const Complex a = z - t * y;
    const Complex b = y - t * z;
    const Complex factor = quotient(a * b, (z - t * z) * (y - t * y));
    product *= factor;
    log_derivative += 1.0 / a - t / b - 1.0 / z;
    converged = stop.settle(factor);
  }
  return stop.finish(product * (1.0 + (z - y) * log_derivative), converged, "omega_derivative_z");
}

double reflection_identity_residual(Complex z, Complex y, double q, const TruncationPolicy& p) {
  const Complex direct = omega_annulus(z, y, q, p).value / (z * y);
  const Complex reflected = std::conj(omega_annulus(1.0 / std::conj(z), 1.0 / std::conj(y), q, p).value);
  return std::abs(reflected + direct) / std::max(1.0, std::abs(direct));
}

double quasi_periodicity_residual(Complex z, Complex y, double q, const TruncationPolicy& p,
                                  QuasiPeriodicity form) {
  const Complex lhs = omega_annulus(z / (q * q), y, q, p).value;
  const Complex multiplier =
      form == QuasiPeriodicity::kNegativeInverseSquare ? -z / (q * q * y) : q * z / y;
  const Complex rhs = multiplier * omega_annulus(z, y, q, p).value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

// ---------------------------------------------------------------------------

SchottkyPrime::SchottkyPrime(const CircularDomain& d, const TruncationPolicy& p)
    : policy_(p), cap_(0) {
  policy_.validate();
  cap_ = policy_.level_cap(d.hole_count());
  words_ = std::make_shared<const SchottkyWords>(d, cap_);
}

PrimeValue SchottkyPrime::operator()(Complex z, Complex y) const {
  require_finite(z, "z");
  require_finite(y, "y");
  Complex value = z - y;
  Stopper stop(policy_, cap_);
  bool converged = false;
  for (std::size_t len = 1; len <= cap_ && !converged; ++len) {
    Complex update = 1.0;
    for (const WordMap& w : words_->level(len)) {
      const Complex tz = w.apply(z);
      const Complex ty = w.apply(y);
      update *= quotient((tz - y) * (ty - z), (tz - z) * (ty - y));
    }
    value *= update;
    converged = stop.settle(update);
  }
  return stop.finish(value, converged, "omega_circular");
}

PrimeValue SchottkyPrime::derivative_z(Complex z, Complex y) const {
  require_finite(z, "z");
  require_finite(y, "y");
  Complex product = 1.0;
  Complex log_derivative = 0.0;
  Stopper stop(policy_, cap_);
  bool converged = false;
  for (std::size_t len = 1; len <= cap_ && !converged; ++len) {
    Complex update = 1.0;
    for (const WordMap& w : words_->level(len)) {
      const Complex tz = w.apply(z);
      const Complex ty = w.apply(y);
      const Complex dtz = w.derivative(z);
      update *= quotient((tz - y) * (ty - z), (tz - z) * (ty - y));
      log_derivative += dtz / (tz - y) - 1.0 / (ty - z) - (dtz - 1.0) / (tz - z);
    }
    product *= update;
    converged = stop.settle(update);
  }
  return stop.finish(product * (1.0 + (z - y) * log_derivative), converged, "omega_derivative_z");
}

PrimeValue SchottkyPrime::at_infinity(Complex z) const { return bind_infinity()(z); }

SchottkyPrime::Bound SchottkyPrime::bind(Complex y) const {
  require_finite(y, "y");
  Bound b;
  b.words_ = words_;
  b.policy_ = policy_;
  b.cap_ = cap_;
  b.y_ = y;
  for (std::size_t len = 1; len <= cap_; ++len) {
    for (const WordMap& w : words_->level(len)) {
      const Complex ty = w.apply(y);
      b.image_.push_back(ty);
      b.inv_self_gap_.push_back(1.0 / (ty - y));
    }
  }
  return b;
}

SchottkyPrime::Bound SchottkyPrime::bind_infinity() const {
  Bound b;
  b.words_ = words_;
  b.policy_ = policy_;
  b.cap_ = cap_;
  b.infinite_ = true;
  for (std::size_t len = 1; len <= cap_; ++len) {
    for (const WordMap& w : words_->level(len)) {
      if (w.c == Complex{}) {
        throw Error(ErrorKind::DenominatorZero, "a group word fixes infinity; 0 lies in the limit set");
      }
      b.image_.push_back(w.at_infinity());
    }
  }
  return b;
}

PrimeValue SchottkyPrime::Bound::operator()(Complex z) const {
  require_finite(z, "z");
  Complex value = infinite_ ? Complex(-1.0) : z - y_;
  Stopper stop(policy_, cap_);
  bool converged = false;
  std::size_t k = 0;
  // Words are applied in homogeneous form θ(z) = num / den, so the factor
  // (θz - y)(θy - z) / ((θz - z)(θy - y)) needs no division per word; the
  // chunked partial products stay far from overflow.
  constexpr std::size_t kChunk = 16;
  for (std::size_t len = 1; len <= cap_ && !converged; ++len) {
    Complex update = 1.0;
    Complex top = 1.0;
    Complex bottom = 1.0;
    std::size_t pending = 0;
    for (const WordMap& w : words_->level(len)) {
      const Complex num = w.a * z + w.b;
      const Complex den = w.c * z + w.d;
      if (infinite_) {
        top *= (image_[k] - z) * den;
      } else {
        top *= (num - y_ * den) * (image_[k] - z) * inv_self_gap_[k];
      }
      bottom *= num - z * den;
      ++k;
      if (++pending == kChunk) {
        update *= quotient(top, bottom);
        top = bottom = 1.0;
        pending = 0;
      }
    }
    if (pending > 0) update *= quotient(top, bottom);
    value *= update;
    converged = stop.settle(update);
  }
  return stop.finish(value, converged, "omega_circular");
}

PrimeValue omega_circular(Complex z, Complex y, const CircularDomain& d, const TruncationPolicy& p) {
  return SchottkyPrime(d, p)(z, y);
}

PrimeValue omega_derivative_z(Complex z, Complex y, const CircularDomain& d, const TruncationPolicy& p) {
  return SchottkyPrime(d, p).derivative_z(z, y);
}

}  // namespace slitsqueeze
