#include "slitsqueeze/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze::oracle {

CircleStats sample_modulus_on_circle(const SlitMap& m, const Circle& c, std::size_t n) {
  if (n < 8) throw Error(ErrorKind::InvalidArgument, "oracle sampling needs n >= 8");
  CircleStats s{0.0, std::numeric_limits<double>::infinity(), 0.0, n};
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double r = std::abs(m(c.center + std::polar(c.radius, angle)));
    s.mean_modulus += r;
    s.min_modulus = std::min(s.min_modulus, r);
    s.max_modulus = std::max(s.max_modulus, r);
  }
  s.mean_modulus /= static_cast<double>(n);
  return s;
}

double unimodularity_residual(const SlitMap& m, std::size_t n) {
  if (n < 8) throw Error(ErrorKind::InvalidArgument, "oracle sampling needs n >= 8");
  const Circle c = m.domain().boundary(m.boundary_index());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    worst = std::max(worst, std::abs(std::abs(m(c.center + std::polar(c.radius, angle))) - 1.0));
  }
  return worst;
}

std::vector<PrimeValue> omega_partial_products(Complex z, Complex y, double q, std::span<const std::size_t> terms) {
  if (z == Complex{} || y == Complex{}) throw Error(ErrorKind::ZeroArgument, "partial products need z, y != 0");
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "q must satisfy 0 < q < 1");
  // (z - q²ⁿy)(y - q²ⁿz) / ((z - q²ⁿz)(y - q²ⁿy)) = (1 - q²ⁿζ)(1 - q²ⁿ/ζ) / (1 - q²ⁿ)²
  const Complex zeta = z / y;
  std::vector<PrimeValue> out;
  out.reserve(terms.size());
  for (const std::size_t n_terms : terms) {
    Complex product = z - y;
    double last = 0.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
      const double t = std::pow(q, 2.0 * static_cast<double>(n));
      const Complex factor = (1.0 - t * zeta) * (1.0 - t / zeta) / ((1.0 - t) * (1.0 - t));
      product *= factor;
      last = std::abs(factor - 1.0);
    }
    out.push_back({product, last, n_terms, true});
  }
  return out;
}

}  // namespace slitsqueeze::oracle
