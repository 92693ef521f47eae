#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/prime.hpp"
#include "slitsqueeze/slit_map.hpp"

// Brute-force validators.  Nothing here reuses the adaptive product loops:
// sampling is done point by point and the reference products use their own
// accumulation over ζ = z / y.
namespace slitsqueeze::oracle {

struct CircleStats {
  double mean_modulus;
  double min_modulus;
  double max_modulus;
  std::size_t samples;

  double spread() const { return max_modulus - min_modulus; }
};

/// |m(z)| over z = c.center + c.radius e^{2πik/n}, k = 0..n-1.
CircleStats sample_modulus_on_circle(const SlitMap& m, const Circle& c, std::size_t n);

/// max over n samples of Γ_i of | |m(z)| - 1 |.
double unimodularity_residual(const SlitMap& m, std::size_t n);

/// Fixed-length partial products of the annulus prime function, one per
/// entry of `terms` (0 gives z - y).  est_error is |last factor - 1|.
std::vector<PrimeValue> omega_partial_products(Complex z, Complex y, double q, std::span<const std::size_t> terms);

}  // namespace slitsqueeze::oracle
