#pragma once

#include <complex>

namespace slitsqueeze::detail {

// std::complex division guards against overflow and inf/nan operands; the
// product loops only ever see finite, moderately scaled values.
inline std::complex<double> quotient(std::complex<double> num, std::complex<double> den) {
  const double n = std::norm(den);
  return {(num.real() * den.real() + num.imag() * den.imag()) / n,
          (num.imag() * den.real() - num.real() * den.imag()) / n};
}

inline bool finite(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace slitsqueeze::detail
