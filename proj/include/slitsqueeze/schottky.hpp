#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/mobius.hpp"

namespace slitsqueeze {

/// θ_j(z) = δ_j + ρ_j² z / (1 - conj(δ_j) z) for each hole (δ_j, ρ_j): reflection
/// in the unit circle followed by reflection in hole j.
std::vector<MobiusMap> schottky_generators(const CircularDomain& d);

/// Raw coefficients of a group word.  Long words are nearly rank one, so
/// these bypass the singularity check of MobiusMap and carry the determinant
/// separately (it cannot be recovered from ad - bc without cancellation).
struct WordMap {
  Complex a, b, c, d;
  Complex det;

  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex derivative(Complex z) const {
    const Complex den = c * z + d;
    return det / (den * den);
  }
  Complex at_infinity() const { return a / c; }
};

/// Letters: 2j is θ_{j+1}, 2j+1 its inverse.
constexpr std::uint8_t inverse_letter(std::uint8_t letter) { return letter ^ 1U; }

/// Reduced words of the Schottky group, breadth-first by length.  Only one
/// word of each {w, w⁻¹} pair is kept: the lexicographically smaller one.
class SchottkyWords {
 public:
  /// Upper bound on stored words; enumeration beyond it is refused.
  static constexpr std::size_t kWordBudget = 4'000'000;

  SchottkyWords(const CircularDomain& d, std::size_t max_length);

  std::size_t generator_count() const { return generator_count_; }
  std::size_t max_length() const { return level_offsets_.size() - 1; }

  /// Representatives of length `length` (1-based).
  std::span<const WordMap> level(std::size_t length) const;
  /// Letters of representative `k` at `length`.
  std::span<const std::uint8_t> letters(std::size_t length, std::size_t k) const;

 private:
  std::size_t generator_count_;
  std::vector<WordMap> maps_;
  std::vector<std::uint8_t> letters_;
  std::vector<std::size_t> level_offsets_;
  std::vector<std::size_t> letter_offsets_;
};

}  // namespace slitsqueeze
