#include "slitsqueeze/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

std::vector<MobiusMap> schottky_generators(const CircularDomain& d) {
  std::vector<MobiusMap> out;
  out.reserve(d.hole_count());
  for (const auto& h : d.holes()) {
    const Complex delta = h.center;
    const double rho2 = h.radius * h.radius;
    out.emplace_back(rho2 - std::norm(delta), delta, -std::conj(delta), 1.0);
  }
  return out;
}

namespace {

WordMap multiply(const WordMap& x, const WordMap& y) {
  WordMap r{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d, x.det * y.det};
  const double scale = std::max({std::abs(r.a), std::abs(r.b), std::abs(r.c), std::abs(r.d)});
  if (scale > 0.0) {
    r.a /= scale;
    r.b /= scale;
    r.c /= scale;
    r.d /= scale;
    r.det /= scale * scale;
  }
  return r;
}

bool precedes_inverse(std::span<const std::uint8_t> word) {
  const std::size_t n = word.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint8_t inv = inverse_letter(word[n - 1 - k]);
    if (word[k] != inv) return word[k] < inv;
  }
  return false;
}

}  // namespace

SchottkyWords::SchottkyWords(const CircularDomain& d, std::size_t max_length)
    : generator_count_(d.hole_count()) {
  if (max_length == 0) throw Error(ErrorKind::InvalidArgument, "word length cap must be >= 1");

  std::vector<WordMap> letters_maps;
  for (const auto& g : schottky_generators(d)) {
    const MobiusMap inv = g.inverse();
    letters_maps.push_back({g.a(), g.b(), g.c(), g.d(), g.determinant()});
    letters_maps.push_back({inv.a(), inv.b(), inv.c(), inv.d(), inv.determinant()});
  }
  const auto alphabet = static_cast<std::uint8_t>(letters_maps.size());

  // Full current level (both orientations), needed to extend by one letter.
  std::vector<WordMap> cur_maps = letters_maps;
  std::vector<std::uint8_t> cur_letters;
  for (std::uint8_t x = 0; x < alphabet; ++x) cur_letters.push_back(x);

  level_offsets_.push_back(0);
  letter_offsets_.push_back(0);
  std::size_t stored = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t count = cur_maps.size();
    for (std::size_t k = 0; k < count; ++k) {
      std::span<const std::uint8_t> word(cur_letters.data() + k * len, len);
      if (precedes_inverse(word)) {
        maps_.push_back(cur_maps[k]);
        letters_.insert(letters_.end(), word.begin(), word.end());
      }
    }
    level_offsets_.push_back(maps_.size());
    letter_offsets_.push_back(letters_.size());
    stored += count;
    if (len == max_length) break;

    const std::size_t next_count = count * (alphabet - 1);
    if (stored + next_count > kWordBudget) {
      throw Error(ErrorKind::InvalidArgument,
                  "Schottky word enumeration to length " + std::to_string(max_length) +
                      " exceeds the word budget; lower max_word_length");
    }
    std::vector<WordMap> next_maps;
    std::vector<std::uint8_t> next_letters;
    next_maps.reserve(next_count);
    next_letters.reserve(next_count * (len + 1));
    for (std::size_t k = 0; k < count; ++k) {
      const std::uint8_t* word = cur_letters.data() + k * len;
      const std::uint8_t forbidden = inverse_letter(word[len - 1]);
      for (std::uint8_t x = 0; x < alphabet; ++x) {
        if (x == forbidden) continue;
        next_maps.push_back(multiply(cur_maps[k], letters_maps[x]));
        next_letters.insert(next_letters.end(), word, word + len);
        next_letters.push_back(x);
      }
    }
    cur_maps = std::move(next_maps);
    cur_letters = std::move(next_letters);
  }
}

std::span<const WordMap> SchottkyWords::level(std::size_t length) const {
  if (length == 0 || length > max_length()) {
    throw Error(ErrorKind::InvalidArgument, "word level out of range");
  }
  return {maps_.data() + level_offsets_[length - 1], level_offsets_[length] - level_offsets_[length - 1]};
}

std::span<const std::uint8_t> SchottkyWords::letters(std::size_t length, std::size_t k) const {
  const auto lvl = level(length);
  if (k >= lvl.size()) throw Error(ErrorKind::InvalidArgument, "word index out of range");
  return {letters_.data() + letter_offsets_[length - 1] + k * length, length};
}

}  // namespace slitsqueeze
