#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace malnorm {

/// Generator i is letter 2i, its inverse is 2i + 1. Comparing codes orders
/// letters as a < a^-1 < b < b^-1 < ...
using Letter = std::uint32_t;

constexpr Letter make_letter(std::uint32_t generator, bool inverted = false) noexcept {
  return 2 * generator + (inverted ? 1 : 0);
}
constexpr std::uint32_t generator_of(Letter l) noexcept { return l >> 1; }
constexpr bool is_inverted(Letter l) noexcept { return (l & 1) != 0; }
constexpr Letter inverse_letter(Letter l) noexcept { return l ^ 1; }

/// A freely reduced word in the free group on generators a, b, c, ...
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces `letters`.
  explicit FreeWord(std::span<const Letter> letters);
  explicit FreeWord(std::initializer_list<Letter> letters)
      : FreeWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  static FreeWord generator(std::uint32_t i) { return FreeWord{make_letter(i)}; }

  /// Grammar: letters a-z, optional `^k` exponent with signed k, whitespace
  /// juxtaposition. "1" and the empty string denote the identity.
  static FreeWord parse(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// One more than the largest generator index used; 0 for the identity.
  std::uint32_t generators_used() const noexcept;

  FreeWord inverse() const;
  FreeWord pow(long long k) const;

  /// Exponent-compressed form, e.g. "a^2 b a^-1 b^-1"; the identity is "1".
  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Shortlex: shorter words first, then lexicographic on letter codes.
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  std::vector<Letter> letters_;
};

/// Comma-separated list of words.
std::vector<FreeWord> parse_word_list(std::string_view text);

struct CyclicReduction {
  FreeWord core;
  FreeWord conjugator;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const FreeWord& w);

/// Conjugate g w g^-1.
FreeWord conjugate(const FreeWord& g, const FreeWord& w);

/// Reduced words of length at most `radius` over `rank` generators, in
/// shortlex order, starting with the identity.
std::vector<FreeWord> shortlex_ball(std::uint32_t rank, std::size_t radius);

}  // namespace malnorm
