#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace malnorm {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). Every group in this
/// library acts on the left with this convention.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidPermutation unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint 0-indexed cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::span<const std::vector<Point>> cycles);

  /// Parses 1-indexed cycle notation such as "(1 2 3)(4 5)" or "()".
  /// Cycles must be disjoint.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::vector<std::vector<Point>> cycles() const;

  /// 1-indexed cycle notation; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace malnorm
