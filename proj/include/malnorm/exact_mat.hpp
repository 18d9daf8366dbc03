#pragma once

#include <cstdint>
#include <string>

namespace malnorm {

/// Checked 64-bit integer; overflow throws ArithmeticOverflow.
struct Integer {
  std::int64_t v = 0;

  friend Integer operator+(Integer a, Integer b);
  friend Integer operator-(Integer a, Integer b);
  friend Integer operator*(Integer a, Integer b);
  friend Integer operator-(Integer a);
  friend bool operator==(Integer, Integer) = default;
  Integer zero() const { return {0}; }
  Integer one() const { return {1}; }
  std::string to_string() const;
};

/// Gaussian integer re + im*i with checked components.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend Gaussian operator+(Gaussian a, Gaussian b);
  friend Gaussian operator-(Gaussian a, Gaussian b);
  friend Gaussian operator*(Gaussian a, Gaussian b);
  friend Gaussian operator-(Gaussian a);
  friend bool operator==(Gaussian, Gaussian) = default;
  Gaussian zero() const { return {0, 0}; }
  Gaussian one() const { return {1, 0}; }
  std::string to_string() const;
};

/// Residue modulo a prime p < 2^31.
struct ModP {
  std::uint32_t v = 0;
  std::uint32_t p = 2;

  static ModP of(std::int64_t x, std::uint32_t p);
  friend ModP operator+(ModP a, ModP b);
  friend ModP operator-(ModP a, ModP b);
  friend ModP operator*(ModP a, ModP b);
  friend ModP operator-(ModP a);
  friend bool operator==(ModP, ModP) = default;
  ModP zero() const { return {0, p}; }
  ModP one() const { return {1 % p, p}; }
  /// Throws InvalidParameters for zero.
  ModP inverse() const;
  std::string to_string() const;
};

/// 2x2 matrix [[a, b], [c, d]] over an exact ring.
template <typename Ring>
struct ExactMat2 {
  Ring a, b, c, d;

  static ExactMat2 identity(const Ring& sample) {
    return {sample.one(), sample.zero(), sample.zero(), sample.one()};
  }

  friend ExactMat2 operator*(const ExactMat2& x, const ExactMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend ExactMat2 operator-(const ExactMat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend bool operator==(const ExactMat2&, const ExactMat2&) = default;

  Ring det() const { return a * d - b * c; }

  /// Inverse of a determinant-one matrix.
  ExactMat2 adjugate() const { return {d, -b, -c, a}; }

  /// Equality in PSL2: M = N or M = -N.
  bool projectively_equals(const ExactMat2& other) const {
    return *this == other || *this == -other;
  }

  bool is_upper_triangular() const { return c == c.zero(); }

  /// +-[[1, x], [0, 1]].
  bool is_unipotent_upper() const {
    const Ring one = a.one();
    return c == c.zero() && ((a == one && d == one) || (a == -one && d == -one));
  }

  std::string to_string() const {
    return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," +
           d.to_string() + "]]";
  }
};

}  // namespace malnorm
