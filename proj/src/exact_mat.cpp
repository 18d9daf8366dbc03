#include "malnorm/exact_mat.hpp"

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer multiplication overflow");
  return r;
}

void same_modulus(ModP a, ModP b) {
  if (a.p != b.p) throw InvalidParameters("mixing residues of different moduli");
}

}  // namespace

Integer operator+(Integer a, Integer b) { return {checked_add(a.v, b.v)}; }
Integer operator-(Integer a, Integer b) { return {checked_sub(a.v, b.v)}; }
Integer operator*(Integer a, Integer b) { return {checked_mul(a.v, b.v)}; }
Integer operator-(Integer a) { return {checked_sub(0, a.v)}; }
std::string Integer::to_string() const { return std::to_string(v); }

Gaussian operator+(Gaussian a, Gaussian b) {
  return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}
Gaussian operator-(Gaussian a, Gaussian b) {
  return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}
Gaussian operator*(Gaussian a, Gaussian b) {
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}
Gaussian operator-(Gaussian a) { return {checked_sub(0, a.re), checked_sub(0, a.im)}; }

std::string Gaussian::to_string() const {
  if (im == 0) return std::to_string(re);
  std::string imag = (im == 1 ? "" : im == -1 ? "-" : std::to_string(im)) + "i";
  if (re == 0) return imag;
  return std::to_string(re) + (im > 0 ? "+" : "") + imag;
}

ModP ModP::of(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r), p};
}

ModP operator+(ModP a, ModP b) {
  same_modulus(a, b);
  return {static_cast<std::uint32_t>((std::uint64_t(a.v) + b.v) % a.p), a.p};
}
ModP operator-(ModP a, ModP b) {
  same_modulus(a, b);
  return {static_cast<std::uint32_t>((std::uint64_t(a.v) + a.p - b.v) % a.p), a.p};
}
ModP operator*(ModP a, ModP b) {
  same_modulus(a, b);
  return {static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % a.p), a.p};
}
ModP operator-(ModP a) { return {static_cast<std::uint32_t>((a.p - a.v) % a.p), a.p}; }

ModP ModP::inverse() const {
  if (v == 0) throw InvalidParameters("zero has no inverse");
  // Fermat: v^(p-2).
  ModP result = one();
  ModP base = *this;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

std::string ModP::to_string() const { return std::to_string(v); }

}  // namespace malnorm
