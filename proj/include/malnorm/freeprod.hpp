#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malnorm/finite_group.hpp"
#include "malnorm/verdict.hpp"

namespace malnorm {

enum class Factor : std::uint8_t { A = 0, B = 1 };

constexpr Factor other(Factor f) noexcept { return f == Factor::A ? Factor::B : Factor::A; }

/// Free product A * B of two finite groups, with distinguished elements u in A
/// and v in B used for parsing and printing.
struct FactorSpec {
  FiniteGroup a;
  FiniteGroup b;
  ElementId u = 0;
  ElementId v = 0;

  const FiniteGroup& group(Factor f) const noexcept { return f == Factor::A ? a : b; }
  ElementId generator(Factor f) const noexcept { return f == Factor::A ? u : v; }
};

/// Throws InvalidParameters unless both factors have order >= 2 and u, v are
/// nontrivial.
FactorSpec make_factor_spec(FiniteGroup a, ElementId u, FiniteGroup b, ElementId v);

/// C_p * C_q with u, v the standard generators.
FactorSpec cyclic_factors(std::size_t p, std::size_t q);

struct Syllable {
  Factor factor;
  ElementId element;  // never the identity

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Normal form: nontrivial syllables with alternating factors.
struct FPWord {
  std::vector<Syllable> syllables;

  std::size_t length() const noexcept { return syllables.size(); }
  bool empty() const noexcept { return syllables.empty(); }

  friend bool operator==(const FPWord&, const FPWord&) = default;
  /// Syllable length first, then lexicographic on (factor, element).
  friend std::strong_ordering operator<=>(const FPWord& x, const FPWord& y);
};

FPWord fp_syllable(const FactorSpec& spec, Factor f, ElementId x);
FPWord fp_mul(const FactorSpec& spec, const FPWord& x, const FPWord& y);
FPWord fp_inv(const FactorSpec& spec, const FPWord& x);
FPWord fp_pow(const FactorSpec& spec, const FPWord& x, long long k);

/// Tokens `u` and `v` with optional `^k`, or `a[i]` and `b[i]` for raw
/// element indices, e.g. "u v^-1 u^2". "1" or "" is the identity. Throws
/// ParseError.
FPWord parse_fp_word(const FactorSpec& spec, std::string_view text);
/// Powers of u and v print as such; other elements as a[i] or b[i].
std::string to_string(const FactorSpec& spec, const FPWord& x);

/// A word considered up to rotation: length 0, 1, or even and alternating
/// around the wrap.
struct CyclicFPWord {
  FPWord word;
};

struct FPCyclicReduction {
  CyclicFPWord core;
  FPWord conjugator;  // x = conjugator * core * conjugator^-1
};

FPCyclicReduction fp_cyclic_reduce(const FactorSpec& spec, const FPWord& x);

/// Rotation by k syllables equal to y, if any.
std::optional<std::size_t> rotation_to(const CyclicFPWord& x, const CyclicFPWord& y);

/// Normal forms of syllable length <= radius in canonical order.
std::vector<FPWord> fp_ball(const FactorSpec& spec, std::size_t radius);

using FPWitness = ConjugationWitness<FPWord>;
using FPVerdict = MalnormalVerdict<FPWord>;
using FPScan = BoundedScan<FPWord>;

/// Exhaustive check of gXg^-1 n X = {e} for the factor X on `side`, over g
/// not in X with |g| <= radius.
FPScan factor_malnormal_scan(const FactorSpec& spec, Factor side, std::size_t radius);

/// Exact decision for <w>, w hyperbolic: malnormal iff w is not a proper power
/// and w^-1 is not conjugate to w. Conjugates of cyclically reduced words are
/// handled by transporting the verdict. Throws NotHyperbolic if w is
/// conjugate into a factor.
FPVerdict cyclic_malnormal(const FactorSpec& spec, const FPWord& w);

/// x in <w> for hyperbolic w, by syllable-length arithmetic.
bool in_cyclic_subgroup(const FactorSpec& spec, const FPWord& w, const FPWord& x);

/// Witness check for <w> with w hyperbolic.
bool verify_cyclic_witness(const FactorSpec& spec, const FPWord& w, const FPWitness& witness);

/// Independent oracle: conjugation scan over the radius ball with membership
/// in <gens> decided by a bounded product closure.
FPScan fp_bounded_violation(const FactorSpec& spec, const std::vector<FPWord>& gens,
                            std::size_t radius);

/// Membership in the Frobenius kernel set of H = the factor on `side`:
/// g = e, or g is not conjugate into H.
bool kernel_member(const FactorSpec& spec, const FPWord& g, Factor side = Factor::A);

/// h1 k and k^-1 h2 lie in the kernel set N of the side factor X while h1 h2
/// does not, so N is not closed under products.
struct KernelTriple {
  FPWord h1, h2, k;
  bool h1k_in_kernel = false;
  bool kinv_h2_in_kernel = false;
  bool h1h2_in_kernel = false;
};

/// h1 = h2 = the generator x of X, k = the other generator. Needs |x| >= 3 so
/// that h1 h2 = x^2 is a nontrivial element of X; throws InvalidParameters
/// otherwise.
KernelTriple kernel_triple(const FactorSpec& spec, Factor side);

struct TorusKnotQuotient {
  FactorSpec spec;
  FPWord uv;
  std::size_t p = 0;
  std::size_t q = 0;
  bool coprime = false;
  /// min(p, q) >= 2 and max(p, q) >= 3.
  bool fuchsian_hypothesis = false;
};

TorusKnotQuotient torus_knot_quotient(std::size_t p, std::size_t q);

}  // namespace malnorm
