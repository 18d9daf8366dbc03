#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "malnorm/exact_mat.hpp"
#include "malnorm/finite_group.hpp"
#include "malnorm/freeprod.hpp"
#include "malnorm/report.hpp"

namespace malnorm {

using IntMat = ExactMat2<Integer>;
using GaussMat = ExactMat2<Gaussian>;

/// Image of a word of C2 * C3 in SL2(Z), read in PSL2(Z): u -> [[0,1],[-1,0]],
/// v -> [[0,-1],[1,1]], so that uv -> [[1,1],[0,1]]. Throws InvalidParameters
/// unless the factors have orders 2 and 3.
IntMat psl2z_embed(const FactorSpec& spec, const FPWord& w);

/// Representative of the class of m in PSL2 with first nonzero entry positive.
IntMat projective_normal_form(const IntMat& m);

/// Relations, the image of uv, injectivity on the syllable-length ball and the
/// homomorphism property on random pairs.
Report psl2z_report(std::size_t radius = 12, std::uint64_t seed = 0, std::size_t pairs = 1000);

/// Abelianization of C_p * C_q, i.e. C_p x C_q, and whether it maps onto Z.
Report psl2z_no_splitting_report(std::size_t p = 2, std::size_t q = 3);

Report picard_identities();

struct AffineGroup {
  FiniteGroup group;
  /// Stabilizer of 0, the multiplicative group.
  Subgroup stabilizer;
  /// Translations.
  Subgroup translations;
};

/// AGL(1, p) acting on F_p by x -> ax + b. Throws NotPrime; p must be <= 257.
AffineGroup affine_group(std::size_t p);
Report affine_report(std::size_t p);

/// PGL2(F_q) on the projective line, a finite-field analogue of the torus
/// inside the two Borel subgroups. Throws UnsupportedField unless q is a prime
/// in [5, 13].
Report pgl2_borel_analysis(std::size_t q);

/// Element of S wr Z: finitely supported base plus a shift.
struct LampElement {
  std::map<std::int64_t, ElementId> base;  // no identity values
  std::int64_t shift = 0;

  friend bool operator==(const LampElement&, const LampElement&) = default;
};

/// (f1, k1)(f2, k2) = (f1 * shift^k1(f2), k1 + k2).
LampElement lamp_mul(const FiniteGroup& s, const LampElement& x, const LampElement& y);
LampElement lamp_inv(const FiniteGroup& s, const LampElement& x);

Report lamplighter_checks(const FiniteGroup& s, const std::string& name, std::uint64_t seed = 0);

/// <a> in F2 against its image in the abelianization reduced mod n. With
/// `whole`, H = F2 instead.
Report prop2xi_demo(std::size_t n, bool whole = false);

}  // namespace malnorm
