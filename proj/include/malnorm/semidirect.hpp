#pragma once

#include <cstddef>
#include <vector>

#include "malnorm/finite_group.hpp"

namespace malnorm {

/// Data for N x| H: `action[h]` is the automorphism of N induced by the
/// complement element h, written as a permutation of N's element indices.
struct SemidirectSpec {
  FiniteGroup kernel;
  FiniteGroup complement;
  std::vector<Permutation> action;
};

struct SemidirectProduct {
  FiniteGroup group;
  Subgroup kernel;
  Subgroup complement;
  /// True when G was realized on the point set N (faithful action); false for
  /// the regular realization on N x H.
  bool realized_on_kernel = false;
};

/// Throws ActionNotHomomorphism when the action is not a homomorphism into
/// Aut(N). Asserts N normal, N n H = {e} and NH = G on the result.
SemidirectProduct semidirect_product(const SemidirectSpec& spec,
                                     std::size_t cap = Limits{}.element_cap);

/// Spec for two permutation groups on the same points where `complement`
/// normalizes `kernel`; the action is conjugation inside Sym(n).
SemidirectSpec conjugation_spec(const FiniteGroup& kernel, const FiniteGroup& complement);

/// Spec with every complement element acting trivially (direct product).
SemidirectSpec trivial_action_spec(const FiniteGroup& kernel, const FiniteGroup& complement);

}  // namespace malnorm
