#pragma once

#include <cstddef>
#include <vector>

#include "malnorm/finite_group.hpp"
#include "malnorm/semidirect.hpp"
#include "malnorm/verdict.hpp"

namespace malnorm {

using FiniteVerdict = MalnormalVerdict<ElementId>;
using FiniteWitness = ConjugationWitness<ElementId>;

/// Decides malnormality of H in its parent group. `method` must be one of
/// definition, free_action or fixed_points.
FiniteVerdict is_malnormal(const Subgroup& h, VerdictMethod method = VerdictMethod::definition);

/// Re-checks a witness with raw permutation arithmetic, independently of the
/// group's index tables.
bool verify_witness(const Subgroup& h, const FiniteWitness& w);

/// {e} together with the elements acting without fixed points on G/H. Computed
/// twice (fixed points, and complement of the union of conjugates); throws
/// DefinitionsDisagree if the two differ.
std::vector<ElementId> frobenius_kernel(const Subgroup& h);

struct FrobeniusReport {
  bool is_frobenius_pair = false;
  std::vector<ElementId> kernel_elements;
  bool kernel_is_subgroup = false;
  bool kernel_normal = false;
  bool kernel_order_equals_index = false;
  bool kernel_nilpotent = false;
  bool kernel_abelian = false;
  bool splits = false;
  bool kernel_regular_on_cosets = false;
  bool congruence_holds = false;
  bool thompson_applies = false;
  bool fitting_equals_kernel = false;

  bool all_true() const noexcept;
};

/// Throws NotFrobeniusPair unless H is malnormal and distinct from {e}, G.
FrobeniusReport frobenius_analyze(const Subgroup& h, const Limits& limits = {});

struct HullResult {
  Subgroup hull;
  /// Conjugators joined in order.
  std::vector<ElementId> certificate;
};

/// Smallest malnormal subgroup containing H, by repeatedly joining the
/// canonical witness conjugator.
HullResult malnormal_hull(const Subgroup& h);

/// The same hull as the intersection of all malnormal overgroups, by lattice
/// scan. Throws CapExceeded above the lattice cap.
Subgroup malnormal_hull_by_lattice(const Subgroup& h, const Limits& limits = {});

struct SemidirectConditions {
  bool a = false;  // H malnormal in G
  bool d = false;  // nh != hn for n in N\{e}, h in H\{e}
  bool e = false;  // C_G(h) = C_H(h) for h in H\{e}
  bool f = false;  // C_G(n) = C_N(n) for n in N\{e}
};

/// Evaluates the four conditions and throws EquivalenceViolated unless
/// a <=> d <=> e and a <=> f.
SemidirectConditions semidirect_condition_suite(const SemidirectSpec& spec);
SemidirectConditions semidirect_conditions(const SemidirectProduct& product);

struct MalnormalCensus {
  /// Nontrivial proper malnormal subgroups, in lattice order.
  std::vector<Subgroup> subgroups;
  /// Conjugacy classes as indices into `subgroups`.
  std::vector<std::vector<std::size_t>> classes;
  bool all_conjugate = true;
  bool kernels_coincide = true;
  std::vector<ElementId> kernel;
};

MalnormalCensus malnormal_subgroup_census(const FiniteGroup& g, const Limits& limits = {});

}  // namespace malnorm
