#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "malnorm/stallings.hpp"
#include "malnorm/verdict.hpp"

namespace malnorm {

using FreeVerdict = MalnormalVerdict<FreeWord>;
using FreeWitness = ConjugationWitness<FreeWord>;

/// One connected component of the fiber product of a subgroup graph with
/// itself. Components other than the diagonal one correspond to double cosets
/// HgH with g not in H; their cycles give H n gHg^-1.
struct PullbackComponent {
  std::vector<std::pair<Vertex, Vertex>> vertices;
  bool is_diagonal = false;
  std::size_t betti = 0;
  /// Shortlex-least t_p t_q^-1 over the component's vertices (p, q), where t_v
  /// is the spanning-tree word of v. Empty on the diagonal.
  FreeWord witness;
};

std::vector<PullbackComponent> self_pullback(const StallingsGraph& h);

/// H is malnormal iff every non-diagonal pullback component is a tree. On
/// failure the witness comes from the component with the shortlex-least
/// representative and is re-verified by membership tests.
FreeVerdict is_malnormal_free(const StallingsGraph& h);

/// x != e, x in H, g not in H, g^-1 x g in H.
bool verify_witness(const StallingsGraph& h, const FreeWitness& w);

struct FreeHull {
  StallingsGraph hull;
  std::vector<FreeWord> certificate;
};

inline constexpr std::size_t kDefaultClosureBudget = 64;

/// Smallest malnormal subgroup containing H, by joining witness conjugators.
/// Throws IterationBudgetExceeded after `budget` joins.
FreeHull malnormal_closure_free(const StallingsGraph& h,
                                std::size_t budget = kDefaultClosureBudget);

struct HallCompletion {
  /// Finite cover containing H's graph; its subgroup is F0.
  StallingsGraph covering;
  /// H's basis first, then the complement.
  std::vector<FreeWord> f0_basis;
  /// H's basis rewritten over f0_basis (generator i is f0_basis[i]).
  std::vector<FreeWord> h_in_f0;
  std::vector<FreeWord> complement_basis;

  std::size_t index() const noexcept { return covering.vertex_count(); }
};

/// Completes H's graph to a finite cover, giving F0 of finite index with
/// F0 = H * K. Certifies the splitting and that H is malnormal in F0; a
/// failed certificate throws IdentityFailed.
HallCompletion hall_completion(const StallingsGraph& h);

using FreeScan = BoundedScan<FreeWord>;

/// Scans every reduced g with |g| <= radius, g not in H, for a nontrivial
/// H n gHg^-1. Independent of the pullback criterion.
FreeScan bounded_violation_search(const StallingsGraph& h, std::size_t radius);

}  // namespace malnorm
