#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "malnorm/permutation.hpp"

namespace malnorm {

/// Index of an element in the canonical element order of its group.
using ElementId = std::uint32_t;

/// Size limits shared by the finite-group algorithms.
struct Limits {
  std::size_t element_cap = 20000;
  std::size_t lattice_cap = 200;
  std::size_t normal_lattice_cap = 2000;
};

/// A finite permutation group with every element enumerated.
///
/// Elements are ordered by word length in the generators, ties broken by the
/// lexicographic order of image sequences; the identity is always element 0.
/// Copies share the same immutable storage.
class FiniteGroup {
 public:
  /// Closure of `gens` acting on `degree` points. Throws CapExceeded when the
  /// group has more than `cap` elements.
  static FiniteGroup generate(std::size_t degree, std::span<const Permutation> gens,
                              std::size_t cap = Limits{}.element_cap);

  static constexpr ElementId identity() noexcept { return 0; }

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const Permutation& element(ElementId i) const;
  std::span<const Permutation> elements() const noexcept;
  std::span<const ElementId> generators() const noexcept;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  /// g x g^-1
  ElementId conj(ElementId g, ElementId x) const;
  /// a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const;
  ElementId pow(ElementId a, long long k) const;
  std::size_t element_order(ElementId a) const;

  std::optional<ElementId> find(const Permutation& p) const;
  /// Like find(), but throws InputError when `p` is not in the group.
  ElementId index_of(const Permutation& p) const;

  /// True when both handles refer to the same constructed group.
  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a FiniteGroup stored as a sorted set of element indices.
class Subgroup {
 public:
  static Subgroup generated_by(const FiniteGroup& g, std::span<const ElementId> gens);
  /// Throws InputError when `members` is not closed under products.
  static Subgroup from_members(const FiniteGroup& g, std::vector<ElementId> members);
  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const ElementId> members() const noexcept { return members_; }
  std::span<const ElementId> generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_.order() / members_.size(); }
  bool contains(ElementId x) const { return mask_[x]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal() const;
  bool is_abelian() const;
  /// g H g^-1
  Subgroup conjugate(ElementId g) const;

  /// The subgroup as a standalone group on the same points.
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(FiniteGroup parent, std::vector<ElementId> members, std::vector<ElementId> gens);

  FiniteGroup parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> gens_;
  std::vector<bool> mask_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, ElementId g);

/// Left action of G on the cosets gH. Coset 0 is H itself.
class CosetAction {
 public:
  explicit CosetAction(const Subgroup& h);

  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t coset_count() const noexcept { return reps_.size(); }
  std::uint32_t basepoint() const noexcept { return 0; }
  ElementId representative(std::uint32_t coset) const { return reps_[coset]; }
  std::uint32_t coset_of(ElementId g) const { return coset_of_[g]; }
  std::uint32_t act(ElementId g, std::uint32_t coset) const;
  std::vector<std::uint32_t> fixed_points(ElementId g) const;
  std::size_t fixed_point_count(ElementId g) const;

 private:
  Subgroup subgroup_;
  std::vector<ElementId> reps_;
  std::vector<std::uint32_t> coset_of_;
};

CosetAction coset_action(const Subgroup& h);

Subgroup centralizer(const FiniteGroup& g, ElementId h);
/// Elements of `within` commuting with h.
Subgroup centralizer(const Subgroup& within, ElementId h);
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const Subgroup& h);
std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& g);
Subgroup normal_closure(const FiniteGroup& g, std::span<const ElementId> elements);
/// [S, S]
Subgroup derived_subgroup(const Subgroup& s);
/// [A, B] for subgroups of a common parent.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// S = G_1 >= G_2 = [G_1, S] >= ... until the series stabilizes.
std::vector<Subgroup> lower_central_series(const Subgroup& s);

struct Nilpotency {
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
};
Nilpotency is_nilpotent(const Subgroup& s);

/// Every normal subgroup, found as joins of normal closures of conjugacy
/// classes. Throws CapExceeded when |G| > limits.normal_lattice_cap.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});
Subgroup fitting_subgroup(const FiniteGroup& g, const Limits& limits = {});

/// Invariant factors d_1 | d_2 | ... of G/[G,G]; empty for perfect groups.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);

/// Every subgroup, sorted by (order, members). Throws CapExceeded when
/// |G| > limits.lattice_cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

}  // namespace malnorm
