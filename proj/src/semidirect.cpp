#include "malnorm/semidirect.hpp"

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

void validate(const SemidirectSpec& spec) {
  const FiniteGroup& n = spec.kernel;
  const FiniteGroup& h = spec.complement;
  if (spec.action.size() != h.order()) {
    throw ActionNotHomomorphism("action must list one automorphism per complement element");
  }
  for (ElementId k = 0; k < h.order(); ++k) {
    const Permutation& phi = spec.action[k];
    if (phi.degree() != n.order()) {
      throw ActionNotHomomorphism("automorphism has wrong degree");
    }
    // Multiplicativity against generators of N suffices by induction.
    for (ElementId a = 0; a < n.order(); ++a) {
      for (ElementId s : n.generators()) {
        if (phi[n.mul(a, s)] != n.mul(phi[a], phi[s])) {
          throw ActionNotHomomorphism("action image is not an automorphism of the kernel");
        }
      }
    }
  }
  if (!spec.action[FiniteGroup::identity()].is_identity()) {
    throw ActionNotHomomorphism("identity must act trivially");
  }
  for (ElementId a = 0; a < h.order(); ++a) {
    for (ElementId t : h.generators()) {
      if (spec.action[h.mul(a, t)] != spec.action[a] * spec.action[t]) {
        throw ActionNotHomomorphism("action is not a homomorphism into Aut(N)");
      }
    }
  }
}

}  // namespace

SemidirectProduct semidirect_product(const SemidirectSpec& spec, std::size_t cap) {
  validate(spec);
  const FiniteGroup& n = spec.kernel;
  const FiniteGroup& h = spec.complement;

  bool faithful = true;
  for (ElementId k = 1; k < h.order(); ++k) {
    if (spec.action[k].is_identity()) faithful = false;
  }

  // (m, k) acts on n by n -> m * phi_k(n), or on pairs (n, j) by
  // (n, j) -> (m * phi_k(n), k j) when the action is not faithful.
  auto realize = [&](ElementId m, ElementId k) {
    const Permutation& phi = spec.action[k];
    if (faithful) {
      std::vector<Point> images(n.order());
      for (ElementId x = 0; x < n.order(); ++x) images[x] = n.mul(m, phi[x]);
      return Permutation(std::move(images));
    }
    std::vector<Point> images(n.order() * h.order());
    for (ElementId x = 0; x < n.order(); ++x) {
      for (ElementId j = 0; j < h.order(); ++j) {
        images[x * h.order() + j] =
            static_cast<Point>(n.mul(m, phi[x]) * h.order() + h.mul(k, j));
      }
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElementId s : n.generators()) gens.push_back(realize(s, FiniteGroup::identity()));
  for (ElementId t : h.generators()) gens.push_back(realize(FiniteGroup::identity(), t));
  std::size_t degree = faithful ? n.order() : n.order() * h.order();
  FiniteGroup g = FiniteGroup::generate(degree, gens, cap);

  std::vector<ElementId> kernel_members;
  for (ElementId m = 0; m < n.order(); ++m) {
    kernel_members.push_back(g.index_of(realize(m, FiniteGroup::identity())));
  }
  std::vector<ElementId> complement_members;
  for (ElementId k = 0; k < h.order(); ++k) {
    complement_members.push_back(g.index_of(realize(FiniteGroup::identity(), k)));
  }
  Subgroup kernel = Subgroup::from_members(g, kernel_members);
  Subgroup complement = Subgroup::from_members(g, complement_members);

  if (g.order() != n.order() * h.order() || !kernel.is_normal() ||
      !intersect(kernel, complement).is_trivial()) {
    throw AssertionFailure("semidirect product construction is inconsistent");
  }
  return {g, kernel, complement, faithful};
}

SemidirectSpec conjugation_spec(const FiniteGroup& kernel, const FiniteGroup& complement) {
  if (kernel.degree() != complement.degree()) {
    throw InvalidParameters("kernel and complement must act on the same points");
  }
  std::vector<Permutation> action;
  for (const Permutation& k : complement.elements()) {
    Permutation k_inv = k.inverse();
    std::vector<Point> images(kernel.order());
    for (ElementId x = 0; x < kernel.order(); ++x) {
      auto y = kernel.find(k * kernel.element(x) * k_inv);
      if (!y) throw ActionNotHomomorphism("complement does not normalize the kernel");
      images[x] = *y;
    }
    action.emplace_back(std::move(images));
  }
  return {kernel, complement, std::move(action)};
}

SemidirectSpec trivial_action_spec(const FiniteGroup& kernel, const FiniteGroup& complement) {
  std::vector<Permutation> action(complement.order(), Permutation(kernel.order()));
  return {kernel, complement, std::move(action)};
}

}  // namespace malnorm
