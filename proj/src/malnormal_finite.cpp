#include "malnorm/malnormal_finite.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "malnorm/errors.hpp"

namespace malnorm {

std::string_view to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::definition: return "definition";
    case VerdictMethod::free_action: return "free-action";
    case VerdictMethod::fixed_points: return "fixed-points";
    case VerdictMethod::pullback: return "pullback";
    case VerdictMethod::normal_form: return "normal-form";
  }
  return "unknown";
}

namespace {

FiniteVerdict by_definition(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  CosetAction cosets(h);
  std::vector<bool> checked(cosets.coset_count(), false);
  checked[cosets.basepoint()] = true;
  // gHg^-1 depends only on gH; the first element met in each coset is its
  // smallest, so the first failure found carries the smallest conjugator.
  for (ElementId c = 0; c < g.order(); ++c) {
    std::uint32_t coset = cosets.coset_of(c);
    if (checked[coset]) continue;
    checked[coset] = true;
    ElementId c_inv = g.inv(c);
    for (ElementId x : h.members()) {
      if (x == FiniteGroup::identity()) continue;
      if (h.contains(g.mul(g.mul(c_inv, x), c))) {
        return {false, FiniteWitness{c, x}, VerdictMethod::definition, false};
      }
    }
  }
  return {true, std::nullopt, VerdictMethod::definition, false};
}

FiniteVerdict by_free_action(const Subgroup& h) {
  CosetAction cosets(h);
  for (std::uint32_t c = 0; c < cosets.coset_count(); ++c) {
    if (c == cosets.basepoint()) continue;
    for (ElementId x : h.members()) {
      if (x == FiniteGroup::identity()) continue;
      if (cosets.act(x, c) == c) {
        return {false, FiniteWitness{cosets.representative(c), x}, VerdictMethod::free_action,
                false};
      }
    }
  }
  return {true, std::nullopt, VerdictMethod::free_action, false};
}

FiniteVerdict by_fixed_points(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  CosetAction cosets(h);
  for (ElementId x = 1; x < g.order(); ++x) {
    auto fixed = cosets.fixed_points(x);
    if (fixed.size() < 2) continue;
    // x fixes cH and dH: c^-1 x c lies in H and in (c^-1 d) H (c^-1 d)^-1.
    ElementId c = cosets.representative(fixed[0]);
    ElementId d = cosets.representative(fixed[1]);
    ElementId c_inv = g.inv(c);
    FiniteWitness w{g.mul(c_inv, d), g.mul(g.mul(c_inv, x), c)};
    return {false, w, VerdictMethod::fixed_points, false};
  }
  return {true, std::nullopt, VerdictMethod::fixed_points, false};
}

bool subset_of(const Subgroup& a, const Subgroup& b) {
  return std::all_of(a.members().begin(), a.members().end(),
                     [&](ElementId x) { return b.contains(x); });
}

}  // namespace

FiniteVerdict is_malnormal(const Subgroup& h, VerdictMethod method) {
  if (h.is_trivial() || h.is_whole()) return {true, std::nullopt, method, true};
  switch (method) {
    case VerdictMethod::definition: return by_definition(h);
    case VerdictMethod::free_action: return by_free_action(h);
    case VerdictMethod::fixed_points: return by_fixed_points(h);
    default: throw InvalidParameters("method not available for finite groups");
  }
}

bool verify_witness(const Subgroup& h, const FiniteWitness& w) {
  const FiniteGroup& g = h.parent();
  if (w.conjugator >= g.order() || w.element >= g.order()) return false;
  const Permutation& c = g.element(w.conjugator);
  const Permutation& x = g.element(w.element);
  if (x.is_identity()) return false;
  auto in_h = [&](const Permutation& p) {
    auto id = g.find(p);
    return id && h.contains(*id);
  };
  // x in gHg^-1 iff g^-1 x g in H.
  return in_h(x) && !in_h(c) && in_h(c.inverse() * x * c);
}

std::vector<ElementId> frobenius_kernel(const Subgroup& h) {
  if (h.is_trivial() || h.is_whole()) {
    throw InvalidParameters("Frobenius kernel needs a subgroup distinct from {e} and G");
  }
  const FiniteGroup& g = h.parent();
  CosetAction cosets(h);

  std::vector<ElementId> by_fixed_points{FiniteGroup::identity()};
  for (ElementId x = 1; x < g.order(); ++x) {
    if (cosets.fixed_point_count(x) == 0) by_fixed_points.push_back(x);
  }

  std::vector<bool> in_conjugate(g.order(), false);
  for (std::uint32_t c = 0; c < cosets.coset_count(); ++c) {
    ElementId r = cosets.representative(c);
    for (ElementId x : h.members()) in_conjugate[g.conj(r, x)] = true;
  }
  std::vector<ElementId> by_union{FiniteGroup::identity()};
  for (ElementId x = 1; x < g.order(); ++x) {
    if (!in_conjugate[x]) by_union.push_back(x);
  }

  if (by_fixed_points != by_union) {
    throw DefinitionsDisagree("fixed-point-free kernel differs from complement of conjugates");
  }
  return by_fixed_points;
}

bool FrobeniusReport::all_true() const noexcept {
  return is_frobenius_pair && kernel_is_subgroup && kernel_normal && kernel_order_equals_index &&
         kernel_nilpotent && kernel_abelian && splits && kernel_regular_on_cosets &&
         congruence_holds && thompson_applies && fitting_equals_kernel;
}

FrobeniusReport frobenius_analyze(const Subgroup& h, const Limits& limits) {
  if (h.is_trivial() || h.is_whole() || !is_malnormal(h).malnormal) {
    throw NotFrobeniusPair("subgroup is not a malnormal subgroup distinct from {e} and G");
  }
  const FiniteGroup& g = h.parent();
  FrobeniusReport report;
  report.is_frobenius_pair = true;
  report.kernel_elements = frobenius_kernel(h);
  const auto& kernel = report.kernel_elements;

  std::vector<bool> mask(g.order(), false);
  for (ElementId x : kernel) mask[x] = true;

  Subgroup closure = Subgroup::generated_by(g, kernel);
  report.kernel_is_subgroup = closure.order() == kernel.size();
  report.kernel_normal = std::all_of(kernel.begin(), kernel.end(), [&](ElementId x) {
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](ElementId s) { return mask[g.conj(s, x)]; });
  });
  report.kernel_order_equals_index = kernel.size() == h.index();
  report.congruence_holds = kernel.size() % h.order() == 1 % h.order();

  if (report.kernel_is_subgroup) {
    const Subgroup& n = closure;
    report.kernel_nilpotent = is_nilpotent(n).nilpotent;
    report.kernel_abelian = n.is_abelian();
    report.splits = report.kernel_normal && intersect(n, h).is_trivial() &&
                    n.order() * h.order() == g.order();

    CosetAction cosets(h);
    bool free = true;
    for (std::uint32_t c = 0; c < cosets.coset_count() && free; ++c) {
      for (ElementId x : n.members()) {
        if (x != FiniteGroup::identity() && cosets.act(x, c) == c) {
          free = false;
          break;
        }
      }
    }
    std::set<std::uint32_t> orbit;
    for (ElementId x : n.members()) orbit.insert(cosets.act(x, cosets.basepoint()));
    report.kernel_regular_on_cosets = free && orbit.size() == cosets.coset_count();

    report.fitting_equals_kernel = fitting_subgroup(g, limits) == n;
  }
  report.thompson_applies = h.order() % 2 == 1 || report.kernel_abelian;
  return report;
}

HullResult malnormal_hull(const Subgroup& h) {
  HullResult result{h, {}};
  while (true) {
    FiniteVerdict v = is_malnormal(result.hull, VerdictMethod::definition);
    if (v.malnormal) break;
    ElementId g = v.witness->conjugator;
    result.certificate.push_back(g);
    result.hull = join(result.hull, g);
  }
  return result;
}

Subgroup malnormal_hull_by_lattice(const Subgroup& h, const Limits& limits) {
  Subgroup hull = Subgroup::whole(h.parent());
  for (const auto& s : all_subgroups(h.parent(), limits)) {
    if (subset_of(h, s) && is_malnormal(s).malnormal) hull = intersect(hull, s);
  }
  return hull;
}

SemidirectConditions semidirect_conditions(const SemidirectProduct& product) {
  const FiniteGroup& g = product.group;
  const Subgroup& n = product.kernel;
  const Subgroup& h = product.complement;

  SemidirectConditions c;
  c.a = is_malnormal(h).malnormal;
  c.d = true;
  for (ElementId x : n.members()) {
    if (x == FiniteGroup::identity()) continue;
    for (ElementId y : h.members()) {
      if (y != FiniteGroup::identity() && g.mul(x, y) == g.mul(y, x)) c.d = false;
    }
  }
  c.e = std::all_of(h.members().begin(), h.members().end(), [&](ElementId y) {
    return y == FiniteGroup::identity() || subset_of(centralizer(g, y), h);
  });
  c.f = std::all_of(n.members().begin(), n.members().end(), [&](ElementId x) {
    return x == FiniteGroup::identity() || subset_of(centralizer(g, x), n);
  });

  if (c.a != c.d || c.a != c.e) {
    throw EquivalenceViolated("conditions (a), (d), (e) disagree");
  }
  if (c.f && !c.a) throw EquivalenceViolated("(f) holds but (a) fails");
  if (c.a && !c.f) throw EquivalenceViolated("(a) holds but (f) fails in a finite group");
  return c;
}

SemidirectConditions semidirect_condition_suite(const SemidirectSpec& spec) {
  return semidirect_conditions(semidirect_product(spec));
}

MalnormalCensus malnormal_subgroup_census(const FiniteGroup& g, const Limits& limits) {
  MalnormalCensus census;
  for (auto& s : all_subgroups(g, limits)) {
    if (!s.is_trivial() && !s.is_whole() && is_malnormal(s).malnormal) {
      census.subgroups.push_back(std::move(s));
    }
  }

  std::vector<bool> assigned(census.subgroups.size(), false);
  for (std::size_t i = 0; i < census.subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::set<std::vector<ElementId>> conjugates;
    for (ElementId x = 0; x < g.order(); ++x) {
      Subgroup c = census.subgroups[i].conjugate(x);
      conjugates.emplace(c.members().begin(), c.members().end());
    }
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < census.subgroups.size(); ++j) {
      const auto& m = census.subgroups[j].members();
      if (!assigned[j] && conjugates.count(std::vector<ElementId>(m.begin(), m.end()))) {
        assigned[j] = true;
        cls.push_back(j);
      }
    }
    census.classes.push_back(std::move(cls));
  }
  census.all_conjugate = census.classes.size() <= 1;

  for (std::size_t i = 0; i < census.subgroups.size(); ++i) {
    auto kernel = frobenius_kernel(census.subgroups[i]);
    if (i == 0) {
      census.kernel = std::move(kernel);
    } else if (kernel != census.kernel) {
      census.kernels_coincide = false;
    }
  }
  return census;
}

}  // namespace malnorm
