#include "malnorm/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

// Groups at most this large get a precomputed multiplication table.
constexpr std::size_t kTableLimit = 1024;

}  // namespace

struct FiniteGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  std::vector<ElementId> generators;
  std::unordered_map<Permutation, ElementId, PermutationHash> index;
  std::vector<ElementId> inverse;
  std::vector<ElementId> table;

  ElementId lookup(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw AssertionFailure("product left the group");
    return it->second;
  }
};

FiniteGroup FiniteGroup::generate(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t cap) {
  if (degree == 0) throw InvalidPermutation("degree must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidPermutation("generator " + g.to_string() + " has degree " +
                               std::to_string(g.degree()) + ", expected " +
                               std::to_string(degree));
    }
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;

  // Breadth-first by word length; each layer sorted by image sequence.
  std::unordered_map<Permutation, bool, PermutationHash> seen;
  std::vector<Permutation> layer{Permutation(degree)};
  seen.emplace(layer.front(), true);
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (auto& p : layer) data->elements.push_back(p);
    if (data->elements.size() > cap) {
      throw CapExceeded("group order exceeds element cap " + std::to_string(cap));
    }
    std::vector<Permutation> next;
    for (const auto& x : layer) {
      for (const auto& s : gens) {
        Permutation y = x * s;
        if (seen.emplace(y, true).second) next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }

  const std::size_t n = data->elements.size();
  data->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->index.emplace(data->elements[i], static_cast<ElementId>(i));
  }
  data->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->inverse[i] = data->lookup(data->elements[i].inverse());
  }
  for (const auto& s : gens) {
    ElementId id = data->lookup(s);
    if (id != identity() && std::find(data->generators.begin(), data->generators.end(),
                                      id) == data->generators.end()) {
      data->generators.push_back(id);
    }
  }
  if (n <= kTableLimit) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        data->table[a * n + b] = data->lookup(data->elements[a] * data->elements[b]);
      }
    }
  }
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->elements.size(); }

const Permutation& FiniteGroup::element(ElementId i) const { return data_->elements.at(i); }

std::span<const Permutation> FiniteGroup::elements() const noexcept {
  return data_->elements;
}

std::span<const ElementId> FiniteGroup::generators() const noexcept {
  return data_->generators;
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!data_->table.empty()) return data_->table[a * order() + b];
  return data_->lookup(data_->elements[a] * data_->elements[b]);
}

ElementId FiniteGroup::inv(ElementId a) const { return data_->inverse[a]; }

ElementId FiniteGroup::conj(ElementId g, ElementId x) const {
  return mul(mul(g, x), inv(g));
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

ElementId FiniteGroup::pow(ElementId a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElementId result = identity();
  ElementId base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(ElementId a) const {
  std::size_t k = 1;
  for (ElementId x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw InputError("permutation " + p.to_string() + " is not in the group");
  return *id;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent())) {
    throw CrossParent("subgroups belong to different parent groups");
  }
}

// Extends the closed set `members` (with `mask`) by the generator `x`.
void extend_closure(const FiniteGroup& g, std::vector<ElementId>& members,
                    std::vector<bool>& mask, std::vector<ElementId>& gens, ElementId x) {
  gens.push_back(x);
  // Every product of a member with a generator must stay inside; a
  // breadth-first sweep over the growing list reaches the new closure.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId s : gens) {
      ElementId y = g.mul(members[i], s);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<ElementId> members,
                   std::vector<ElementId> gens)
    : parent_(std::move(parent)), members_(std::move(members)), gens_(std::move(gens)) {
  std::sort(members_.begin(), members_.end());
  mask_.assign(parent_.order(), false);
  for (ElementId x : members_) mask_[x] = true;
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, std::span<const ElementId> gens) {
  std::vector<ElementId> members{FiniteGroup::identity()};
  std::vector<bool> mask(g.order(), false);
  mask[FiniteGroup::identity()] = true;
  std::vector<ElementId> used;
  for (ElementId x : gens) {
    if (x >= g.order()) throw InputError("element index out of range");
    if (!mask[x]) extend_closure(g, members, mask, used, x);
  }
  return Subgroup(g, std::move(members), std::move(used));
}

Subgroup Subgroup::from_members(const FiniteGroup& g, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup closed = generated_by(g, members);
  if (closed.members_ != members) {
    throw InputError("element set is not a subgroup");
  }
  return closed;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<ElementId> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementId>(i);
  auto gens = std::vector<ElementId>(g.generators().begin(), g.generators().end());
  return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return Subgroup(g, {FiniteGroup::identity()}, {});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  require_same_parent(*this, other);
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElementId x) { return other.contains(x); });
}

bool Subgroup::is_normal() const {
  for (ElementId s : parent_.generators()) {
    for (ElementId x : gens_) {
      if (!contains(parent_.conj(s, x))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (parent_.mul(gens_[i], gens_[j]) != parent_.mul(gens_[j], gens_[i])) return false;
    }
  }
  return true;
}

Subgroup Subgroup::conjugate(ElementId g) const {
  std::vector<ElementId> members;
  members.reserve(members_.size());
  for (ElementId x : members_) members.push_back(parent_.conj(g, x));
  std::vector<ElementId> gens;
  for (ElementId x : gens_) gens.push_back(parent_.conj(g, x));
  return Subgroup(parent_, std::move(members), std::move(gens));
}

FiniteGroup Subgroup::as_group() const {
  std::vector<Permutation> perms;
  for (ElementId x : gens_) perms.push_back(parent_.element(x));
  return FiniteGroup::generate(parent_.degree(), perms, parent_.order());
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return a.members_ == b.members_;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<ElementId> common;
  for (ElementId x : a.members()) {
    if (b.contains(x)) common.push_back(x);
  }
  return Subgroup::generated_by(a.parent(), common);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subgroup_of(a)) return a;
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(a.parent(), gens);
}

Subgroup join(const Subgroup& a, ElementId g) {
  if (a.contains(g)) return a;
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  gens.push_back(g);
  return Subgroup::generated_by(a.parent(), gens);
}

// ---------------------------------------------------------------------------

CosetAction::CosetAction(const Subgroup& h) : subgroup_(h) {
  const FiniteGroup& g = h.parent();
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  coset_of_.assign(g.order(), kUnassigned);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of_[x] != kUnassigned) continue;
    auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(x);
    for (ElementId y : h.members()) coset_of_[g.mul(x, y)] = c;
  }
}

std::uint32_t CosetAction::act(ElementId g, std::uint32_t coset) const {
  return coset_of_[subgroup_.parent().mul(g, reps_[coset])];
}

std::vector<std::uint32_t> CosetAction::fixed_points(ElementId g) const {
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t c = 0; c < reps_.size(); ++c) {
    if (act(g, c) == c) fixed.push_back(c);
  }
  return fixed;
}

std::size_t CosetAction::fixed_point_count(ElementId g) const {
  std::size_t count = 0;
  for (std::uint32_t c = 0; c < reps_.size(); ++c) {
    if (act(g, c) == c) ++count;
  }
  return count;
}

CosetAction coset_action(const Subgroup& h) { return CosetAction(h); }

// ---------------------------------------------------------------------------

Subgroup centralizer(const Subgroup& within, ElementId h) {
  const FiniteGroup& g = within.parent();
  std::vector<ElementId> members;
  for (ElementId x : within.members()) {
    if (g.mul(x, h) == g.mul(h, x)) members.push_back(x);
  }
  return Subgroup::generated_by(g, members);
}

Subgroup centralizer(const FiniteGroup& g, ElementId h) {
  return centralizer(Subgroup::whole(g), h);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](ElementId s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) members.push_back(x);
  }
  return Subgroup::generated_by(g, members);
}

Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](ElementId y) { return h.contains(g.conj(x, y)); });
    if (normalizes) members.push_back(x);
  }
  return Subgroup::generated_by(g, members);
}

std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<ElementId>> classes;
  std::vector<bool> seen(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<ElementId> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId s : g.generators()) {
        ElementId y = g.conj(s, cls[i]);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// Normal closure of `elements` inside `ambient`.
Subgroup normal_closure_in(const Subgroup& ambient, std::span<const ElementId> elements) {
  const FiniteGroup& g = ambient.parent();
  Subgroup n = Subgroup::generated_by(g, elements);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementId> gens(n.generators().begin(), n.generators().end());
    for (ElementId s : ambient.generators()) {
      for (ElementId x : gens) {
        ElementId y = g.conj(s, x);
        if (!n.contains(y)) {
          n = join(n, y);
          changed = true;
        }
      }
    }
  }
  return n;
}

}  // namespace

Subgroup normal_closure(const FiniteGroup& g, std::span<const ElementId> elements) {
  return normal_closure_in(Subgroup::whole(g), elements);
}

Subgroup commutator_subgroup(const Subgroup& normal, const Subgroup& ambient) {
  require_same_parent(normal, ambient);
  const FiniteGroup& g = ambient.parent();
  // For N = <Y> normalized by S = <X>, [N, S] is the normal closure in S of
  // the commutators [y, x].
  std::vector<ElementId> comms;
  for (ElementId y : normal.generators()) {
    for (ElementId x : ambient.generators()) comms.push_back(g.commutator(y, x));
  }
  return normal_closure_in(ambient, comms);
}

Subgroup derived_subgroup(const Subgroup& s) { return commutator_subgroup(s, s); }

std::vector<Subgroup> lower_central_series(const Subgroup& s) {
  std::vector<Subgroup> series{s};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), s);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Nilpotency is_nilpotent(const Subgroup& s) {
  auto series = lower_central_series(s);
  if (!series.back().is_trivial()) return {false, std::nullopt};
  return {true, series.size() - 1};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.normal_lattice_cap) {
    throw CapExceeded("normal-subgroup lattice needs |G| <= " +
                      std::to_string(limits.normal_lattice_cap));
  }
  constexpr std::size_t kMaxNormalSubgroups = 20000;

  std::vector<Subgroup> closures;
  std::set<std::vector<ElementId>> keys;
  for (const auto& cls : conjugacy_classes(g)) {
    ElementId rep = cls.front();
    Subgroup n = normal_closure(g, std::span<const ElementId>(&rep, 1));
    auto key = std::vector<ElementId>(n.members().begin(), n.members().end());
    if (keys.insert(key).second) closures.push_back(std::move(n));
  }

  std::vector<Subgroup> lattice = closures;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& c : closures) {
      Subgroup j = join(lattice[i], c);
      auto key = std::vector<ElementId>(j.members().begin(), j.members().end());
      if (keys.insert(key).second) {
        lattice.push_back(std::move(j));
        if (lattice.size() > kMaxNormalSubgroups) {
          throw CapExceeded("too many normal subgroups");
        }
      }
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return lattice;
}

Subgroup fitting_subgroup(const FiniteGroup& g, const Limits& limits) {
  Subgroup fit = Subgroup::trivial(g);
  for (const auto& n : normal_subgroups(g, limits)) {
    if (is_nilpotent(n).nilpotent) fit = join(fit, n);
  }
  return fit;
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  Subgroup derived = derived_subgroup(Subgroup::whole(g));
  std::size_t m = g.order() / derived.order();

  // p-primary parts: #{cosets x : x^(p^k) = 1} = p^(sum_i min(k, e_i)).
  std::map<std::size_t, std::vector<std::size_t>> exponents;  // p -> e_i desc
  std::size_t rest = m;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<std::size_t> s{0};  // s[k] = log_p of the count
    std::size_t pk = 1;
    while (s.back() < e) {
      pk *= p;
      std::size_t hits = 0;
      for (ElementId x = 0; x < g.order(); ++x) {
        if (derived.contains(g.pow(x, static_cast<long long>(pk)))) ++hits;
      }
      std::size_t cosets = hits / derived.order();
      std::size_t log = 0;
      while (cosets > 1) {
        cosets /= p;
        ++log;
      }
      s.push_back(log);
    }
    // s[k] - s[k-1] = #{i : e_i >= k}
    std::vector<std::size_t> parts;
    for (std::size_t k = s.size() - 1; k >= 1; --k) {
      std::size_t at_least_k = s[k] - s[k - 1];
      std::size_t above = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (std::size_t i = above; i < at_least_k; ++i) parts.push_back(k);
    }
    exponents[p] = parts;
  }

  std::size_t count = 0;
  for (const auto& [p, parts] : exponents) count = std::max(count, parts.size());
  std::vector<std::size_t> factors(count, 1);
  for (const auto& [p, parts] : exponents) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      for (std::size_t t = 0; t < parts[j]; ++t) factors[j] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap) {
    throw CapExceeded("subgroup lattice needs |G| <= " + std::to_string(limits.lattice_cap));
  }
  std::set<std::vector<ElementId>> keys;
  std::vector<Subgroup> cyclic;
  for (ElementId x = 0; x < g.order(); ++x) {
    Subgroup c = Subgroup::generated_by(g, std::span<const ElementId>(&x, 1));
    auto key = std::vector<ElementId>(c.members().begin(), c.members().end());
    if (keys.insert(key).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> lattice = cyclic;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.is_subgroup_of(lattice[i])) continue;
      Subgroup j = join(lattice[i], c);
      auto key = std::vector<ElementId>(j.members().begin(), j.members().end());
      if (keys.insert(key).second) lattice.push_back(std::move(j));
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return lattice;
}

}  // namespace malnorm
