#include "malnorm/malnormal_free.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

bool is_trivial_subgroup(const StallingsGraph& h) {
  return h.edge_count() == 0 || (h.vertex_count() == 1 && h.is_cover());
}

// Nontrivial reduced loop at `start` inside its pullback component.
FreeWord component_loop(const StallingsGraph& h, std::pair<Vertex, Vertex> start) {
  const std::uint32_t letters = 2 * h.alphabet_rank();
  std::map<std::pair<Vertex, Vertex>, FreeWord> tree{{start, FreeWord()}};
  std::map<std::pair<Vertex, Vertex>, std::pair<std::pair<Vertex, Vertex>, Letter>> parent;
  std::vector<std::pair<Vertex, Vertex>> order{start};
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto u = order[i];
    for (Letter l = 0; l < letters; ++l) {
      Vertex p = h.follow(u.first, l);
      Vertex q = h.follow(u.second, l);
      if (p == kNoVertex || q == kNoVertex) continue;
      std::pair<Vertex, Vertex> v{p, q};
      if (tree.count(v)) {
        bool tree_edge = (parent.count(v) && parent[v] == std::make_pair(u, l)) ||
                         (parent.count(u) && parent[u] == std::make_pair(v, inverse_letter(l)));
        if (!tree_edge) return tree[u] * FreeWord{l} * tree[v].inverse();
        continue;
      }
      tree[v] = tree[u] * FreeWord{l};
      parent[v] = {u, l};
      order.push_back(v);
    }
  }
  throw DefinitionsDisagree("pullback component with positive Betti number has no cycle");
}

}  // namespace

std::vector<PullbackComponent> self_pullback(const StallingsGraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> parent(n * n);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::pair<std::size_t, std::size_t>> product_edges;
  for (const Edge& a : h.edges()) {
    for (const Edge& b : h.edges()) {
      if (a.label != b.label) continue;
      std::size_t s = a.source * n + b.source;
      std::size_t t = a.target * n + b.target;
      product_edges.push_back({s, t});
      std::size_t rs = find(s);
      std::size_t rt = find(t);
      if (rs != rt) parent[std::max(rs, rt)] = std::min(rs, rt);
    }
  }

  std::map<std::size_t, std::size_t> slot;
  std::vector<PullbackComponent> components;
  std::vector<std::size_t> edge_count;
  for (std::size_t v = 0; v < n * n; ++v) {
    auto [it, fresh] = slot.try_emplace(find(v), components.size());
    if (fresh) {
      components.emplace_back();
      edge_count.push_back(0);
    }
    auto& c = components[it->second];
    auto p = static_cast<Vertex>(v / n);
    auto q = static_cast<Vertex>(v % n);
    c.vertices.push_back({p, q});
    if (p == StallingsGraph::base() && q == StallingsGraph::base()) c.is_diagonal = true;
  }
  for (auto [s, t] : product_edges) ++edge_count[slot[find(s)]];

  for (std::size_t i = 0; i < components.size(); ++i) {
    auto& c = components[i];
    c.betti = edge_count[i] + 1 - c.vertices.size();
    if (c.is_diagonal) continue;
    std::optional<FreeWord> best;
    for (auto [p, q] : c.vertices) {
      FreeWord g = h.tree_word(p) * h.tree_word(q).inverse();
      if (!best || g < *best) best = std::move(g);
    }
    c.witness = std::move(*best);
  }
  return components;
}

FreeVerdict is_malnormal_free(const StallingsGraph& h) {
  if (is_trivial_subgroup(h)) return {true, std::nullopt, VerdictMethod::pullback, true};
  const PullbackComponent* failing = nullptr;
  auto components = self_pullback(h);
  for (const auto& c : components) {
    if (c.is_diagonal || c.betti == 0) continue;
    if (!failing || c.witness < failing->witness) failing = &c;
  }
  if (!failing) return {true, std::nullopt, VerdictMethod::pullback, false};

  const FreeWord& g = failing->witness;
  std::pair<Vertex, Vertex> at{};
  for (auto [p, q] : failing->vertices) {
    if (h.tree_word(p) * h.tree_word(q).inverse() == g) {
      at = {p, q};
      break;
    }
  }
  // A loop l at (p, q) reads closed paths at p and q, so t_p l t_p^-1 lies in
  // H and is conjugated into H by g = t_p t_q^-1.
  FreeWord loop = component_loop(h, at);
  FreeWord x = conjugate(h.tree_word(at.first), loop);
  FreeWitness w{g, std::min(x, x.inverse())};
  if (!verify_witness(h, w)) {
    throw DefinitionsDisagree("pullback witness failed membership re-check");
  }
  return {false, std::move(w), VerdictMethod::pullback, false};
}

bool verify_witness(const StallingsGraph& h, const FreeWitness& w) {
  return !w.element.empty() && member(h, w.element) && !member(h, w.conjugator) &&
         member(h, w.conjugator.inverse() * w.element * w.conjugator);
}

FreeHull malnormal_closure_free(const StallingsGraph& h, std::size_t budget) {
  FreeHull result{h, {}};
  while (true) {
    FreeVerdict v = is_malnormal_free(result.hull);
    if (v.malnormal) break;
    if (result.certificate.size() == budget) {
      throw IterationBudgetExceeded("malnormal closure did not stabilise within " +
                                    std::to_string(budget) + " joins");
    }
    std::vector<FreeWord> gens = result.hull.basis();
    gens.push_back(v.witness->conjugator);
    result.certificate.push_back(v.witness->conjugator);
    result.hull = stallings(gens, h.alphabet_rank());
  }
  for (const FreeWord& w : h.basis()) {
    if (!member(result.hull, w)) throw IdentityFailed("malnormal closure lost a generator");
  }
  return result;
}

HallCompletion hall_completion(const StallingsGraph& h) {
  const std::uint32_t rank = h.alphabet_rank();
  const std::size_t n = h.vertex_count();

  std::vector<Edge> added;
  for (std::uint32_t label = 0; label < rank; ++label) {
    std::vector<bool> has_out(n, false);
    std::vector<bool> has_in(n, false);
    for (const Edge& e : h.edges()) {
      if (e.label != label) continue;
      has_out[e.source] = true;
      has_in[e.target] = true;
    }
    // Extend the partial injection by sending each free source to the
    // lowest free target.
    Vertex target = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (has_out[v]) continue;
      while (has_in[target]) ++target;
      added.push_back({v, label, target});
      has_in[target] = true;
    }
  }

  std::vector<Edge> all(h.edges().begin(), h.edges().end());
  all.insert(all.end(), added.begin(), added.end());
  HallCompletion result{StallingsGraph::fold(rank, n, all, 0), {}, {}, {}};

  // H's spanning tree spans the cover, so H's basis extends to one of F0.
  result.f0_basis = h.basis();
  for (const Edge& e : added) {
    FreeWord w = h.tree_word(e.source) * FreeWord::generator(e.label) *
                 h.tree_word(e.target).inverse();
    result.complement_basis.push_back(w);
    result.f0_basis.push_back(w);
  }

  // Rewrite H's basis by tracing through the cover with H's numbering.
  std::map<std::pair<Vertex, Letter>, std::pair<Vertex, std::int64_t>> step;
  std::int64_t next_index = 0;
  auto tree_edge = [&](const Edge& e) {
    return h.tree_word(e.target) == h.tree_word(e.source) * FreeWord::generator(e.label) ||
           h.tree_word(e.source) == h.tree_word(e.target) * FreeWord{make_letter(e.label, true)};
  };
  auto add_step = [&](const Edge& e, std::int64_t index) {
    step[{e.source, make_letter(e.label)}] = {e.target, index};
    step[{e.target, make_letter(e.label, true)}] = {e.source, index};
  };
  for (const Edge& e : h.edges()) add_step(e, tree_edge(e) ? -1 : next_index++);
  for (const Edge& e : added) add_step(e, next_index++);

  const auto f0_rank = static_cast<std::uint32_t>(result.f0_basis.size());
  for (const FreeWord& w : h.basis()) {
    std::vector<Letter> out;
    Vertex v = StallingsGraph::base();
    for (Letter l : w.letters()) {
      auto [to, index] = step.at({v, l});
      if (index >= 0) out.push_back(make_letter(static_cast<std::uint32_t>(index), is_inverted(l)));
      v = to;
    }
    result.h_in_f0.emplace_back(out);
  }

  // Certificate. Generation: the f0 basis spans the cover's subgroup. Rank:
  // rank(H) + |complement| = rank(F0) = index * (rank - 1) + 1. A surjection
  // between free groups of equal finite rank is an isomorphism, so F0 = H * K
  // without running Whitehead's algorithm.
  if (!result.covering.is_cover()) throw IdentityFailed("completion is not a cover");
  if (!(stallings(result.f0_basis, rank) == result.covering)) {
    throw IdentityFailed("f0 basis does not generate the cover's subgroup");
  }
  std::size_t expected_rank = rank == 0 ? 0 : n * (rank - 1) + 1;
  if (result.covering.subgroup_rank() != f0_rank || f0_rank != expected_rank ||
      h.basis().size() + result.complement_basis.size() != f0_rank) {
    throw IdentityFailed("rank additivity fails for the Hall completion");
  }
  std::vector<FreeWord> spanning = result.h_in_f0;
  for (std::uint32_t i = static_cast<std::uint32_t>(h.basis().size()); i < f0_rank; ++i) {
    spanning.push_back(FreeWord::generator(i));
  }
  StallingsGraph spanned = stallings(spanning, f0_rank);
  if (spanned.vertex_count() != 1 || !spanned.is_cover()) {
    throw IdentityFailed("H and the complement do not generate F0");
  }
  if (!is_malnormal_free(stallings(result.h_in_f0, f0_rank)).malnormal) {
    throw IdentityFailed("H is not malnormal in its Hall completion");
  }
  return result;
}

FreeScan bounded_violation_search(const StallingsGraph& h, std::size_t radius) {
  FreeScan scan;
  scan.radius = radius;
  for (const FreeWord& g : shortlex_ball(h.alphabet_rank(), radius)) {
    if (member(h, g)) continue;
    StallingsGraph common = intersect(h, conjugate(h, g));
    if (common.edge_count() > 0) {
      scan.violation = FreeWitness{g, common.basis().front()};
      break;
    }
  }
  return scan;
}

}  // namespace malnorm
