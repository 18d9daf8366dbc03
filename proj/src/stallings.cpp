#include "malnorm/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

struct UnionFind {
  std::vector<Vertex> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  Vertex find(Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

void check_alphabet(const FreeWord& w, std::uint32_t rank) {
  if (w.generators_used() > rank) {
    throw InvalidParameters("word " + w.to_string() + " uses a generator outside the rank-" +
                            std::to_string(rank) + " alphabet");
  }
}

}  // namespace

StallingsGraph StallingsGraph::fold(std::uint32_t alphabet_rank, std::size_t vertex_count,
                                    std::span<const Edge> edges, Vertex base) {
  UnionFind uf(vertex_count);
  // Identify the endpoints of equally labeled edges at a common vertex until
  // nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Vertex, std::uint32_t>, Vertex> out;
    std::map<std::pair<Vertex, std::uint32_t>, Vertex> in;
    for (const Edge& e : edges) {
      Vertex s = uf.find(e.source);
      Vertex t = uf.find(e.target);
      auto [it, fresh] = out.try_emplace({s, e.label}, t);
      if (!fresh && uf.unite(it->second, t)) changed = true;
      s = uf.find(s);
      t = uf.find(t);
      auto [jt, fresh_in] = in.try_emplace({t, e.label}, s);
      if (!fresh_in && uf.unite(jt->second, s)) changed = true;
    }
  }

  std::set<Edge> folded;
  for (const Edge& e : edges) folded.insert({uf.find(e.source), e.label, uf.find(e.target)});
  Vertex root = uf.find(base);

  // Trim hanging trees away from the base.
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : folded) {
    ++degree[e.source];
    ++degree[e.target];
  }
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    for (auto it = folded.begin(); it != folded.end();) {
      bool leaf_s = it->source != root && degree[it->source] <= 1;
      bool leaf_t = it->target != root && degree[it->target] <= 1;
      if (leaf_s || leaf_t) {
        --degree[it->source];
        --degree[it->target];
        it = folded.erase(it);
        trimmed = true;
      } else {
        ++it;
      }
    }
  }

  // Canonical breadth-first numbering.
  const std::uint32_t letters = 2 * alphabet_rank;
  std::unordered_map<std::uint64_t, Vertex> adjacency;
  auto key = [letters](Vertex v, Letter l) { return std::uint64_t(v) * letters + l; };
  for (const Edge& e : folded) {
    adjacency[key(e.source, make_letter(e.label))] = e.target;
    adjacency[key(e.target, make_letter(e.label, true))] = e.source;
  }
  std::unordered_map<Vertex, Vertex> number{{root, 0}};
  std::queue<Vertex> queue;
  queue.push(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Letter l = 0; l < letters; ++l) {
      auto it = adjacency.find(key(v, l));
      if (it == adjacency.end()) continue;
      if (number.try_emplace(it->second, static_cast<Vertex>(number.size())).second) {
        queue.push(it->second);
      }
    }
  }

  std::vector<Edge> relabeled;
  relabeled.reserve(folded.size());
  for (const Edge& e : folded) {
    auto s = number.find(e.source);
    auto t = number.find(e.target);
    if (s == number.end() || t == number.end()) continue;  // disconnected input
    relabeled.push_back({s->second, e.label, t->second});
  }
  std::sort(relabeled.begin(), relabeled.end());
  return StallingsGraph(alphabet_rank, number.size(), std::move(relabeled));
}

StallingsGraph::StallingsGraph(std::uint32_t rank, std::size_t vertex_count,
                               std::vector<Edge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  const std::size_t letters = 2 * rank_;
  adjacency_.assign(vertex_count_ * letters, kNoVertex);
  std::vector<std::size_t> edge_at(vertex_count_ * letters, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.source * letters + make_letter(e.label)] = e.target;
    adjacency_[e.target * letters + make_letter(e.label, true)] = e.source;
    edge_at[e.source * letters + make_letter(e.label)] = i;
    edge_at[e.target * letters + make_letter(e.label, true)] = i;
  }

  tree_words_.assign(vertex_count_, FreeWord());
  tree_edge_.assign(edges_.size(), false);
  std::vector<bool> seen(vertex_count_, false);
  seen[0] = true;
  std::queue<Vertex> queue;
  queue.push(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Letter l = 0; l < letters; ++l) {
      Vertex w = adjacency_[v * letters + l];
      if (w == kNoVertex || seen[w]) continue;
      seen[w] = true;
      tree_edge_[edge_at[v * letters + l]] = true;
      tree_words_[w] = tree_words_[v] * FreeWord{l};
      queue.push(w);
    }
  }

  basis_index_.assign(edges_.size(), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (tree_edge_[i]) continue;
    const Edge& e = edges_[i];
    basis_index_[i] = static_cast<std::int64_t>(basis_.size());
    basis_.push_back(tree_words_[e.source] * FreeWord::generator(e.label) *
                     tree_words_[e.target].inverse());
  }
}

Vertex StallingsGraph::follow(Vertex v, Letter l) const noexcept {
  if (generator_of(l) >= rank_) return kNoVertex;
  return adjacency_[v * 2 * rank_ + l];
}

std::size_t StallingsGraph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (Letter l = 0; l < 2 * rank_; ++l) {
    if (adjacency_[v * 2 * rank_ + l] != kNoVertex) ++d;
  }
  return d;
}

bool StallingsGraph::is_cover() const noexcept {
  return std::find(adjacency_.begin(), adjacency_.end(), kNoVertex) == adjacency_.end();
}

FreeWord StallingsGraph::rewrite(const FreeWord& w) const {
  std::vector<Letter> out;
  Vertex v = base();
  for (Letter l : w.letters()) {
    Vertex next = follow(v, l);
    if (next == kNoVertex) throw InvalidParameters(w.to_string() + " is not in the subgroup");
    // Locate the traversed edge.
    Edge e = is_inverted(l) ? Edge{next, generator_of(l), v} : Edge{v, generator_of(l), next};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    std::int64_t index = basis_index_[static_cast<std::size_t>(it - edges_.begin())];
    if (index >= 0) out.push_back(make_letter(static_cast<std::uint32_t>(index), is_inverted(l)));
    v = next;
  }
  if (v != base()) throw InvalidParameters(w.to_string() + " is not in the subgroup");
  return FreeWord(out);
}

std::string StallingsGraph::to_dot() const {
  std::string out = "digraph stallings {\n";
  for (Vertex v = 0; v < vertex_count_; ++v) {
    out += "  " + std::to_string(v) + (v == base() ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  }
  for (const Edge& e : edges_) {
    out += "  " + std::to_string(e.source) + " -> " + std::to_string(e.target) + " [label=\"" +
           static_cast<char>('a' + e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

StallingsGraph stallings(std::span<const FreeWord> gens, std::uint32_t alphabet_rank) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (const FreeWord& w : gens) {
    check_alphabet(w, alphabet_rank);
    Vertex at = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      Vertex to = i + 1 == w.length() ? 0 : next++;
      Letter l = w[i];
      if (is_inverted(l)) {
        edges.push_back({to, generator_of(l), at});
      } else {
        edges.push_back({at, generator_of(l), to});
      }
      at = to;
    }
  }
  return StallingsGraph::fold(alphabet_rank, next, edges, 0);
}

bool member(const StallingsGraph& g, const FreeWord& w) {
  Vertex v = StallingsGraph::base();
  for (Letter l : w.letters()) {
    v = g.follow(v, l);
    if (v == kNoVertex) return false;
  }
  return v == StallingsGraph::base();
}

StallingsGraph intersect(const StallingsGraph& h, const StallingsGraph& k) {
  if (h.alphabet_rank() != k.alphabet_rank()) {
    throw InvalidParameters("intersecting subgroups of free groups of different rank");
  }
  const std::uint32_t rank = h.alphabet_rank();
  std::map<std::pair<Vertex, Vertex>, Vertex> index{{{0, 0}, 0}};
  std::vector<std::pair<Vertex, Vertex>> order{{0, 0}};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [p, q] = order[i];
    for (Letter l = 0; l < 2 * rank; ++l) {
      Vertex p2 = h.follow(p, l);
      Vertex q2 = k.follow(q, l);
      if (p2 == kNoVertex || q2 == kNoVertex) continue;
      auto [it, fresh] = index.try_emplace({p2, q2}, static_cast<Vertex>(order.size()));
      if (fresh) order.push_back({p2, q2});
      if (!is_inverted(l)) edges.push_back({static_cast<Vertex>(i), generator_of(l), it->second});
    }
  }
  return StallingsGraph::fold(rank, order.size(), edges, 0);
}

StallingsGraph conjugate(const StallingsGraph& h, const FreeWord& g) {
  check_alphabet(g, h.alphabet_rank());
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  // New base at vertex n, joined to the old base by a path reading g.
  const auto n = static_cast<Vertex>(h.vertex_count());
  Vertex next = n + 1;
  Vertex at = n;
  for (std::size_t i = 0; i < g.length(); ++i) {
    Vertex to = i + 1 == g.length() ? StallingsGraph::base() : next++;
    Letter l = g[i];
    if (is_inverted(l)) {
      edges.push_back({to, generator_of(l), at});
    } else {
      edges.push_back({at, generator_of(l), to});
    }
    at = to;
  }
  Vertex base = g.empty() ? StallingsGraph::base() : n;
  return StallingsGraph::fold(h.alphabet_rank(), next, edges, base);
}

StallingsGraph within(const StallingsGraph& h, const StallingsGraph& k) {
  if (h.alphabet_rank() != k.alphabet_rank()) {
    throw InvalidParameters("subgroups of free groups of different rank");
  }
  std::vector<FreeWord> rewritten;
  for (const FreeWord& w : k.basis()) rewritten.push_back(h.rewrite(w));
  return stallings(rewritten, static_cast<std::uint32_t>(h.basis().size()));
}

}  // namespace malnorm
