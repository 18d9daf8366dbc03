#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malnorm/free_word.hpp"

namespace malnorm {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct Edge {
  Vertex source;
  std::uint32_t label;  // generator index
  Vertex target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Folded, based, labeled graph of a finitely generated subgroup H of the free
/// group of rank `alphabet_rank()`. Every non-base vertex has degree >= 2.
///
/// Vertices are always numbered canonically: breadth-first from the base
/// (vertex 0), visiting neighbours in letter order a, a^-1, b, b^-1, ...
/// Two graphs are equal iff they describe the same subgroup.
class StallingsGraph {
 public:
  /// Folds and trims an arbitrary labeled graph. Edges may repeat.
  static StallingsGraph fold(std::uint32_t alphabet_rank, std::size_t vertex_count,
                             std::span<const Edge> edges, Vertex base);

  std::uint32_t alphabet_rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  static constexpr Vertex base() noexcept { return 0; }

  /// Rank of H: |E| - |V| + 1.
  std::size_t subgroup_rank() const noexcept { return edges_.size() + 1 - vertex_count_; }

  /// Target of the edge leaving v that reads letter l, if any.
  Vertex follow(Vertex v, Letter l) const noexcept;
  std::size_t degree(Vertex v) const noexcept;

  /// Every vertex has all 2 * alphabet_rank edges: H has finite index.
  bool is_cover() const noexcept;

  /// Label of the spanning-tree path from the base to v.
  const FreeWord& tree_word(Vertex v) const { return tree_words_[v]; }

  /// Free basis of H: one word per edge outside the BFS spanning tree, in
  /// edge order.
  const std::vector<FreeWord>& basis() const noexcept { return basis_; }

  /// Rewrites w, which must lie in H, in basis coordinates: generator i of
  /// the result is basis()[i]. Throws InvalidParameters if w is not in H.
  FreeWord rewrite(const FreeWord& w) const;

  /// Graphviz rendering; base drawn as a double circle.
  std::string to_dot() const;

  friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
    return a.rank_ == b.rank_ && a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  StallingsGraph(std::uint32_t rank, std::size_t vertex_count, std::vector<Edge> edges);

  std::uint32_t rank_ = 0;
  std::size_t vertex_count_ = 1;
  std::vector<Edge> edges_;
  // out_[v * 2 * rank + letter]
  std::vector<Vertex> adjacency_;
  std::vector<FreeWord> tree_words_;
  std::vector<bool> tree_edge_;
  std::vector<FreeWord> basis_;
  // basis index of each edge, or -1 for tree edges
  std::vector<std::int64_t> basis_index_;
};

/// Subgroup graph of <gens> in the free group of rank `alphabet_rank`. Throws
/// InvalidParameters if a word uses a generator outside the alphabet.
StallingsGraph stallings(std::span<const FreeWord> gens, std::uint32_t alphabet_rank);

/// True iff w reads a closed path at the base.
bool member(const StallingsGraph& g, const FreeWord& w);

/// Graph of H n K: core of the base component of the product graph.
StallingsGraph intersect(const StallingsGraph& h, const StallingsGraph& k);

/// Graph of gHg^-1.
StallingsGraph conjugate(const StallingsGraph& h, const FreeWord& g);

/// K <= H re-expressed inside H: the graph of K over the alphabet of H's
/// basis. Throws InvalidParameters unless K <= H.
StallingsGraph within(const StallingsGraph& h, const StallingsGraph& k);

}  // namespace malnorm
