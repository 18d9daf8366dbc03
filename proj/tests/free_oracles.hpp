#pragma once

// Free-group reference computations on raw letter vectors, independent of
// Stallings graphs.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using RawWord = std::vector<std::uint32_t>;  // letter 2i = generator i, 2i+1 = inverse

inline RawWord raw_reduce(const RawWord& w) {
  RawWord out;
  for (auto l : w) {
    if (!out.empty() && out.back() == (l ^ 1u)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline RawWord raw_inverse(const RawWord& w) {
  RawWord out(w.rbegin(), w.rend());
  for (auto& l : out) l ^= 1u;
  return out;
}

inline RawWord raw_mul(const RawWord& a, const RawWord& b) {
  RawWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return raw_reduce(w);
}

/// Every element of <gens> reachable through partial products whose reduced
/// length never exceeds `bound`.
inline std::set<RawWord> bounded_subgroup_ball(const std::vector<RawWord>& gens,
                                               std::size_t bound) {
  std::vector<RawWord> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(raw_inverse(g));
  }
  std::set<RawWord> seen{RawWord{}};
  std::vector<RawWord> frontier{RawWord{}};
  while (!frontier.empty()) {
    std::vector<RawWord> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        RawWord y = raw_mul(x, s);
        if (y.size() <= bound && seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline RawWord random_raw_word(std::mt19937_64& rng, std::uint32_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(0, 2 * rank - 1);
  RawWord w;
  std::size_t n = len(rng);
  while (w.size() < n) {
    auto l = letter(rng);
    if (!w.empty() && w.back() == (l ^ 1u)) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace oracle
