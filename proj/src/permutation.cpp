#include "malnorm/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "malnorm/errors.hpp"

namespace malnorm {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidPermutation("image sequence is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::span<const std::vector<Point>> cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree) {
        throw InvalidPermutation("point " + std::to_string(p + 1) +
                                 " exceeds degree " + std::to_string(degree));
      }
      if (used[p]) {
        throw InvalidPermutation("point " + std::to_string(p + 1) +
                                 " appears twice");
      }
      used[p] = true;
      result.images_[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ',')) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InvalidPermutation("expected '(' in \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) {
        throw InvalidPermutation("unterminated cycle in \"" + std::string(text) + "\"");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + i) {
        throw InvalidPermutation("bad point in \"" + std::string(text) + "\"");
      }
      i = static_cast<std::size_t>(ptr - text.data());
      if (value == 0 || value > degree) {
        throw InvalidPermutation("point " + std::to_string(value) +
                                 " outside 1.." + std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidPermutation("degree mismatch in product");
  }
  Permutation result;
  result.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    result.images_[i] = a.images_[b.images_[i]];
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace malnorm
