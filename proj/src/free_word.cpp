#include "malnorm/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == inverse_letter(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

constexpr long long kMaxExponent = 1'000'000;

}  // namespace

FreeWord::FreeWord(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::size_t first = text.find_first_not_of(" \t\n\r");
  std::size_t last = text.find_last_not_of(" \t\n\r");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") {
    return FreeWord();
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in word");
    }
    ++i;
    long long exponent = 1;
    skip_space();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      const char* begin = text.data() + i;
      const char* end = text.data() + text.size();
      if (begin != end && *begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, exponent);
      if (ec != std::errc() || ptr == begin) throw ParseError("malformed exponent in word");
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw ParseError("exponent out of range");
      }
      i = static_cast<std::size_t>(ptr - text.data());
    }
    Letter l = make_letter(static_cast<std::uint32_t>(c - 'a'), exponent < 0);
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) push_reduced(letters, l);
  }
  FreeWord w;
  w.letters_ = std::move(letters);
  return w;
}

std::uint32_t FreeWord::generators_used() const noexcept {
  std::uint32_t n = 0;
  for (Letter l : letters_) n = std::max(n, generator_of(l) + 1);
  return n;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(inverse_letter(*it));
  }
  return w;
}

FreeWord FreeWord::pow(long long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord result;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
  return result;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + generator_of(letters_[i]));
    long long run = static_cast<long long>(j - i);
    if (is_inverted(letters_[i])) run = -run;
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w;
  w.letters_.reserve(a.letters_.size() + b.letters_.size());
  w.letters_ = a.letters_;
  for (Letter l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::vector<FreeWord> parse_word_list(std::string_view text) {
  std::vector<FreeWord> words;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    bool blank = std::all_of(piece.begin(), piece.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) throw ParseError("empty entry in word list");
    words.push_back(FreeWord::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return words;
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == inverse_letter(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {FreeWord(letters.subspan(lo, hi - lo)), FreeWord(letters.subspan(0, lo))};
}

FreeWord conjugate(const FreeWord& g, const FreeWord& w) { return g * w * g.inverse(); }

std::vector<FreeWord> shortlex_ball(std::uint32_t rank, std::size_t radius) {
  std::vector<FreeWord> ball{FreeWord()};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= radius && rank > 0; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter l = 0; l < 2 * rank; ++l) {
        if (!w.empty() && w.back() == inverse_letter(l)) continue;
        auto extended = w;
        extended.push_back(l);
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
    for (const auto& w : layer) ball.emplace_back(w);
  }
  return ball;
}

}  // namespace malnorm
