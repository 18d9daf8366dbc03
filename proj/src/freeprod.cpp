#include "malnorm/freeprod.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

void push_syllable(const FactorSpec& spec, std::vector<Syllable>& out, Syllable s) {
  if (!out.empty() && out.back().factor == s.factor) {
    ElementId merged = spec.group(s.factor).mul(out.back().element, s.element);
    if (merged == FiniteGroup::identity()) {
      out.pop_back();
    } else {
      out.back().element = merged;
    }
  } else if (s.element != FiniteGroup::identity()) {
    out.push_back(s);
  }
}

FPWord prefix(const FPWord& x, std::size_t k) {
  return FPWord{{x.syllables.begin(), x.syllables.begin() + static_cast<std::ptrdiff_t>(k)}};
}

FPWord rotate(const FPWord& x, std::size_t k) {
  FPWord out = x;
  std::rotate(out.syllables.begin(), out.syllables.begin() + static_cast<std::ptrdiff_t>(k),
              out.syllables.end());
  return out;
}

FPWord conjugate_by(const FactorSpec& spec, const FPWord& c, const FPWord& x) {
  return fp_mul(spec, fp_mul(spec, c, x), fp_inv(spec, c));
}

}  // namespace

FactorSpec make_factor_spec(FiniteGroup a, ElementId u, FiniteGroup b, ElementId v) {
  if (a.order() < 2 || b.order() < 2) {
    throw InvalidParameters("free product factors must have order at least 2");
  }
  if (u == FiniteGroup::identity() || v == FiniteGroup::identity() || u >= a.order() ||
      v >= b.order()) {
    throw InvalidParameters("distinguished factor elements must be nontrivial");
  }
  return FactorSpec{std::move(a), std::move(b), u, v};
}

FactorSpec cyclic_factors(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw InvalidParameters("cyclic factors need order at least 2");
  FiniteGroup a = cyclic_group(p);
  FiniteGroup b = cyclic_group(q);
  ElementId u = a.generators().front();
  ElementId v = b.generators().front();
  return make_factor_spec(std::move(a), u, std::move(b), v);
}

std::strong_ordering operator<=>(const FPWord& x, const FPWord& y) {
  if (auto c = x.length() <=> y.length(); c != 0) return c;
  return x.syllables <=> y.syllables;
}

FPWord fp_syllable(const FactorSpec& spec, Factor f, ElementId x) {
  if (x >= spec.group(f).order()) throw InvalidParameters("element outside the factor");
  FPWord w;
  if (x != FiniteGroup::identity()) w.syllables.push_back({f, x});
  return w;
}

FPWord fp_mul(const FactorSpec& spec, const FPWord& x, const FPWord& y) {
  FPWord out = x;
  for (const Syllable& s : y.syllables) push_syllable(spec, out.syllables, s);
  return out;
}

FPWord fp_inv(const FactorSpec& spec, const FPWord& x) {
  FPWord out;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    out.syllables.push_back({it->factor, spec.group(it->factor).inv(it->element)});
  }
  return out;
}

FPWord fp_pow(const FactorSpec& spec, const FPWord& x, long long k) {
  FPWord base = k < 0 ? fp_inv(spec, x) : x;
  FPWord out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = fp_mul(spec, out, base);
  return out;
}

FPWord parse_fp_word(const FactorSpec& spec, std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  std::size_t last = text.find_last_not_of(" \t\n\r");
  if (text.substr(first, last - first + 1) == "1") return {};

  FPWord out;
  std::size_t i = first;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if ((c == 'a' || c == 'b') && i + 1 < text.size() && text[i + 1] == '[') {
      // raw element index, as printed for elements that are not powers of u, v
      Factor f = c == 'a' ? Factor::A : Factor::B;
      const char* begin = text.data() + i + 2;
      const char* end = text.data() + text.size();
      ElementId x = 0;
      auto [ptr, ec] = std::from_chars(begin, end, x);
      if (ec != std::errc() || ptr == end || *ptr != ']') throw ParseError("malformed element index");
      if (x >= spec.group(f).order()) throw ParseError("element index outside the factor");
      push_syllable(spec, out.syllables, {f, x});
      i = static_cast<std::size_t>(ptr - text.data()) + 1;
      continue;
    }
    if (c != 'u' && c != 'v') {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in free-product word");
    }
    Factor f = c == 'u' ? Factor::A : Factor::B;
    ++i;
    long long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* begin = text.data() + i;
      const char* end = text.data() + text.size();
      if (begin != end && *begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, k);
      if (ec != std::errc() || ptr == begin) throw ParseError("malformed exponent");
      i = static_cast<std::size_t>(ptr - text.data());
    }
    const FiniteGroup& g = spec.group(f);
    long long order = static_cast<long long>(g.element_order(spec.generator(f)));
    push_syllable(spec, out.syllables, {f, g.pow(spec.generator(f), ((k % order) + order) % order)});
  }
  return out;
}

std::string to_string(const FactorSpec& spec, const FPWord& x) {
  if (x.empty()) return "1";
  std::string out;
  for (const Syllable& s : x.syllables) {
    if (!out.empty()) out += ' ';
    const FiniteGroup& g = spec.group(s.factor);
    char name = s.factor == Factor::A ? 'u' : 'v';
    std::size_t order = g.element_order(spec.generator(s.factor));
    std::string token;
    for (std::size_t k = 1; k < order; ++k) {
      if (g.pow(spec.generator(s.factor), static_cast<long long>(k)) == s.element) {
        token = std::string(1, name) + (k == 1 ? "" : "^" + std::to_string(k));
        break;
      }
    }
    if (token.empty()) {
      token = std::string(1, s.factor == Factor::A ? 'a' : 'b') + "[" +
              std::to_string(s.element) + "]";
    }
    out += token;
  }
  return out;
}

FPCyclicReduction fp_cyclic_reduce(const FactorSpec& spec, const FPWord& x) {
  FPWord core = x;
  FPWord conjugator;
  while (core.length() >= 2 && core.syllables.front().factor == core.syllables.back().factor) {
    FPWord s{{core.syllables.front()}};
    conjugator = fp_mul(spec, conjugator, s);
    core = fp_mul(spec, fp_mul(spec, fp_inv(spec, s), core), s);
  }
  return {CyclicFPWord{std::move(core)}, std::move(conjugator)};
}

std::optional<std::size_t> rotation_to(const CyclicFPWord& x, const CyclicFPWord& y) {
  if (x.word.length() != y.word.length()) return std::nullopt;
  if (x.word.empty()) return 0;
  for (std::size_t k = 0; k < x.word.length(); ++k) {
    if (rotate(x.word, k) == y.word) return k;
  }
  return std::nullopt;
}

std::vector<FPWord> fp_ball(const FactorSpec& spec, std::size_t radius) {
  std::vector<FPWord> ball{FPWord{}};
  std::vector<FPWord> layer{FPWord{}};
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<FPWord> next;
    for (const FPWord& w : layer) {
      for (Factor f : {Factor::A, Factor::B}) {
        if (!w.empty() && w.syllables.back().factor == f) continue;
        for (ElementId x = 1; x < spec.group(f).order(); ++x) {
          FPWord extended = w;
          extended.syllables.push_back({f, x});
          next.push_back(std::move(extended));
        }
      }
    }
    layer = std::move(next);
    ball.insert(ball.end(), layer.begin(), layer.end());
  }
  return ball;
}

FPScan factor_malnormal_scan(const FactorSpec& spec, Factor side, std::size_t radius) {
  FPScan scan;
  scan.radius = radius;
  auto in_side = [&](const FPWord& w) {
    return w.empty() || (w.length() == 1 && w.syllables[0].factor == side);
  };
  for (const FPWord& g : fp_ball(spec, radius)) {
    if (in_side(g)) continue;
    FPWord g_inv = fp_inv(spec, g);
    for (ElementId a = 1; a < spec.group(side).order(); ++a) {
      FPWord x = fp_syllable(spec, side, a);
      if (in_side(fp_mul(spec, fp_mul(spec, g_inv, x), g))) {
        scan.violation = FPWitness{g, x};
        return scan;
      }
    }
  }
  return scan;
}

bool in_cyclic_subgroup(const FactorSpec& spec, const FPWord& w, const FPWord& x) {
  auto red = fp_cyclic_reduce(spec, w);
  const FPWord& core = red.core.word;
  if (core.length() < 2) throw NotHyperbolic("element is conjugate into a factor");
  FPWord y = fp_mul(spec, fp_mul(spec, fp_inv(spec, red.conjugator), x), red.conjugator);
  if (y.length() % core.length() != 0) return false;
  auto m = static_cast<long long>(y.length() / core.length());
  // Powers of a cyclically reduced hyperbolic word grow exactly in length.
  return y == fp_pow(spec, core, m) || y == fp_pow(spec, core, -m);
}

bool verify_cyclic_witness(const FactorSpec& spec, const FPWord& w, const FPWitness& witness) {
  const FPWord& g = witness.conjugator;
  const FPWord& x = witness.element;
  return !x.empty() && in_cyclic_subgroup(spec, w, x) && !in_cyclic_subgroup(spec, w, g) &&
         in_cyclic_subgroup(spec, w, fp_mul(spec, fp_mul(spec, fp_inv(spec, g), x), g));
}

FPVerdict cyclic_malnormal(const FactorSpec& spec, const FPWord& w) {
  auto red = fp_cyclic_reduce(spec, w);
  const FPWord& core = red.core.word;
  if (core.length() < 2) {
    throw NotHyperbolic("cyclic_malnormal needs an element of infinite order; " +
                        to_string(spec, w) + " is conjugate into a factor");
  }
  const std::size_t len = core.length();

  std::optional<FPWitness> local;
  for (std::size_t d = 1; d < len && !local; ++d) {
    if (len % d == 0 && rotate(core, d) == core) {
      // core = root^(len / d); the root commutes with core but is not a power of it.
      local = FPWitness{prefix(core, d), core};
    }
  }
  if (!local) {
    if (auto k = rotation_to(red.core, CyclicFPWord{fp_inv(spec, core)})) {
      // P^-1 core P is the rotation by k, which is core^-1.
      local = FPWitness{prefix(core, *k), core};
    }
  }
  if (!local) return {true, std::nullopt, VerdictMethod::normal_form, false};

  FPWitness witness{conjugate_by(spec, red.conjugator, local->conjugator),
                    conjugate_by(spec, red.conjugator, local->element)};
  if (!verify_cyclic_witness(spec, w, witness)) {
    throw DefinitionsDisagree("normal-form witness failed the membership re-check");
  }
  return {false, std::move(witness), VerdictMethod::normal_form, false};
}

FPScan fp_bounded_violation(const FactorSpec& spec, const std::vector<FPWord>& gens,
                            std::size_t radius) {
  std::size_t longest = 0;
  for (const auto& g : gens) longest = std::max(longest, g.length());
  const std::size_t bound = 2 * radius + 2 * std::max<std::size_t>(longest, 1);

  std::vector<FPWord> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(fp_inv(spec, g));
  }
  std::set<FPWord> members{FPWord{}};
  std::vector<FPWord> frontier{FPWord{}};
  while (!frontier.empty()) {
    std::vector<FPWord> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        FPWord y = fp_mul(spec, x, s);
        if (y.length() <= bound && members.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  FPScan scan;
  scan.radius = radius;
  for (const FPWord& g : fp_ball(spec, radius)) {
    if (members.count(g)) continue;
    FPWord g_inv = fp_inv(spec, g);
    for (const FPWord& x : members) {
      if (x.empty()) continue;
      if (members.count(fp_mul(spec, fp_mul(spec, g_inv, x), g))) {
        scan.violation = FPWitness{g, x};
        return scan;
      }
    }
  }
  return scan;
}

bool kernel_member(const FactorSpec& spec, const FPWord& g, Factor side) {
  if (g.empty()) return true;
  const FPWord& core = fp_cyclic_reduce(spec, g).core.word;
  return !(core.length() == 1 && core.syllables[0].factor == side);
}

KernelTriple kernel_triple(const FactorSpec& spec, Factor side) {
  ElementId x = spec.generator(side);
  if (spec.group(side).element_order(x) < 3) {
    throw InvalidParameters("the kernel triple needs a factor generator of order at least 3");
  }
  KernelTriple t;
  t.h1 = t.h2 = fp_syllable(spec, side, x);
  t.k = fp_syllable(spec, other(side), spec.generator(other(side)));
  t.h1k_in_kernel = kernel_member(spec, fp_mul(spec, t.h1, t.k), side);
  t.kinv_h2_in_kernel = kernel_member(spec, fp_mul(spec, fp_inv(spec, t.k), t.h2), side);
  t.h1h2_in_kernel = kernel_member(spec, fp_mul(spec, t.h1, t.h2), side);
  return t;
}

TorusKnotQuotient torus_knot_quotient(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw InvalidParameters("torus knot quotient needs p, q >= 2");
  FactorSpec spec = cyclic_factors(p, q);
  FPWord uv{{{Factor::A, spec.u}, {Factor::B, spec.v}}};
  return {std::move(spec),
          std::move(uv),
          p,
          q,
          std::gcd(p, q) == 1,
          std::min(p, q) >= 2 && std::max(p, q) >= 3};
}

}  // namespace malnorm
