#include "malnorm/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "malnorm/errors.hpp"

namespace malnorm {

namespace {

Permutation from_map(std::size_t n, auto f) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(f(x));
  return Permutation(std::move(images));
}

FiniteGroup generate(std::size_t degree, std::vector<Permutation> gens) {
  return FiniteGroup::generate(degree, gens);
}

std::size_t power_mod(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// F_p x| C_d with C_d acting by multiplication, realized on the p points.
CatalogEntry affine_entry(std::string name, std::string description, std::size_t p,
                          std::size_t d) {
  std::size_t mult = power_mod(primitive_root(p), (p - 1) / d, p);
  FiniteGroup translations = generate(p, {from_map(p, [&](std::size_t x) { return (x + 1) % p; })});
  FiniteGroup scalings = generate(p, {from_map(p, [&](std::size_t x) { return x * mult % p; })});
  SemidirectSpec spec = conjugation_spec(translations, scalings);
  SemidirectProduct prod = semidirect_product(spec);
  return {std::move(name), std::move(description), prod.group, prod.complement, prod.kernel,
          spec, d > 1};
}

// Q8 = {+-1, +-i, +-j, +-k}; index = 4 * sign + unit with units (1, i, j, k).
std::size_t quaternion_product(std::size_t a, std::size_t b) {
  // unit_table[u][v] = (sign, unit) of u * v
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_table{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto [sign, unit] = unit_table[a % 4][b % 4];
  std::size_t total_sign = (a / 4 + b / 4 + static_cast<std::size_t>(sign)) % 2;
  return total_sign * 4 + static_cast<std::size_t>(unit);
}

CatalogEntry plain_entry(std::string name, std::string description, FiniteGroup g) {
  return {std::move(name), std::move(description), std::move(g), std::nullopt, std::nullopt,
          std::nullopt, false};
}

CatalogEntry a4_entry() {
  FiniteGroup v4 = generate(4, {Permutation::parse("(1 2)(3 4)", 4),
                                Permutation::parse("(1 3)(2 4)", 4)});
  FiniteGroup c3 = generate(4, {Permutation::parse("(1 2 3)", 4)});
  SemidirectSpec spec = conjugation_spec(v4, c3);
  SemidirectProduct prod = semidirect_product(spec);
  return {"a4", "A4 = V4 x| C3", prod.group, prod.complement, prod.kernel, spec, true};
}

// C3^2 x| Q8 with Q8 acting on F_3^2 through 2x2 matrices.
CatalogEntry f72_entry() {
  auto point = [](std::size_t a, std::size_t b) { return a * 3 + b; };
  auto linear = [&](std::array<std::size_t, 4> m) {
    return from_map(9, [&, m](std::size_t x) {
      std::size_t a = x / 3, b = x % 3;
      return point((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3);
    });
  };
  auto translation = [&](std::size_t u, std::size_t v) {
    return from_map(9, [&, u, v](std::size_t x) {
      return point((x / 3 + u) % 3, (x % 3 + v) % 3);
    });
  };
  FiniteGroup n = generate(9, {translation(1, 0), translation(0, 1)});
  // i -> [[0,-1],[1,0]], j -> [[1,1],[1,-1]] over F_3
  FiniteGroup h = generate(9, {linear({0, 2, 1, 0}), linear({1, 1, 1, 2})});
  SemidirectSpec spec = conjugation_spec(n, h);
  SemidirectProduct prod = semidirect_product(spec);
  return {"f72-q8", "C3^2 x| Q8 (Frobenius group of order 72)", prod.group, prod.complement,
          prod.kernel, spec, true};
}

CatalogEntry c3xc2_entry() {
  SemidirectSpec spec = trivial_action_spec(cyclic_group(3), cyclic_group(2));
  SemidirectProduct prod = semidirect_product(spec);
  return {"c3xc2", "C3 x C2 as a semidirect product with trivial action", prod.group,
          prod.complement, prod.kernel, spec, false};
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<std::size_t> parse_suffix(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::size_t value = 0;
  auto rest = s.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
  return value;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidParameters("cyclic group order must be positive");
  return generate(n, {from_map(n, [&](std::size_t x) { return (x + 1) % n; })});
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InvalidParameters("degree must be positive");
  if (n == 1) return generate(1, {});
  return generate(n, {from_map(n, [&](std::size_t x) { return (x + 1) % n; }),
                      from_map(n, [](std::size_t x) { return x < 2 ? 1 - x : x; })});
}

FiniteGroup alternating_group(std::size_t n) {
  if (n == 0) throw InvalidParameters("degree must be positive");
  if (n < 3) return generate(n, {});
  std::vector<Permutation> gens{
      from_map(n, [](std::size_t x) { return x < 3 ? (x + 1) % 3 : x; })};
  if (n > 3) {
    if (n % 2 == 1) {
      gens.push_back(from_map(n, [&](std::size_t x) { return (x + 1) % n; }));
    } else {
      gens.push_back(from_map(n, [&](std::size_t x) { return x == 0 ? 0 : x % (n - 1) + 1; }));
    }
  }
  return generate(n, gens);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidParameters("dihedral group needs n >= 3");
  return generate(n, {from_map(n, [&](std::size_t x) { return (x + 1) % n; }),
                      from_map(n, [&](std::size_t x) { return (n - x) % n; })});
}

FiniteGroup quaternion_group() {
  auto left = [](std::size_t q) {
    return from_map(8, [q](std::size_t x) { return quaternion_product(q, x); });
  };
  return generate(8, {left(1), left(2)});
}

FiniteGroup direct_product_cyclic(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidParameters("cyclic orders must be positive");
  std::size_t d = m + n;
  return generate(d, {from_map(d, [&](std::size_t x) { return x < m ? (x + 1) % m : x; }),
                      from_map(d, [&](std::size_t x) {
                        return x < m ? x : m + (x - m + 1) % n;
                      })});
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t primitive_root(std::size_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::size_t> factors;
  std::size_t m = p - 1;
  for (std::size_t d = 2; d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  for (std::size_t g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](std::size_t q) {
      return power_mod(g, (p - 1) / q, p) != 1;
    });
    if (ok) return g;
  }
  throw AssertionFailure("no primitive root found");
}

std::vector<std::string> catalog_names() {
  return {"s3",     "c6",     "v4", "d4",     "q8", "d5", "a4",     "agl1-5",
          "c7c3",   "s4",     "agl1-7", "a5", "f72-q8", "c3xc2"};
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> entries;
  for (const auto& name : catalog_names()) entries.push_back(catalog_entry(name));
  return entries;
}

CatalogEntry catalog_entry(std::string_view raw) {
  std::string name = lower(raw);
  if (name == "s3") return affine_entry("s3", "S3 = AGL(1,3) = C3 x| C2", 3, 2);
  if (name == "c6") return plain_entry("c6", "cyclic group of order 6", cyclic_group(6));
  if (name == "v4") {
    return plain_entry("v4", "Klein four-group C2 x C2", direct_product_cyclic(2, 2));
  }
  if (name == "d4") return plain_entry("d4", "dihedral group of order 8", dihedral_group(4));
  if (name == "q8") {
    return plain_entry("q8", "quaternion group, regular representation", quaternion_group());
  }
  if (name == "d5") return affine_entry("d5", "dihedral group of order 10 = C5 x| C2", 5, 2);
  if (name == "a4") return a4_entry();
  if (name == "c7c3") return affine_entry("c7c3", "C7 x| C3", 7, 3);
  if (name == "s4") return plain_entry("s4", "symmetric group on 4 points", symmetric_group(4));
  if (name == "a5") return plain_entry("a5", "alternating group on 5 points", alternating_group(5));
  if (name == "f72-q8") return f72_entry();
  if (name == "c3xc2") return c3xc2_entry();
  if (auto p = parse_suffix(name, "agl1-")) {
    if (!is_prime(*p)) throw NotPrime(std::to_string(*p) + " is not prime");
    if (*p < 3) throw InvalidParameters("agl1-P needs P >= 3");
    return affine_entry(name, "AGL(1," + std::to_string(*p) + ") = F_p x| F_p^*", *p, *p - 1);
  }
  if (auto n = parse_suffix(name, "c")) {
    return plain_entry(name, "cyclic group of order " + std::to_string(*n), cyclic_group(*n));
  }
  if (auto n = parse_suffix(name, "s")) {
    return plain_entry(name, "symmetric group on " + std::to_string(*n) + " points",
                       symmetric_group(*n));
  }
  if (auto n = parse_suffix(name, "a")) {
    return plain_entry(name, "alternating group on " + std::to_string(*n) + " points",
                       alternating_group(*n));
  }
  if (auto n = parse_suffix(name, "d")) {
    return plain_entry(name, "dihedral group of order " + std::to_string(2 * *n),
                       dihedral_group(*n));
  }
  throw InputError("unknown built-in group \"" + std::string(raw) + "\"");
}

}  // namespace malnorm
