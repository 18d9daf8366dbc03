#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "free_oracles.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/malnormal_free.hpp"

using namespace malnorm;

namespace {

FreeWord w(const char* text) { return FreeWord::parse(text); }

StallingsGraph graph(const char* gens, std::uint32_t rank = 2) {
  auto words = parse_word_list(gens);
  return stallings(words, rank);
}

FreeWord from_raw(const oracle::RawWord& r) { return FreeWord(std::span<const Letter>(r)); }

oracle::RawWord to_raw(const FreeWord& x) { return {x.letters().begin(), x.letters().end()}; }

std::vector<FreeWord> random_gens(std::mt19937_64& rng, std::uint32_t rank, std::size_t count,
                                  std::size_t max_len) {
  std::vector<FreeWord> gens;
  while (gens.size() < count) {
    auto g = from_raw(oracle::random_raw_word(rng, rank, max_len));
    if (!g.empty()) gens.push_back(g);
  }
  return gens;
}

// Substitutes basis[i] for generator i.
FreeWord evaluate(const FreeWord& coords, const std::vector<FreeWord>& basis) {
  FreeWord out;
  for (Letter l : coords.letters()) {
    const FreeWord& b = basis[generator_of(l)];
    out = out * (is_inverted(l) ? b.inverse() : b);
  }
  return out;
}

}  // namespace

TEST_CASE("word reduction and parsing") {
  CHECK(w("a b b^-1 a") == w("a^2"));
  CHECK(w("a b b^-1 a").to_string() == "a^2");
  auto r = cyclic_reduce(w("b a b^-1"));
  CHECK(r.core == w("a"));
  CHECK(r.conjugator == w("b"));
  CHECK(cyclic_reduce(FreeWord()).core.empty());
  CHECK(w("").empty());
  CHECK(w(" 1 ").empty());
  CHECK(FreeWord().to_string() == "1");
  CHECK(w("a^-2 b^3 c").to_string() == "a^-2 b^3 c");
  CHECK(w("a^0 b") == w("b"));
  CHECK(w("a^+2") == w("a a"));

  CHECK_THROWS_AS(w("A"), ParseError);
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK_THROWS_AS(w("a^x"), ParseError);
  CHECK_THROWS_AS(w("a*b"), ParseError);
  CHECK_THROWS_AS(parse_word_list("a,,b"), ParseError);
  CHECK(parse_word_list("a^2, b").size() == 2);
}

TEST_CASE("word round trips and group laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto x = from_raw(oracle::random_raw_word(rng, 3, 12));
    auto y = from_raw(oracle::random_raw_word(rng, 3, 12));
    CHECK(FreeWord::parse(x.to_string()) == x);
    CHECK((x * x.inverse()).empty());
    CHECK(to_raw(x * y) == oracle::raw_mul(to_raw(x), to_raw(y)));
    auto c = cyclic_reduce(x);
    CHECK(conjugate(c.conjugator, c.core) == x);
    if (c.core.length() >= 2) CHECK(c.core[0] != inverse_letter(c.core[c.core.length() - 1]));
  }
}

TEST_CASE("shortlex ball") {
  auto ball = shortlex_ball(2, 6);
  CHECK(ball.size() == 1 + 4 + 12 + 36 + 108 + 324 + 972);
  CHECK(std::is_sorted(ball.begin(), ball.end()));
  CHECK(ball[1] == w("a"));
  CHECK(ball[2] == w("a^-1"));
  CHECK(ball[3] == w("b"));
}

TEST_CASE("stallings examples") {
  auto x = graph("a");
  CHECK(x.vertex_count() == 1);
  CHECK(x.edge_count() == 1);

  auto g = graph("a^2, b");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.subgroup_rank() == 2);

  auto c = graph("a^-1 b^-1 a b");
  CHECK(c.vertex_count() == 4);
  CHECK(c.edge_count() == 4);
  CHECK(c.subgroup_rank() == 1);

  CHECK(graph("a b a^-1").vertex_count() == 2);  // base keeps its hair
  CHECK(graph("1").edge_count() == 0);
  CHECK_THROWS_AS(graph("c", 2), InvalidParameters);
  CHECK(graph("a, b").is_cover());
}

TEST_CASE("folding is confluent under Nielsen moves and reordering") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto gens = random_gens(rng, 2 + trial % 2, 1 + trial % 3, 6);
    std::uint32_t rank = 2 + trial % 2;
    auto base = stallings(gens, rank);
    auto moved = gens;
    std::shuffle(moved.begin(), moved.end(), rng);
    moved[0] = moved[0].inverse();
    if (moved.size() > 1) moved[1] = moved[1] * moved[0];
    CHECK(stallings(moved, rank) == base);
    CHECK(stallings(base.basis(), rank) == base);
    auto dot = base.to_dot();
    CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(base.edge_count()));
  }
}

TEST_CASE("member examples and brute-force agreement") {
  auto g = graph("a^2, b");
  CHECK(member(g, w("a^4")));
  CHECK(member(g, FreeWord()));
  CHECK_FALSE(member(g, w("a")));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t rank = 2 + trial % 2;
    auto gens = random_gens(rng, rank, 1 + trial % 3, 3);
    auto h = stallings(gens, rank);
    std::vector<oracle::RawWord> raw;
    for (const auto& x : gens) raw.push_back(to_raw(x));
    auto ball = oracle::bounded_subgroup_ball(raw, 10);
    for (const auto& x : ball) {
      if (x.size() <= 8) CHECK(member(h, from_raw(x)));
    }
    for (const auto& x : shortlex_ball(rank, rank == 2 ? 5 : 4)) {
      CHECK(member(h, x) == (ball.count(to_raw(x)) > 0));
    }
  }
}

TEST_CASE("basis and rewriting") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto gens = random_gens(rng, 2, 1 + trial % 3, 6);
    auto h = stallings(gens, 2);
    CHECK(h.basis().size() == h.subgroup_rank());
    for (std::size_t i = 0; i < h.basis().size(); ++i) {
      CHECK(h.rewrite(h.basis()[i]) == FreeWord::generator(static_cast<std::uint32_t>(i)));
    }
    for (const auto& g : gens) CHECK(evaluate(h.rewrite(g), h.basis()) == g);
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      CHECK(h.degree(static_cast<Vertex>(v)) >= (v == 0 ? 0u : 2u));
    }
  }
  CHECK_THROWS_AS(graph("a^2").rewrite(w("a")), InvalidParameters);
}

TEST_CASE("intersect examples") {
  auto t = intersect(graph("a"), graph("b"));
  CHECK(t.vertex_count() == 1);
  CHECK(t.edge_count() == 0);
  CHECK(intersect(graph("a^2"), graph("a^3")) == graph("a^6"));
  CHECK(intersect(graph("a, b^2"), graph("b")) == graph("b^2"));
}

TEST_CASE("intersect agrees with membership") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = stallings(random_gens(rng, 2, 2, 5), 2);
    auto k = stallings(random_gens(rng, 2, 2, 5), 2);
    auto hk = intersect(h, k);
    for (int i = 0; i < 200; ++i) {
      auto x = from_raw(oracle::random_raw_word(rng, 2, 8));
      CHECK(member(hk, x) == (member(h, x) && member(k, x)));
    }
    for (const auto& b : hk.basis()) CHECK((member(h, b) && member(k, b)));
  }
}

TEST_CASE("conjugate and within") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = stallings(random_gens(rng, 2, 2, 5), 2);
    auto g = from_raw(oracle::random_raw_word(rng, 2, 5));
    std::vector<FreeWord> conj;
    for (const auto& b : h.basis()) conj.push_back(conjugate(g, b));
    CHECK(conjugate(h, g) == stallings(conj, 2));

    std::vector<FreeWord> sub{h.basis().front().pow(2)};
    auto k = stallings(sub, 2);
    auto inside = within(h, k);
    CHECK(inside.alphabet_rank() == h.basis().size());
    for (const auto& b : inside.basis()) CHECK(member(k, evaluate(b, h.basis())));
  }
  CHECK_THROWS_AS(within(graph("a"), graph("b")), InvalidParameters);
}

TEST_CASE("is_malnormal_free examples") {
  CHECK(is_malnormal_free(graph("a^-1 b^-1 a b")).malnormal);

  auto sq = is_malnormal_free(graph("a^2"));
  CHECK_FALSE(sq.malnormal);
  REQUIRE(sq.witness);
  CHECK(sq.witness->conjugator == w("a"));
  CHECK(sq.witness->element == w("a^2"));
  CHECK(sq.method == VerdictMethod::pullback);

  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 2; ++l) {
      auto x = FreeWord::generator(0).pow(k) * w("b") * FreeWord::generator(0).pow(l) * w("b^-1");
      std::vector<FreeWord> gens{x};
      CHECK(is_malnormal_free(stallings(gens, 2)).malnormal);
    }
  }
  CHECK(is_malnormal_free(graph("a")).malnormal);
  CHECK(is_malnormal_free(graph("1")).trivial);
  CHECK(is_malnormal_free(graph("a, b")).trivial);
  CHECK_FALSE(is_malnormal_free(graph("a^2, b")).malnormal);
}

TEST_CASE("pullback components") {
  auto comps = self_pullback(graph("a^2"));
  std::size_t diagonal = 0;
  std::size_t cycles = 0;
  for (const auto& c : comps) {
    if (c.is_diagonal) {
      ++diagonal;
      CHECK(c.witness.empty());
    }
    if (c.betti > 0) ++cycles;
  }
  CHECK(diagonal == 1);
  CHECK(cycles == 2);
}

TEST_CASE("pullback verdict agrees with bounded search") {
  std::mt19937_64 rng(19);
  int malnormal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto h = stallings(random_gens(rng, 2, 1 + trial % 2, 5), 2);
    auto v = is_malnormal_free(h);
    auto scan = bounded_violation_search(h, trial < 20 ? 6 : 4);
    if (v.malnormal) {
      ++malnormal;
      CHECK(scan.clean());
    } else if (!v.trivial) {
      REQUIRE(v.witness);
      CHECK(verify_witness(h, *v.witness));
    }
    if (!scan.clean()) {
      CHECK_FALSE(v.malnormal);
      CHECK(verify_witness(h, *scan.violation));
    }
  }
  CHECK(malnormal > 10);
}

TEST_CASE("bounded_violation_search examples") {
  auto s = bounded_violation_search(graph("a^2"), 1);
  REQUIRE_FALSE(s.clean());
  CHECK(s.violation->conjugator == w("a"));
  CHECK(s.violation->element == w("a^2"));
  CHECK(bounded_violation_search(graph("a^-1 b^-1 a b"), 6).clean());
  CHECK(bounded_violation_search(graph("a"), 6).clean());
}

TEST_CASE("malnormal closure") {
  auto c = malnormal_closure_free(graph("a^2"));
  CHECK(c.hull == graph("a"));
  REQUIRE(c.certificate.size() == 1);
  CHECK(c.certificate[0] == w("a"));

  auto m = graph("a^-1 b^-1 a b");
  auto same = malnormal_closure_free(m);
  CHECK(same.hull == m);
  CHECK(same.certificate.empty());

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = random_gens(rng, 2, 1 + trial % 2, 5);
    auto h = stallings(gens, 2);
    auto hull = malnormal_closure_free(h);
    CHECK(is_malnormal_free(hull.hull).malnormal);
    for (const auto& g : gens) CHECK(member(hull.hull, g));
  }
  CHECK_THROWS_AS(malnormal_closure_free(graph("a^2"), 0), IterationBudgetExceeded);
}

TEST_CASE("Hall completion") {
  auto hc = hall_completion(graph("a^2, b"));
  CHECK(hc.index() == 2);
  std::set<FreeWord> basis(hc.f0_basis.begin(), hc.f0_basis.end());
  CHECK(basis == std::set<FreeWord>{w("a^2"), w("b"), w("a b a^-1")});
  REQUIRE(hc.complement_basis.size() == 1);
  CHECK(hc.complement_basis[0] == w("a b a^-1"));

  auto finite = hall_completion(graph("a^2, b, a b a^-1"));
  CHECK(finite.index() == 2);
  CHECK(finite.complement_basis.empty());

  auto comm = hall_completion(graph("a^-1 b^-1 a b"));
  CHECK(comm.index() == 4);
  CHECK(comm.f0_basis.size() == 5);
  CHECK(is_malnormal_free(stallings(comm.h_in_f0, 5)).malnormal);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = stallings(random_gens(rng, 2 + trial % 2, 1 + trial % 3, 5), 2 + trial % 2);
    auto r = hall_completion(h);
    CHECK(r.covering.is_cover());
    for (const auto& g : h.basis()) CHECK(member(r.covering, g));
    CHECK(r.f0_basis.size() == h.basis().size() + r.complement_basis.size());
  }
}
