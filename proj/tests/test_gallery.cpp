#include <array>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/gallery.hpp"
#include "malnorm/malnormal_finite.hpp"
#include "oracles.hpp"

using namespace malnorm;

namespace {

const Assertion& find_assertion(const Report& r, const std::string& name) {
  for (const auto& a : r.assertions) {
    if (a.name == name) return a;
  }
  FAIL("missing assertion " << name);
  throw;
}

using Raw = std::array<long long, 4>;

Raw raw_mul(Raw x, Raw y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Raw raw_class(Raw m) {
  for (long long x : m) {
    if (x != 0) {
      if (x < 0) {
        for (auto& e : m) e = -e;
      }
      break;
    }
  }
  return m;
}

// Images of all alternating words in u, v, v^2 up to syllable length n, built
// directly from matrices rather than through FPWord.
std::vector<Raw> raw_images(std::size_t n) {
  const Raw id{1, 0, 0, 1}, u{0, 1, -1, 0}, v{0, -1, 1, 1};
  const Raw v2 = raw_mul(v, v);
  std::vector<Raw> out{id};
  // frontier entries: (matrix, last factor 0 = u, 1 = v)
  std::vector<std::pair<Raw, int>> layer{{u, 0}, {v, 1}, {v2, 1}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::pair<Raw, int>> next;
    for (auto [m, f] : layer) {
      out.push_back(m);
      if (f == 1) {
        next.push_back({raw_mul(m, u), 0});
      } else {
        next.push_back({raw_mul(m, v), 1});
        next.push_back({raw_mul(m, v2), 1});
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Dense lamplighter element over positions [-R, R] for an independent product.
struct Dense {
  static constexpr int R = 40;
  std::vector<ElementId> cells = std::vector<ElementId>(2 * R + 1, 0);
  std::int64_t shift = 0;
};

Dense to_dense(const LampElement& e) {
  Dense d;
  for (auto [p, v] : e.base) d.cells[p + Dense::R] = v;
  d.shift = e.shift;
  return d;
}

Dense dense_mul(const FiniteGroup& s, const Dense& x, const Dense& y) {
  Dense out = x;
  out.shift = x.shift + y.shift;
  for (int p = -Dense::R; p <= Dense::R; ++p) {
    ElementId v = y.cells[p + Dense::R];
    if (v == 0) continue;
    int at = p + static_cast<int>(x.shift);
    out.cells[at + Dense::R] = s.mul(out.cells[at + Dense::R], v);
  }
  return out;
}

bool same(const Dense& a, const Dense& b) { return a.cells == b.cells && a.shift == b.shift; }

}  // namespace

TEST_CASE("psl2z embedding examples") {
  FactorSpec spec = cyclic_factors(2, 3);
  CHECK(psl2z_embed(spec, FPWord{}) == IntMat::identity(Integer{}));
  IntMat uv = psl2z_embed(spec, parse_fp_word(spec, "u v"));
  CHECK(uv.projectively_equals(IntMat{{1}, {1}, {0}, {1}}));
  IntMat v = psl2z_embed(spec, parse_fp_word(spec, "v"));
  CHECK((v * v * v).projectively_equals(IntMat::identity(Integer{})));
  CHECK_FALSE(v.projectively_equals(IntMat::identity(Integer{})));
  CHECK(v.det() == Integer{1});
  CHECK_THROWS_AS(psl2z_embed(cyclic_factors(2, 2), FPWord{}), InvalidParameters);
}

TEST_CASE("psl2z embedding injective on the radius 12 ball") {
  std::vector<Raw> raw = raw_images(12);
  std::set<Raw> classes;
  for (const Raw& m : raw) classes.insert(raw_class(m));
  CHECK(classes.size() == raw.size());

  Report r = psl2z_report(12, 0, 1000);
  CHECK(r.all_pass());
  CHECK(r.data["normal_forms"].get<std::size_t>() == raw.size());
  CHECK(r.data["distinct_images"].get<std::size_t>() == classes.size());
}

TEST_CASE("psl2z images agree with direct matrix products") {
  FactorSpec spec = cyclic_factors(2, 3);
  std::set<Raw> raw;
  for (const Raw& m : raw_images(8)) raw.insert(raw_class(m));
  std::set<Raw> lib;
  for (const FPWord& w : fp_ball(spec, 8)) {
    IntMat m = projective_normal_form(psl2z_embed(spec, w));
    lib.insert({m.a.v, m.b.v, m.c.v, m.d.v});
  }
  CHECK(raw == lib);
}

TEST_CASE("abelianization of C_p * C_q") {
  auto invariants = [](std::size_t p, std::size_t q) {
    return psl2z_no_splitting_report(p, q).data["abelian_invariants"].get<std::vector<std::size_t>>();
  };
  CHECK(invariants(2, 3) == std::vector<std::size_t>{6});
  CHECK(invariants(2, 2) == std::vector<std::size_t>{2, 2});
  CHECK(invariants(3, 3) == std::vector<std::size_t>{3, 3});
  Report r = psl2z_no_splitting_report();
  CHECK(r.all_pass());
  CHECK(r.data["splits_over_P"] == false);

  // C2 x C2 brute force: every nonidentity element has order 2, so not cyclic.
  FiniteGroup v4 = direct_product_cyclic(2, 2);
  for (ElementId x = 1; x < v4.order(); ++x) CHECK(v4.element_order(x) == 2);
}

TEST_CASE("picard identities") {
  Report r = picard_identities();
  CHECK(r.all_pass());
  CHECK(find_assertion(r, "ghg^-1 = h^-1").pass);
  CHECK(find_assertion(r, "g^2 = e").pass);
  CHECK(find_assertion(r, "h [[1,1],[0,1]] h^-1 = [[1,-b],[0,1]]").pass);

  const Gaussian one{1, 0}, zero{0, 0}, i{0, 1};
  GaussMat h{i, zero, zero, -i};
  GaussMat c = h * GaussMat{one, one, zero, one} * h.adjugate();
  CHECK(c == GaussMat{one, -one, zero, one});
}

TEST_CASE("gaussian overflow is detected") {
  Gaussian big{std::int64_t{1} << 62, 0};
  CHECK_THROWS_AS(big * big, ArithmeticOverflow);
  CHECK(ModP::of(3, 7).inverse() * ModP::of(3, 7) == ModP::of(1, 7));
}

TEST_CASE("affine groups") {
  SUBCASE("p = 3 is S3") {
    AffineGroup ag = affine_group(3);
    CHECK(ag.group.order() == 6);
    CHECK(abelian_invariants(ag.group) == std::vector<std::size_t>{2});
  }
  SUBCASE("p = 5") {
    AffineGroup ag = affine_group(5);
    CHECK(ag.group.order() == 20);
    oracle::PermSet g = oracle::closure(5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 2, 4, 1, 3})});
    oracle::PermSet h;
    for (const auto& x : g) {
      if (x[0] == 0) h.insert(x);
    }
    CHECK(g.size() == 20);
    CHECK(oracle::malnormal(g, h));
    CHECK(affine_report(5).all_pass());
  }
  SUBCASE("p = 7") {
    Report r = affine_report(7);
    CHECK(r.all_pass());
    CHECK(r.data["order"] == 42);
    CHECK(r.data["kernel_order"] == 7);
    CHECK(7 % 6 == 1);
  }
  SUBCASE("large p skips the lattice-based report") {
    Report r = affine_report(101);
    CHECK(r.all_pass());
    CHECK_FALSE(r.data.contains("frobenius_report"));
  }
  CHECK_THROWS_AS(affine_group(9), NotPrime);
  CHECK_THROWS_AS(affine_group(263), InvalidParameters);
}

TEST_CASE("pgl2 borel analysis") {
  for (std::size_t q : {5, 7}) {
    CAPTURE(q);
    Report r = pgl2_borel_analysis(q);
    CHECK(r.all_pass());
    CHECK(r.data["finite_analogue"] == true);
    CHECK(r.data["order"].get<std::size_t>() == q * q * q - q);
  }
  CHECK_THROWS_AS(pgl2_borel_analysis(4), UnsupportedField);
  CHECK_THROWS_AS(pgl2_borel_analysis(3), UnsupportedField);
  CHECK_THROWS_AS(pgl2_borel_analysis(17), UnsupportedField);
}

TEST_CASE("pgl2 torus and borels by brute force") {
  // q = 5 on points 0..4 and 5 for infinity: x+1, 2x, -1/x.
  Permutation t({1, 2, 3, 4, 0, 5}), s({0, 2, 4, 1, 3, 5}), w({5, 4, 2, 3, 1, 0});
  oracle::PermSet g = oracle::closure(6, {t, s, w});
  oracle::PermSet torus = oracle::closure(6, {s});
  oracle::PermSet borel;
  for (const auto& x : g) {
    if (x[5] == 5) borel.insert(x);
  }
  CHECK(g.size() == 120);
  std::size_t normalizer = 0;
  for (const auto& x : g) {
    oracle::PermSet conj;
    for (const auto& y : torus) conj.insert(x * y * x.inverse());
    if (conj == torus) ++normalizer;
  }
  CHECK(normalizer == 2 * torus.size());
  CHECK(oracle::malnormal(borel, torus));
  CHECK_FALSE(oracle::malnormal(g, torus));
  for (const auto& x : g) {
    if (borel.count(x)) continue;
    std::vector<Permutation> gens(borel.begin(), borel.end());
    gens.push_back(x);
    CHECK(oracle::closure(6, gens).size() == g.size());
  }

  Report r = pgl2_borel_analysis(5);
  CHECK(r.data["torus_order"] == torus.size());
  CHECK(r.data["borel_order"] == borel.size());
  CHECK(find_assertion(r, "[N_G(T):T]").actual == 2);
}

TEST_CASE("lamplighter product rule") {
  FiniteGroup s = alternating_group(5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<ElementId> val(1, static_cast<ElementId>(s.order() - 1));
  std::uniform_int_distribution<std::int64_t> pos(-5, 5), sh(-4, 4);
  auto random = [&] {
    LampElement e;
    for (int i = 0; i < 3; ++i) e.base[pos(rng)] = val(rng);
    e.shift = sh(rng);
    return e;
  };
  for (int t = 0; t < 300; ++t) {
    LampElement x = random(), y = random();
    LampElement xy = lamp_mul(s, x, y);
    CHECK(same(to_dense(xy), dense_mul(s, to_dense(x), to_dense(y))));
    for (auto [p, v] : xy.base) CHECK(v != FiniteGroup::identity());
    CHECK(lamp_mul(s, lamp_inv(s, x), x) == LampElement{});
  }

  LampElement n{{{0, s.generators().front()}}, 0};
  LampElement h{{}, 1};
  CHECK_FALSE(lamp_mul(s, h, n) == lamp_mul(s, n, h));
  CHECK(lamp_mul(s, h, LampElement{}) == lamp_mul(s, LampElement{}, h));
}

TEST_CASE("lamplighter checks") {
  Report a5 = lamplighter_checks(alternating_group(5), "a5", 0);
  CHECK(a5.all_pass());
  CHECK(a5.data["perfect"] == true);
  CHECK(find_assertion(a5, "[S,S] = S").pass);

  Report c3 = lamplighter_checks(cyclic_group(3), "c3", 0);
  CHECK(c3.all_pass());
  CHECK(c3.data["perfect"] == false);
  CHECK_THROWS_AS(lamplighter_checks(cyclic_group(1), "c1"), InvalidParameters);
}

TEST_CASE("prop2xi demo") {
  for (std::size_t n : {2, 3}) {
    CAPTURE(n);
    Report r = prop2xi_demo(n);
    CHECK(r.all_pass());
    CHECK(r.data["upstream_malnormal"] == true);
    CHECK(r.data["downstream_malnormal"] == false);
    CHECK(r.data["image_order"] == n);
  }
  Report whole = prop2xi_demo(3, true);
  CHECK(whole.all_pass());
  CHECK(whole.data["downstream_malnormal"] == true);
  CHECK_THROWS_AS(prop2xi_demo(1), InvalidParameters);
}

TEST_CASE("report json shape") {
  Report r{"demo"};
  r.expect("one", 1, 1);
  r.expect("two", 2, 3);
  Json j = r.to_json();
  CHECK(j["kind"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["assertions"].size() == 2);
  CHECK(j["assertions"][1]["pass"] == false);
}
