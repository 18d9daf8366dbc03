#include <algorithm>
#include <random>

#include "doctest.h"
#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/finite_group.hpp"
#include "malnorm/semidirect.hpp"
#include "oracles.hpp"

using namespace malnorm;

namespace {

oracle::PermSet as_set(const FiniteGroup& g) {
  return {g.elements().begin(), g.elements().end()};
}

oracle::PermSet as_set(const Subgroup& s) {
  oracle::PermSet out;
  for (ElementId x : s.members()) out.insert(s.parent().element(x));
  return out;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

FiniteGroup agl15() {
  return FiniteGroup::generate(5, std::vector<Permutation>{Permutation::parse("(1 2 3 4 5)", 5),
                                                           Permutation({0, 2, 4, 1, 3})});
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
  Permutation p = Permutation::parse("(1 2 3)(4 5)", 5);
  CHECK(p.images()[0] == 1);
  CHECK(p.images()[2] == 0);
  CHECK(p.images()[3] == 4);
  CHECK(p.to_string() == "(1 2 3)(4 5)");
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(Permutation::parse("", 4).is_identity());
  CHECK(Permutation::parse("(1,2)", 3) == Permutation::parse("(1 2)", 3));

  CHECK_THROWS_AS(Permutation::parse("(1 2 7)", 5), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)", 5), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("(1 2", 5), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("1 2", 5), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("(0 1)", 5), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
}

TEST_CASE("composition applies the right factor first") {
  Permutation a = Permutation::parse("(1 2)", 3);
  Permutation b = Permutation::parse("(2 3)", 3);
  // (a*b)(1) = a(b(1)) = a(1) = 2 (1-indexed)
  CHECK((a * b).images()[0] == 1);
  CHECK((a * b).to_string() == "(1 2 3)");
}

TEST_CASE("permutation group laws on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_permutation(7, rng);
    auto b = random_permutation(7, rng);
    auto c = random_permutation(7, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((Permutation(7) * a) == a);
    CHECK(Permutation::parse(a.to_string(), 7) == a);
  }
}

TEST_CASE("group_from_generators") {
  SUBCASE("S3") {
    auto g = FiniteGroup::generate(3, std::vector<Permutation>{Permutation::parse("(1 2 3)", 3),
                                                               Permutation::parse("(1 2)", 3)});
    CHECK(g.order() == 6);
  }
  SUBCASE("affine group of F5 matches brute-force closure") {
    auto g = agl15();
    auto expected = oracle::closure(5, {Permutation::parse("(1 2 3 4 5)", 5),
                                        Permutation({0, 2, 4, 1, 3})});
    CHECK(expected.size() == 20);
    CHECK(as_set(g) == expected);
  }
  SUBCASE("trivial group") {
    auto g = FiniteGroup::generate(1, std::vector<Permutation>{});
    CHECK(g.order() == 1);
    CHECK(g.element(0).is_identity());
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(FiniteGroup::generate(8, std::vector<Permutation>{
                                                 Permutation::parse("(1 2 3 4 5 6 7 8)", 8),
                                                 Permutation::parse("(1 2)", 8)},
                                          1000),
                    CapExceeded);
  }
  SUBCASE("degree mismatch") {
    CHECK_THROWS_AS(FiniteGroup::generate(4, std::vector<Permutation>{Permutation(3)}),
                    InvalidPermutation);
  }
}

TEST_CASE("canonical element order") {
  std::vector<Permutation> gens{Permutation::parse("(1 2 3 4)", 4), Permutation::parse("(1 2)", 4)};
  auto g = FiniteGroup::generate(4, gens);
  std::reverse(gens.begin(), gens.end());
  auto h = FiniteGroup::generate(4, gens);
  CHECK(g.element(0).is_identity());
  CHECK(std::equal(g.elements().begin(), g.elements().end(), h.elements().begin(),
                   h.elements().end()));
  for (ElementId i = 0; i < g.order(); ++i) {
    CHECK(g.mul(i, g.inv(i)) == FiniteGroup::identity());
    CHECK(g.find(g.element(i)) == i);
  }
  // closure is idempotent
  auto again = FiniteGroup::generate(4, std::vector<Permutation>(g.elements().begin(),
                                                                 g.elements().end()));
  CHECK(as_set(again) == as_set(g));
}

TEST_CASE("large groups multiply without a table") {
  auto s7 = symmetric_group(7);
  CHECK(s7.order() == 5040);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    ElementId a = static_cast<ElementId>(rng() % s7.order());
    ElementId b = static_cast<ElementId>(rng() % s7.order());
    CHECK(s7.element(s7.mul(a, b)) == s7.element(a) * s7.element(b));
  }
}

TEST_CASE("coset_action") {
  auto s3 = symmetric_group(3);
  ElementId t = s3.index_of(Permutation::parse("(1 2)", 3));
  auto h = Subgroup::generated_by(s3, std::vector<ElementId>{t});
  CosetAction action(h);
  CHECK(action.coset_count() == 3);
  // transitive
  std::set<std::uint32_t> orbit;
  for (ElementId g = 0; g < s3.order(); ++g) orbit.insert(action.act(g, action.basepoint()));
  CHECK(orbit.size() == 3);

  CHECK(CosetAction(Subgroup::whole(s3)).coset_count() == 1);
  CHECK(CosetAction(Subgroup::trivial(s3)).coset_count() == 6);
}

TEST_CASE("coset action: stabilizer of the basepoint is H") {
  for (const auto& name : {"s4", "a4", "agl1-5", "f72-q8"}) {
    auto entry = catalog_entry(name);
    for (const auto& h : all_subgroups(entry.group)) {
      CosetAction action(h);
      CHECK(action.coset_count() * h.order() == entry.group.order());
      for (ElementId g = 0; g < entry.group.order(); ++g) {
        CHECK((action.act(g, action.basepoint()) == action.basepoint()) == h.contains(g));
      }
    }
  }
}

TEST_CASE("centralizer and center") {
  auto s3 = symmetric_group(3);
  ElementId r = s3.index_of(Permutation::parse("(1 2 3)", 3));
  auto c = centralizer(s3, r);
  CHECK(c.order() == 3);
  CHECK(as_set(c) == oracle::centralizer(as_set(s3), s3.element(r)));
  CHECK(centralizer(s3, FiniteGroup::identity()).is_whole());
  auto c6 = cyclic_group(6);
  CHECK(centralizer(c6, 1).is_whole());

  CHECK(center(quaternion_group()).order() == 2);
  CHECK(center(s3).is_trivial());
  CHECK(center(c6).is_whole());

  for (const auto& name : catalog_names()) {
    auto g = catalog_entry(name).group;
    auto z = center(g);
    for (ElementId h = 0; h < g.order(); ++h) {
      auto ch = centralizer(g, h);
      CHECK(z.is_subgroup_of(ch));
      CHECK(ch.contains(h));
    }
  }
}

TEST_CASE("nilpotency") {
  auto c5 = Subgroup::whole(cyclic_group(5));
  CHECK(is_nilpotent(c5).nilpotent);
  CHECK(is_nilpotent(c5).nilpotency_class == 1u);
  CHECK_FALSE(is_nilpotent(Subgroup::whole(symmetric_group(3))).nilpotent);
  auto q8 = is_nilpotent(Subgroup::whole(quaternion_group()));
  CHECK(q8.nilpotent);
  CHECK(q8.nilpotency_class == 2u);
  CHECK(is_nilpotent(Subgroup::trivial(quaternion_group())).nilpotency_class == 0u);

  // S3's series stalls at A3
  auto series = lower_central_series(Subgroup::whole(symmetric_group(3)));
  CHECK(series.back().order() == 3);

  for (const auto& name : catalog_names()) {
    auto g = catalog_entry(name).group;
    auto result = is_nilpotent(Subgroup::whole(g));
    int expected = oracle::nilpotency_class(as_set(g));
    CHECK_MESSAGE(result.nilpotent == (expected >= 0), name);
    if (expected >= 0) CHECK(result.nilpotency_class == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("derived subgroup matches all-pairs commutators") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_entry(name).group;
    auto s = as_set(g);
    CHECK_MESSAGE(as_set(derived_subgroup(Subgroup::whole(g))) == oracle::commutator_group(s, s),
                  name);
  }
}

TEST_CASE("fitting subgroup") {
  CHECK(fitting_subgroup(symmetric_group(3)).order() == 3);
  CHECK(fitting_subgroup(quaternion_group()).is_whole());
  CHECK(fitting_subgroup(dihedral_group(4)).is_whole());
  CHECK(fitting_subgroup(alternating_group(5)).is_trivial());
  CHECK(fitting_subgroup(symmetric_group(4)).order() == 4);

  SUBCASE("agrees with subset enumeration on small groups") {
    for (const auto& name : {"s3", "c6", "d4", "q8", "d5", "a4", "v4"}) {
      auto g = catalog_entry(name).group;
      auto all = as_set(g);
      oracle::PermSet expected{Permutation(g.degree())};
      for (const auto& s : oracle::subgroups_by_subsets(all)) {
        if (oracle::normal_in(s, all) && oracle::nilpotency_class(s) >= 0) {
          for (const auto& x : s) expected.insert(x);
        }
      }
      expected = oracle::closure(g.degree(), {expected.begin(), expected.end()});
      CHECK_MESSAGE(as_set(fitting_subgroup(g)) == expected, name);
    }
  }

  SUBCASE("contains every nilpotent normal subgroup") {
    for (const auto& name : catalog_names()) {
      auto g = catalog_entry(name).group;
      auto fit = fitting_subgroup(g);
      CHECK(fit.is_normal());
      CHECK(is_nilpotent(fit).nilpotent);
      for (const auto& n : normal_subgroups(g)) {
        CHECK(n.is_normal());
        if (is_nilpotent(n).nilpotent) CHECK(n.is_subgroup_of(fit));
      }
    }
  }

  CHECK_THROWS_AS(fitting_subgroup(symmetric_group(7)), CapExceeded);
}

TEST_CASE("normal subgroups agree with subset enumeration") {
  for (const auto& name : {"s3", "d4", "q8", "a4", "c6"}) {
    auto g = catalog_entry(name).group;
    auto all = as_set(g);
    std::size_t expected = 0;
    for (const auto& s : oracle::subgroups_by_subsets(all)) {
      if (oracle::normal_in(s, all)) ++expected;
    }
    CHECK_MESSAGE(normal_subgroups(g).size() == expected, name);
  }
}

TEST_CASE("abelian invariants") {
  using V = std::vector<std::size_t>;
  CHECK(abelian_invariants(symmetric_group(3)) == V{2});
  CHECK(abelian_invariants(direct_product_cyclic(2, 3)) == V{6});
  CHECK(abelian_invariants(alternating_group(5)) == V{});
  CHECK(abelian_invariants(quaternion_group()) == V{2, 2});
  CHECK(abelian_invariants(dihedral_group(4)) == V{2, 2});
  CHECK(abelian_invariants(cyclic_group(12)) == V{12});
  CHECK(abelian_invariants(direct_product_cyclic(4, 2)) == V{2, 4});
  CHECK(abelian_invariants(direct_product_cyclic(4, 6)) == V{2, 12});
  CHECK(abelian_invariants(alternating_group(4)) == V{3});
  CHECK(abelian_invariants(FiniteGroup::generate(1, std::vector<Permutation>{})) == V{});
}

TEST_CASE("semidirect products") {
  SUBCASE("C5 x| C4") {
    auto n = cyclic_group(5);
    auto h = FiniteGroup::generate(5, std::vector<Permutation>{Permutation({0, 2, 4, 1, 3})});
    auto prod = semidirect_product(conjugation_spec(n, h));
    CHECK(prod.group.order() == 20);
    CHECK(prod.realized_on_kernel);
    CHECK(prod.kernel.is_normal());
    CHECK(intersect(prod.kernel, prod.complement).is_trivial());
    CHECK(join(prod.kernel, prod.complement).is_whole());
  }
  SUBCASE("trivial action gives the direct product") {
    auto prod = semidirect_product(trivial_action_spec(cyclic_group(3), cyclic_group(2)));
    CHECK(prod.group.order() == 6);
    CHECK_FALSE(prod.realized_on_kernel);
    CHECK(Subgroup::whole(prod.group).is_abelian());
    CHECK(prod.complement.is_normal());
  }
  SUBCASE("C3^2 x| Q8") {
    auto entry = catalog_entry("f72-q8");
    CHECK(entry.group.order() == 72);
    CHECK(entry.kernel->order() == 9);
    CHECK(entry.complement->order() == 8);
    CHECK(abelian_invariants(entry.complement->as_group()) == std::vector<std::size_t>{2, 2});
    CHECK(center(entry.complement->as_group()).order() == 2);
  }
  SUBCASE("a bogus action is rejected") {
    auto n = cyclic_group(3);
    auto h = cyclic_group(2);
    SemidirectSpec spec = trivial_action_spec(n, h);
    spec.action[1] = Permutation({0, 1, 2}) * Permutation::parse("(1 2)", 3);  // not an automorphism
    CHECK_THROWS_AS(semidirect_product(spec), ActionNotHomomorphism);
  }
}

TEST_CASE("all_subgroups") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(cyclic_group(7)).size() == 2);
  CHECK(all_subgroups(direct_product_cyclic(2, 2)).size() == 5);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(alternating_group(5)).size() == 59);
  CHECK_THROWS_AS(all_subgroups(symmetric_group(6)), CapExceeded);

  for (const auto& name : {"s3", "c6", "v4", "d4", "q8", "d5", "a4"}) {
    auto g = catalog_entry(name).group;
    auto expected = oracle::subgroups_by_subsets(as_set(g));
    auto found = all_subgroups(g);
    CHECK_MESSAGE(found.size() == expected.size(), name);
    for (const auto& s : found) {
      CHECK(g.order() % s.order() == 0);
      CHECK(oracle::closed(as_set(s)));
    }
  }
}

TEST_CASE("subgroups from different parents do not mix") {
  auto a = Subgroup::whole(symmetric_group(3));
  auto b = Subgroup::whole(symmetric_group(3));
  CHECK_THROWS_AS((void)(a == b), CrossParent);
  CHECK_THROWS_AS(intersect(a, b), CrossParent);
  CHECK_THROWS_AS(Subgroup::from_members(symmetric_group(3), {0, 1, 2}), InputError);
}

TEST_CASE("catalog") {
  auto entries = catalog();
  CHECK(entries.size() >= 10);
  for (const auto& e : entries) {
    if (e.kernel) {
      CHECK(e.kernel->is_normal());
      CHECK(e.kernel->order() * e.complement->order() == e.group.order());
    }
  }
  CHECK(catalog_entry("AGL1-7").group.order() == 42);
  CHECK(catalog_entry("c7c3").group.order() == 21);
  CHECK(catalog_entry("A5").group.order() == 60);
  CHECK(catalog_entry("d6").group.order() == 12);
  CHECK_THROWS_AS(catalog_entry("nope"), InputError);
  CHECK_THROWS_AS(catalog_entry("agl1-9"), NotPrime);
}
