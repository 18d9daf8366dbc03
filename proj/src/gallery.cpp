#include "malnorm/gallery.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/malnormal_finite.hpp"
#include "malnorm/malnormal_free.hpp"
#include "malnorm/stallings.hpp"

namespace malnorm {

namespace {

IntMat int_mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{a}, {b}, {c}, {d}};
}

Json mat_json(const auto& m) {
  return Json::array({Json::array({m.a.to_string(), m.b.to_string()}),
                      Json::array({m.c.to_string(), m.d.to_string()})});
}

Json int_mat_json(const IntMat& m) {
  return Json::array({Json::array({m.a.v, m.b.v}), Json::array({m.c.v, m.d.v})});
}

// Smallest k >= 0 with gen^k = x.
long long exponent_of(const FiniteGroup& g, ElementId gen, ElementId x) {
  ElementId y = FiniteGroup::identity();
  for (long long k = 0; k < static_cast<long long>(g.order()); ++k) {
    if (y == x) return k;
    y = g.mul(y, gen);
  }
  throw InvalidParameters("element is not a power of the factor generator");
}

IntMat mat_pow(IntMat m, long long k) {
  IntMat r = IntMat::identity(Integer{});
  for (long long i = 0; i < k; ++i) r = r * m;
  return r;
}

Permutation from_map(std::size_t n, auto f) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(f(x));
  return Permutation(std::move(images));
}

std::size_t inverse_mod(std::size_t x, std::size_t p) {
  std::size_t r = 1;
  for (std::size_t e = p - 2, b = x % p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

Subgroup point_stabilizer(const FiniteGroup& g, Point x) {
  std::vector<ElementId> members;
  for (ElementId i = 0; i < g.order(); ++i) {
    if (g.element(i)[x] == x) members.push_back(i);
  }
  return Subgroup::from_members(g, std::move(members));
}

// H < K, both in the same parent, re-expressed as a subgroup of K as a group.
Subgroup relative(const Subgroup& h, const Subgroup& k) {
  FiniteGroup kg = k.as_group();
  std::vector<ElementId> gens;
  for (ElementId x : h.generators()) gens.push_back(kg.index_of(h.parent().element(x)));
  return Subgroup::generated_by(kg, gens);
}

bool all_methods_malnormal(const Subgroup& h) {
  bool v = is_malnormal(h, VerdictMethod::definition).malnormal;
  for (auto m : {VerdictMethod::free_action, VerdictMethod::fixed_points}) {
    if (is_malnormal(h, m).malnormal != v) throw DefinitionsDisagree("verdict methods disagree");
  }
  return v;
}

}  // namespace

IntMat psl2z_embed(const FactorSpec& spec, const FPWord& w) {
  if (spec.a.order() != 2 || spec.b.order() != 3) {
    throw InvalidParameters("the PSL2(Z) embedding needs C2 * C3");
  }
  const IntMat u = int_mat(0, 1, -1, 0);
  const IntMat v = int_mat(0, -1, 1, 1);
  IntMat r = IntMat::identity(Integer{});
  for (const Syllable& s : w.syllables) {
    ElementId gen = spec.generator(s.factor);
    long long k = exponent_of(spec.group(s.factor), gen, s.element);
    r = r * mat_pow(s.factor == Factor::A ? u : v, k);
  }
  return r;
}

IntMat projective_normal_form(const IntMat& m) {
  for (Integer x : {m.a, m.b, m.c, m.d}) {
    if (x.v != 0) return x.v < 0 ? -m : m;
  }
  return m;
}

Report psl2z_report(std::size_t radius, std::uint64_t seed, std::size_t pairs) {
  Report r{"gallery.psl2z"};
  FactorSpec spec = cyclic_factors(2, 3);
  const IntMat id = IntMat::identity(Integer{});
  FPWord u = fp_syllable(spec, Factor::A, spec.u);
  FPWord v = fp_syllable(spec, Factor::B, spec.v);

  IntMat mu = psl2z_embed(spec, u);
  IntMat mv = psl2z_embed(spec, v);
  IntMat muv = psl2z_embed(spec, fp_mul(spec, u, v));
  r.data["u"] = int_mat_json(mu);
  r.data["v"] = int_mat_json(mv);
  r.data["uv"] = int_mat_json(muv);
  r.expect("u^2 = e", true, (mu * mu).projectively_equals(id));
  r.expect("v^3 = e", true, (mv * mv * mv).projectively_equals(id));
  r.expect("uv = [[1,1],[0,1]]", true, muv.projectively_equals(int_mat(1, 1, 0, 1)));
  r.expect("empty word -> identity", true, psl2z_embed(spec, FPWord{}).projectively_equals(id));

  std::vector<FPWord> ball = fp_ball(spec, radius);
  std::set<std::array<std::int64_t, 4>> images;
  for (const FPWord& w : ball) {
    IntMat m = projective_normal_form(psl2z_embed(spec, w));
    images.insert({m.a.v, m.b.v, m.c.v, m.d.v});
  }
  r.data["radius"] = radius;
  r.data["normal_forms"] = ball.size();
  r.data["distinct_images"] = images.size();
  r.expect("injective on ball", ball.size(), images.size());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const FPWord& x = ball[pick(rng)];
    const FPWord& y = ball[pick(rng)];
    IntMat lhs = psl2z_embed(spec, fp_mul(spec, x, y));
    IntMat rhs = psl2z_embed(spec, x) * psl2z_embed(spec, y);
    if (!lhs.projectively_equals(rhs)) ++failures;
  }
  r.data["seed"] = seed;
  r.data["homomorphism_pairs"] = pairs;
  r.expect("homomorphism failures", 0, failures);
  return r;
}

Report psl2z_no_splitting_report(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw InvalidParameters("factor orders must be at least 2");
  Report r{"gallery.psl2z_no_splitting"};
  // Abelianizing C_p * C_q kills the free-product structure, leaving C_p x C_q.
  FiniteGroup ab = direct_product_cyclic(p, q);
  std::vector<std::size_t> inv = abelian_invariants(ab);
  // Each invariant factor is positive, so the quotient is finite and has no
  // surjection onto Z; a normal N with G = N x| <uv> would give one.
  bool finite = std::all_of(inv.begin(), inv.end(), [](std::size_t d) { return d > 0; });
  r.data["p"] = p;
  r.data["q"] = q;
  r.data["abelianization"] = "C" + std::to_string(p) + " x C" + std::to_string(q);
  r.data["abelian_invariants"] = inv;
  r.data["abelianization_finite"] = finite;
  r.data["surjects_onto_Z"] = !finite;
  r.data["splits_over_P"] = !finite;
  r.expect("abelianization order", p * q, ab.order());
  r.expect("splits_over_P", false, !finite);
  if (p == 2 && q == 3) r.expect("abelian invariants", std::vector<std::size_t>{6}, inv);
  return r;
}

Report picard_identities() {
  Report r{"gallery.picard"};
  const Gaussian zero{0, 0}, one{1, 0}, i{0, 1};
  const GaussMat id = GaussMat::identity(one);
  const GaussMat g{zero, one, -one, zero};
  const GaussMat h{i, zero, zero, -i};
  const GaussMat h_inv = h.adjugate();
  r.data["g"] = mat_json(g);
  r.data["h"] = mat_json(h);
  r.expect("det g = 1", true, g.det() == one);
  r.expect("det h = 1", true, h.det() == one);
  r.expect("g^2 = e", true, (g * g).projectively_equals(id));
  r.expect("h^2 = e", true, (h * h).projectively_equals(id));
  r.expect("g not in P", false, g.is_upper_triangular());
  r.expect("h not in Q", false, h.is_unipotent_upper());
  GaussMat ghg = g * h * g.adjugate();
  r.data["ghg^-1"] = mat_json(ghg);
  r.expect("ghg^-1 = h^-1", true, ghg.projectively_equals(h_inv));
  r.expect("ghg^-1 in P", true, ghg.is_upper_triangular());

  Json conj = Json::array();
  for (Gaussian b : {Gaussian{1, 0}, Gaussian{0, 1}, Gaussian{1, 1}, Gaussian{2, -3}}) {
    GaussMat t{one, b, zero, one};
    GaussMat c = h * t * h_inv;
    GaussMat expected{one, -b, zero, one};
    conj.push_back({{"b", b.to_string()}, {"h t h^-1", mat_json(c)}});
    r.expect("h [[1," + b.to_string() + "],[0,1]] h^-1 = [[1,-b],[0,1]]", true,
             c.projectively_equals(expected));
    r.expect("h [[1," + b.to_string() + "],[0,1]] h^-1 in Q", true, c.is_unipotent_upper());
  }
  r.data["unipotent_conjugates"] = std::move(conj);
  if (!r.all_pass()) throw IdentityFailed("Picard identity failed");
  return r;
}

AffineGroup affine_group(std::size_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p > 257) throw InvalidParameters("p must be at most 257");
  std::size_t g = primitive_root(p);
  std::vector<Permutation> gens{from_map(p, [&](std::size_t x) { return (x + 1) % p; })};
  if (p > 2) gens.push_back(from_map(p, [&](std::size_t x) { return x * g % p; }));
  FiniteGroup group = FiniteGroup::generate(p, gens, p * (p - 1));
  Subgroup stab = point_stabilizer(group, 0);
  ElementId t = group.index_of(gens.front());
  return {group, stab, Subgroup::generated_by(group, std::span(&t, 1))};
}

Report affine_report(std::size_t p) {
  AffineGroup ag = affine_group(p);
  Report r{"gallery.affine"};
  r.data["p"] = p;
  r.data["order"] = ag.group.order();
  r.data["stabilizer_order"] = ag.stabilizer.order();
  r.expect("order = p(p-1)", p * (p - 1), ag.group.order());
  r.expect("stabilizer order = p-1", p - 1, ag.stabilizer.order());
  r.expect("stabilizer cyclic", true,
           std::any_of(ag.stabilizer.members().begin(), ag.stabilizer.members().end(),
                       [&](ElementId x) { return ag.group.element_order(x) == p - 1; }));
  if (p == 2) {
    r.expect("stabilizer trivial", true, ag.stabilizer.is_trivial());
    return r;
  }
  r.expect("stabilizer malnormal", true, all_methods_malnormal(ag.stabilizer));
  std::vector<ElementId> kernel = frobenius_kernel(ag.stabilizer);
  std::vector<ElementId> translations(ag.translations.members().begin(),
                                      ag.translations.members().end());
  r.data["kernel_order"] = kernel.size();
  r.expect("kernel order = p", p, kernel.size());
  r.expect("kernel = translations", true, kernel == translations);
  r.expect("|N| = 1 mod |H|", 1u, kernel.size() % ag.stabilizer.order());
  if (ag.group.order() <= Limits{}.normal_lattice_cap) {
    FrobeniusReport fr = frobenius_analyze(ag.stabilizer);
    r.data["frobenius_report"] = {
        {"kernel_normal", fr.kernel_normal},       {"kernel_order_equals_index", fr.kernel_order_equals_index},
        {"splits", fr.splits},                     {"kernel_regular_on_cosets", fr.kernel_regular_on_cosets},
        {"kernel_nilpotent", fr.kernel_nilpotent}, {"congruence_holds", fr.congruence_holds},
        {"fitting_equals_kernel", fr.fitting_equals_kernel}};
    r.expect("frobenius report all true", true, fr.all_true());
  }
  return r;
}

Report pgl2_borel_analysis(std::size_t q) {
  if (!is_prime(q) || q < 5 || q > 13) {
    throw UnsupportedField("q must be a prime in [5, 13], got " + std::to_string(q));
  }
  // Points 0..q-1 of F_q, and q for infinity.
  const std::size_t n = q + 1;
  const Point inf = static_cast<Point>(q);
  const std::size_t g = primitive_root(q);
  Permutation translate = from_map(n, [&](std::size_t x) { return x == q ? q : (x + 1) % q; });
  Permutation scale = from_map(n, [&](std::size_t x) { return x == q ? q : x * g % q; });
  // w: x -> -1/x, the image of [[0,1],[-1,0]].
  Permutation weyl = from_map(n, [&](std::size_t x) {
    if (x == q) return std::size_t{0};
    if (x == 0) return q;
    return (q - inverse_mod(x, q)) % q;
  });
  std::vector<Permutation> gens{translate, scale, weyl};
  FiniteGroup G = FiniteGroup::generate(n, gens);

  Report r{"gallery.pgl2"};
  r.data["q"] = q;
  r.data["finite_analogue"] = true;
  r.data["order"] = G.order();
  r.expect("|PGL2(F_q)| = q^3 - q", q * q * q - q, G.order());

  ElementId s = G.index_of(scale);
  ElementId w = G.index_of(weyl);
  Subgroup T = Subgroup::generated_by(G, std::span(&s, 1));
  Subgroup b_plus = point_stabilizer(G, inf);
  Subgroup b_minus = point_stabilizer(G, 0);
  r.data["torus_order"] = T.order();
  r.data["borel_order"] = b_plus.order();

  r.expect("T malnormal in B+", true, all_methods_malnormal(relative(T, b_plus)));
  r.expect("T malnormal in B-", true, all_methods_malnormal(relative(T, b_minus)));

  FiniteVerdict vg = is_malnormal(T);
  FiniteWitness weyl_witness{w, G.conj(w, s)};
  r.data["weyl_witness"] = {{"conjugator", weyl.to_string()},
                            {"element", G.element(weyl_witness.element).to_string()}};
  bool witness_ok = verify_witness(T, weyl_witness);
  r.expect("T not malnormal in G (Weyl witness)", true, !vg.malnormal && witness_ok);

  Subgroup nt = normalizer(T);
  r.expect("[N_G(T):T]", 2u, nt.order() / T.order());

  // <B, g> depends only on the coset gB, so coset representatives suffice.
  bool maximal = true;
  for (const Subgroup* b : {&b_plus, &b_minus}) {
    CosetAction cosets(*b);
    for (std::uint32_t c = 1; c < cosets.coset_count() && maximal; ++c) {
      maximal = join(*b, cosets.representative(c)).is_whole();
    }
  }
  r.expect("B+ and B- maximal", true, maximal);
  return r;
}

LampElement lamp_mul(const FiniteGroup& s, const LampElement& x, const LampElement& y) {
  LampElement out{x.base, x.shift + y.shift};
  for (const auto& [pos, val] : y.base) {
    std::int64_t at = pos + x.shift;
    auto it = out.base.find(at);
    ElementId prod = it == out.base.end() ? val : s.mul(it->second, val);
    if (prod == FiniteGroup::identity()) {
      if (it != out.base.end()) out.base.erase(it);
    } else if (it == out.base.end()) {
      out.base.emplace(at, prod);
    } else {
      it->second = prod;
    }
  }
  return out;
}

LampElement lamp_inv(const FiniteGroup& s, const LampElement& x) {
  // (f, k)^-1 = (shift^-k(f^-1), -k)
  LampElement out{{}, -x.shift};
  for (const auto& [pos, val] : x.base) out.base.emplace(pos - x.shift, s.inv(val));
  return out;
}

Report lamplighter_checks(const FiniteGroup& s, const std::string& name, std::uint64_t seed) {
  if (s.order() < 2) throw InvalidParameters("S must be nontrivial");
  Report r{"gallery.lamplighter"};
  r.data["S"] = name;
  r.data["order"] = s.order();
  r.data["seed"] = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> nonid(1, static_cast<ElementId>(s.order() - 1));
  std::uniform_int_distribution<std::int64_t> pos(-4, 4), shift(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);

  auto random_base = [&](bool nonempty) {
    LampElement e;
    int c = nonempty ? count(rng) : count(rng) - 1;
    for (int i = 0; i < c; ++i) e.base[pos(rng)] = nonid(rng);
    return e;
  };

  LampElement single{{{0, s.generators().front()}}, 0};
  LampElement h1{{}, 1};
  r.expect("shift 1 does not commute with delta_0", true,
           !(lamp_mul(s, h1, single) == lamp_mul(s, single, h1)));

  // hn moves the support of n by k; a finite nonempty support is never
  // invariant under a nonzero translation.
  std::size_t samples = 0, commuting = 0;
  for (int trial = 0; trial < 50; ++trial) {
    LampElement n = random_base(true);
    for (std::int64_t k = -8; k <= 8; ++k) {
      if (k == 0) continue;
      LampElement h{{}, k};
      ++samples;
      if (lamp_mul(s, h, n) == lamp_mul(s, n, h)) ++commuting;
    }
  }
  r.data["shift_samples"] = samples;
  r.expect("hn != nh for n != e, 0 < |h| <= 8", 0u, commuting);

  bool identity_commutes = true;
  for (std::int64_t k = -8; k <= 8; ++k) {
    LampElement h{{}, k};
    identity_commutes = identity_commutes && lamp_mul(s, h, LampElement{}) == lamp_mul(s, LampElement{}, h);
  }
  r.expect("e commutes with every shift", true, identity_commutes);

  std::size_t assoc_fail = 0, inverse_fail = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LampElement x = random_base(false), y = random_base(false), z = random_base(false);
    x.shift = shift(rng);
    y.shift = shift(rng);
    z.shift = shift(rng);
    if (!(lamp_mul(s, lamp_mul(s, x, y), z) == lamp_mul(s, x, lamp_mul(s, y, z)))) ++assoc_fail;
    if (!(lamp_mul(s, x, lamp_inv(s, x)) == LampElement{})) ++inverse_fail;
  }
  r.expect("associativity failures", 0u, assoc_fail);
  r.expect("inverse failures", 0u, inverse_fail);

  Subgroup whole = Subgroup::whole(s);
  bool perfect = derived_subgroup(whole) == whole;
  r.data["perfect"] = perfect;
  if (perfect) {
    // Each copy of S in the base has constant lower central series, so the
    // base is not nilpotent.
    r.expect("[S,S] = S", true, perfect);
    r.expect("base nilpotent", false, is_nilpotent(whole).nilpotent);
  }
  return r;
}

Report prop2xi_demo(std::size_t n, bool whole) {
  if (n < 2) throw InvalidParameters("n must be at least 2");
  Report r{"gallery.prop2xi"};
  r.data["n"] = n;
  r.data["H"] = whole ? "F2" : "<a>";

  std::vector<FreeWord> gens{FreeWord::generator(0)};
  if (whole) gens.push_back(FreeWord::generator(1));
  FreeVerdict up = is_malnormal_free(stallings(gens, 2));
  r.data["upstream_malnormal"] = up.malnormal;

  // F2 -> (Z/n)^2 on 2n points; a acts on the first n, b on the last n.
  FiniteGroup q = direct_product_cyclic(n, n);
  Permutation pa = from_map(2 * n, [&](std::size_t x) { return x < n ? (x + 1) % n : x; });
  Permutation pb = from_map(2 * n, [&](std::size_t x) { return x < n ? x : n + (x - n + 1) % n; });
  std::vector<ElementId> image{q.index_of(pa)};
  if (whole) image.push_back(q.index_of(pb));
  Subgroup img = Subgroup::generated_by(q, image);
  bool down = all_methods_malnormal(img);
  r.data["image_order"] = img.order();
  r.data["image_normal"] = img.is_normal();
  r.data["downstream_malnormal"] = down;

  r.expect("upstream malnormal", true, up.malnormal);
  if (whole) {
    r.expect("image is whole", true, img.is_whole());
    r.expect("downstream malnormal", true, down);
  } else {
    r.expect("image normal, nontrivial, proper", true,
             img.is_normal() && !img.is_trivial() && !img.is_whole());
    r.expect("downstream malnormal", false, down);
  }
  return r;
}

}  // namespace malnorm
