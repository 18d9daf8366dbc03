#include "malnorm/propsuite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/freeprod.hpp"
#include "malnorm/malnormal_finite.hpp"
#include "malnorm/malnormal_free.hpp"
#include "malnorm/stallings.hpp"

namespace malnorm {

namespace {

using Rng = std::mt19937_64;

enum class Status { pass, fail, vacuous };

struct Outcome {
  Status status = Status::pass;
  Json payload;
};

Outcome pass() { return {Status::pass, {}}; }
Outcome vacuous() { return {Status::vacuous, {}}; }
Outcome fail(Json payload) { return {Status::fail, std::move(payload)}; }
Outcome check(bool ok, Json payload) { return ok ? pass() : fail(std::move(payload)); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a, so that stream ids depend only on the property name.
std::uint64_t stream_of(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

using TrialFn = std::function<Outcome(std::size_t trial, Rng& rng)>;

PropertyResult run_property(const CampaignConfig& config, std::string name, bool required,
                            std::size_t count, const TrialFn& fn) {
  std::vector<Outcome> outcomes(count);
  const std::uint64_t stream = stream_of(name);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < count; i += step) {
      std::uint64_t seed = sub_seed(config.seed, stream, i);
      Rng rng(seed);
      try {
        outcomes[i] = fn(i, rng);
      } catch (const Error& e) {
        outcomes[i] = fail({{"error", e.what()}});
      }
      if (outcomes[i].status == Status::fail) {
        outcomes[i].payload["trial"] = i;
        outcomes[i].payload["sub_seed"] = seed;
      }
    }
  };
  std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  }

  PropertyResult r;
  r.name = std::move(name);
  r.required = required;
  for (auto& o : outcomes) {
    switch (o.status) {
      case Status::pass: ++r.passed; break;
      case Status::vacuous: ++r.vacuous; break;
      case Status::fail:
        ++r.failed;
        if (!r.counterexample) r.counterexample = std::move(o.payload);
        break;
    }
  }
  return r;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// ---- finite regime ----

struct Catalog {
  std::vector<CatalogEntry> entries;

  explicit Catalog(const CampaignConfig& config) {
    for (const auto& name : config.catalog) entries.push_back(catalog_entry(name));
  }
};

ElementId random_element(Rng& rng, const FiniteGroup& g) {
  return static_cast<ElementId>(uniform(rng, 0, g.order() - 1));
}

// Closure of 1 to 3 uniformly chosen elements of `within`.
Subgroup random_subgroup(Rng& rng, const Subgroup& within) {
  std::vector<ElementId> gens(uniform(rng, 1, 3));
  for (auto& x : gens) x = within.members()[uniform(rng, 0, within.order() - 1)];
  return Subgroup::generated_by(within.parent(), gens);
}

Subgroup random_subgroup(Rng& rng, const FiniteGroup& g) {
  return random_subgroup(rng, Subgroup::whole(g));
}

Json subgroup_json(const std::string& group, const Subgroup& h) {
  Json gens = Json::array();
  for (ElementId x : h.generators()) gens.push_back(h.parent().element(x).to_string());
  return {{"group", group}, {"generators", gens}, {"order", h.order()}};
}

// H < K re-expressed inside K as a standalone group.
Subgroup relative(const Subgroup& h, const Subgroup& k) {
  FiniteGroup kg = k.as_group();
  std::vector<ElementId> gens;
  for (ElementId x : h.generators()) gens.push_back(kg.index_of(h.parent().element(x)));
  return Subgroup::generated_by(kg, gens);
}

bool malnormal(const Subgroup& h) { return is_malnormal(h).malnormal; }

// ---- free regime ----

FreeWord random_word(Rng& rng, std::uint32_t rank, std::size_t min_len, std::size_t max_len) {
  std::size_t len = uniform(rng, min_len, max_len);
  std::vector<Letter> letters;
  while (letters.size() < len) {
    Letter l = static_cast<Letter>(uniform(rng, 0, 2 * rank - 1));
    if (!letters.empty() && l == inverse_letter(letters.back())) continue;
    letters.push_back(l);
  }
  return FreeWord(letters);
}

// Stallings graph of 1 to `max_gens` random reduced words of length <= 6.
std::vector<FreeWord> random_free_gens(Rng& rng, std::uint32_t rank, std::size_t max_gens = 3) {
  std::vector<FreeWord> gens(uniform(rng, 1, max_gens));
  for (auto& w : gens) w = random_word(rng, rank, 1, 6);
  return gens;
}

Json words_json(const std::vector<FreeWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

Json free_json(const StallingsGraph& h) {
  return {{"rank", h.alphabet_rank()}, {"basis", words_json(h.basis())}};
}

bool free_malnormal(const StallingsGraph& h) { return is_malnormal_free(h).malnormal; }

bool free_normal(const StallingsGraph& h) {
  for (std::uint32_t i = 0; i < h.alphabet_rank(); ++i) {
    if (!(conjugate(h, FreeWord::generator(i)) == h)) return false;
  }
  return true;
}

bool free_trivial_or_whole(const StallingsGraph& h) {
  return h.edge_count() == 0 || (h.vertex_count() == 1 && h.is_cover());
}

// Word in H built from 1 to 3 random basis letters.
FreeWord random_member(Rng& rng, const std::vector<FreeWord>& basis) {
  FreeWord in_basis = random_word(rng, static_cast<std::uint32_t>(basis.size()), 1, 3);
  FreeWord out;
  for (Letter l : in_basis.letters()) {
    const FreeWord& b = basis[generator_of(l)];
    out = out * (is_inverted(l) ? b.inverse() : b);
  }
  return out;
}

}  // namespace

CampaignConfig CampaignConfig::defaults() {
  CampaignConfig c;
  c.catalog = catalog_names();
  return c;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return splitmix64(splitmix64(seed ^ stream) + trial);
}

bool CampaignReport::pass() const noexcept {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return !p.required || p.failed == 0; });
}

Json CampaignReport::to_json() const {
  Json props = Json::array();
  Json assertions = Json::array();
  for (const auto& p : properties) {
    Json entry{{"name", p.name},     {"required", p.required}, {"passed", p.passed},
               {"failed", p.failed}, {"vacuous", p.vacuous}};
    if (p.counterexample) entry["counterexample"] = *p.counterexample;
    props.push_back(std::move(entry));
    assertions.push_back(
        {{"name", p.name + " failures"}, {"expected", 0}, {"actual", p.failed}, {"pass", p.failed == 0}});
  }
  Json out;
  out["kind"] = "props." + suite;
  out["pass"] = pass();
  out["data"] = {{"suite", suite},         {"seed", seed},         {"generator", kGenerator},
                 {"trials", trials},       {"properties", props},  {"wall_time_ms", wall_time_ms}};
  out["assertions"] = std::move(assertions);
  return out;
}

namespace {

template <typename Body>
CampaignReport timed(const CampaignConfig& config, std::string suite, Body body) {
  auto start = std::chrono::steady_clock::now();
  CampaignReport r;
  r.suite = std::move(suite);
  r.seed = config.seed;
  r.trials = config.trials;
  body(r);
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

CampaignReport run_prop1_suite(const CampaignConfig& config) {
  Catalog cat(config);
  return timed(config, "prop1", [&](CampaignReport& r) {
    auto& props = r.properties;
    const std::size_t n = config.trials;

    props.push_back(run_property(config, "methods agree on catalog subgroups", true, cat.entries.size(),
                                 [&](std::size_t i, Rng&) {
      const CatalogEntry& e = cat.entries[i];
      if (e.group.order() > config.limits.lattice_cap) return vacuous();
      for (const Subgroup& h : all_subgroups(e.group, config.limits)) {
        bool a = is_malnormal(h, VerdictMethod::definition).malnormal;
        bool b = is_malnormal(h, VerdictMethod::free_action).malnormal;
        bool c = is_malnormal(h, VerdictMethod::fixed_points).malnormal;
        if (a != b || b != c) return fail(subgroup_json(e.name, h));
      }
      return pass();
    }));

    props.push_back(run_property(config, "methods agree on random pairs", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = random_subgroup(rng, e.group);
      bool agree = true;
      bool first = is_malnormal(h, VerdictMethod::definition).malnormal;
      for (auto m : {VerdictMethod::definition, VerdictMethod::free_action, VerdictMethod::fixed_points}) {
        FiniteVerdict v = is_malnormal(h, m);
        agree = agree && v.malnormal == first && (v.malnormal || verify_witness(h, *v.witness));
      }
      return check(agree, subgroup_json(e.name, h));
    }));

    props.push_back(run_property(config, "trivial subgroups malnormal", true, cat.entries.size(),
                                 [&](std::size_t i, Rng&) {
      const CatalogEntry& e = cat.entries[i];
      bool ok = true;
      for (const Subgroup& h : {Subgroup::trivial(e.group), Subgroup::whole(e.group)}) {
        for (auto m : {VerdictMethod::definition, VerdictMethod::free_action, VerdictMethod::fixed_points}) {
          FiniteVerdict v = is_malnormal(h, m);
          ok = ok && v.malnormal && v.trivial;
        }
      }
      return check(ok, {{"group", e.name}});
    }));

    auto conditions_hold = [](const SemidirectConditions& c) {
      return c.a == c.d && c.d == c.e && (!c.f || c.a) && (!c.a || c.f);
    };
    auto conditions_json = [](const SemidirectConditions& c) {
      return Json{{"a", c.a}, {"d", c.d}, {"e", c.e}, {"f", c.f}};
    };

    std::vector<const CatalogEntry*> semidirect;
    for (const auto& e : cat.entries) {
      if (e.semidirect) semidirect.push_back(&e);
    }
    props.push_back(run_property(config, "semidirect conditions on catalog", true, semidirect.size(),
                                 [&](std::size_t i, Rng&) {
      const CatalogEntry& e = *semidirect[i];
      SemidirectConditions c = semidirect_conditions(semidirect_product(*e.semidirect));
      return check(conditions_hold(c), {{"group", e.name}, {"conditions", conditions_json(c)}});
    }));

    // Random affine F_p x| C_d, and direct products C_m x C_k.
    props.push_back(run_property(config, "semidirect conditions on random products", true, n,
                                 [&](std::size_t, Rng& rng) {
      Json payload;
      auto make_spec = [&]() -> SemidirectSpec {
        if (rng() % 2 == 0) {
          std::size_t p = pick(rng, std::vector<std::size_t>{3, 5, 7, 11, 13});
          std::vector<std::size_t> divisors;
          for (std::size_t d = 1; d < p; ++d) {
            if ((p - 1) % d == 0) divisors.push_back(d);
          }
          std::size_t d = pick(rng, divisors);
          payload = {{"builtin", "agl1-" + std::to_string(p)}, {"complement_order", d}};
          CatalogEntry base = catalog_entry("agl1-" + std::to_string(p));
          // The order-d subgroup of the multiplicative group.
          ElementId gen = base.complement->generators().front();
          ElementId sub = base.group.pow(gen, static_cast<long long>((p - 1) / d));
          FiniteGroup c = Subgroup::generated_by(base.group, std::span(&sub, 1)).as_group();
          return conjugation_spec(base.kernel->as_group(), c);
        }
        std::size_t m = uniform(rng, 2, 6), k = uniform(rng, 2, 6);
        payload = {{"direct_product", {m, k}}};
        return trivial_action_spec(cyclic_group(m), cyclic_group(k));
      };
      SemidirectSpec spec = make_spec();
      SemidirectConditions c = semidirect_conditions(semidirect_product(spec, config.limits.element_cap));
      payload["conditions"] = conditions_json(c);
      return check(conditions_hold(c), payload);
    }));
  });
}

CampaignReport run_prop2_suite(const CampaignConfig& config) {
  Catalog cat(config);
  return timed(config, "prop2", [&](CampaignReport& r) {
    auto& props = r.properties;
    const std::size_t n = config.trials;

    // Finite regime. Malnormal subgroups come from hulls of random subgroups.
    props.push_back(run_property(config, "normal and malnormal only if trivial (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = random_subgroup(rng, e.group);
      if (!(h.is_normal() && malnormal(h))) return vacuous();
      return check(h.is_trivial() || h.is_whole(), subgroup_json(e.name, h));
    }));

    props.push_back(run_property(config, "conjugates of malnormal are malnormal (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = malnormal_hull(random_subgroup(rng, e.group)).hull;
      ElementId g = random_element(rng, e.group);
      Json payload = subgroup_json(e.name, h);
      payload["conjugator"] = e.group.element(g).to_string();
      return check(malnormal(h.conjugate(g)), payload);
    }));

    props.push_back(run_property(config, "malnormal in malnormal is malnormal (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = malnormal_hull(random_subgroup(rng, e.group)).hull;
      Subgroup k = random_subgroup(rng, h);
      if (!malnormal(relative(k, h))) return vacuous();
      Json payload = subgroup_json(e.name, k);
      payload["intermediate"] = subgroup_json(e.name, h);
      return check(malnormal(k), payload);
    }));

    props.push_back(run_property(config, "intersection with a subgroup (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = malnormal_hull(random_subgroup(rng, e.group)).hull;
      Subgroup s = random_subgroup(rng, e.group);
      Json payload = subgroup_json(e.name, h);
      payload["S"] = subgroup_json(e.name, s);
      return check(malnormal(relative(intersect(h, s), s)), payload);
    }));

    props.push_back(run_property(config, "intersections of malnormal are malnormal (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h1 = malnormal_hull(random_subgroup(rng, e.group)).hull;
      Subgroup h2 = malnormal_hull(random_subgroup(rng, e.group)).hull;
      Json payload = subgroup_json(e.name, h1);
      payload["H2"] = subgroup_json(e.name, h2);
      return check(malnormal(intersect(h1, h2)), payload);
    }));

    props.push_back(run_property(config, "nontrivial centre forbids proper malnormal (finite)", true, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = random_subgroup(rng, e.group);
      if (center(e.group).is_trivial() || h.is_trivial() || h.is_whole()) return vacuous();
      return check(!malnormal(h), subgroup_json(e.name, h));
    }));

    props.push_back(run_property(config, "census empty under nontrivial centre", true,
                                 cat.entries.size(), [&](std::size_t i, Rng&) {
      const CatalogEntry& e = cat.entries[i];
      if (center(e.group).is_trivial() || e.group.order() > config.limits.lattice_cap) return vacuous();
      MalnormalCensus census = malnormal_subgroup_census(e.group, config.limits);
      return check(census.subgroups.empty(), {{"group", e.name}, {"found", census.subgroups.size()}});
    }));

    // Free regime, rank 2 unless stated.
    props.push_back(run_property(config, "normal and malnormal only if trivial (free)", true, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h = stallings(random_free_gens(rng, 2), 2);
      if (!(free_normal(h) && free_malnormal(h))) return vacuous();
      return check(free_trivial_or_whole(h), free_json(h));
    }));

    props.push_back(run_property(config, "conjugates of malnormal are malnormal (free)", true, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h = stallings(random_free_gens(rng, 2), 2);
      FreeWord g = random_word(rng, 2, 0, 6);
      if (!free_malnormal(h)) return vacuous();
      Json payload = free_json(h);
      payload["conjugator"] = g.to_string();
      return check(free_malnormal(conjugate(h, g)), payload);
    }));

    props.push_back(run_property(config, "malnormal in malnormal is malnormal (free)", true, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h = stallings(random_free_gens(rng, 2), 2);
      if (!free_malnormal(h)) return vacuous();
      std::vector<FreeWord> basis = h.basis();
      std::vector<FreeWord> kgens(uniform(rng, 1, 2));
      for (auto& w : kgens) w = random_member(rng, basis);
      StallingsGraph k = stallings(kgens, 2);
      if (!free_malnormal(within(h, k))) return vacuous();
      Json payload = free_json(k);
      payload["intermediate"] = free_json(h);
      return check(free_malnormal(k), payload);
    }));

    props.push_back(run_property(config, "commutator chain into rank 3", true, 1,
                                 [&](std::size_t, Rng&) {
      // <[x,y]> is malnormal in F2, and F2 is a free factor of F3.
      std::vector<FreeWord> xy{FreeWord::generator(0), FreeWord::generator(1)};
      std::vector<FreeWord> comm{FreeWord::parse("a^-1 b^-1 a b")};
      bool in_f2 = free_malnormal(stallings(comm, 2));
      bool f2_in_f3 = free_malnormal(stallings(xy, 3));
      bool in_f3 = free_malnormal(stallings(comm, 3));
      return check(in_f2 && f2_in_f3 && in_f3,
                   {{"in_f2", in_f2}, {"f2_in_f3", f2_in_f3}, {"in_f3", in_f3}});
    }));

    props.push_back(run_property(config, "intersection with a subgroup (free)", true, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h = stallings(random_free_gens(rng, 2), 2);
      StallingsGraph s = stallings(random_free_gens(rng, 2), 2);
      if (!free_malnormal(h)) return vacuous();
      Json payload = free_json(h);
      payload["S"] = free_json(s);
      return check(free_malnormal(within(s, intersect(h, s))), payload);
    }));

    props.push_back(run_property(config, "intersections of malnormal are malnormal (free)", true, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h1 = stallings(random_free_gens(rng, 2), 2);
      StallingsGraph h2 = stallings(random_free_gens(rng, 2), 2);
      if (!free_malnormal(h1) || !free_malnormal(h2)) return vacuous();
      Json payload = free_json(h1);
      payload["H2"] = free_json(h2);
      return check(free_malnormal(intersect(h1, h2)), payload);
    }));

    props.push_back(run_property(config, "factors of free products are malnormal", true, n,
                                 [&](std::size_t, Rng& rng) {
      std::size_t p = uniform(rng, 2, 5), q = uniform(rng, 2, 5);
      Factor side = rng() % 2 ? Factor::A : Factor::B;
      FactorSpec spec = cyclic_factors(p, q);
      FPScan scan = factor_malnormal_scan(spec, side, 4);
      return check(scan.clean(), {{"p", p}, {"q", q}, {"side", side == Factor::A ? "A" : "B"}});
    }));

    // Z = F1 is abelian, so its proper nontrivial subgroups <a^k> fail.
    props.push_back(run_property(config, "proper subgroups of Z are not malnormal", true, n,
                                 [&](std::size_t, Rng& rng) {
      long long k = static_cast<long long>(uniform(rng, 2, 12));
      std::vector<FreeWord> gens{FreeWord::generator(0).pow(k)};
      return check(!free_malnormal(stallings(gens, 1)), {{"rank", 1}, {"k", k}});
    }));
  });
}

CampaignReport run_oracle_battery(const CampaignConfig& config) {
  Catalog cat(config);
  return timed(config, "oracles", [&](CampaignReport& r) {
    auto& props = r.properties;
    const std::size_t n = config.trials;

    props.push_back(run_property(config, "free pullback vs bounded search", false, n,
                                 [&](std::size_t, Rng& rng) {
      StallingsGraph h = stallings(random_free_gens(rng, 2, 2), 2);
      FreeVerdict v = is_malnormal_free(h);
      FreeScan scan = bounded_violation_search(h, config.radius);
      Json payload = free_json(h);
      payload["radius"] = config.radius;
      if (v.malnormal) return check(scan.clean(), payload);
      bool reachable = v.witness->conjugator.length() <= config.radius;
      return check(verify_witness(h, *v.witness) && (!reachable || !scan.clean()), payload);
    }));

    props.push_back(run_property(config, "free trivial subgroup", false, 1, [&](std::size_t, Rng&) {
      StallingsGraph h = stallings(std::vector<FreeWord>{}, 2);
      return check(free_malnormal(h) && bounded_violation_search(h, config.radius).clean(), {});
    }));

    std::vector<std::pair<std::size_t, std::size_t>> grid;
    for (std::size_t p = 2; p <= 5; ++p) {
      for (std::size_t q = 2; q <= 5; ++q) grid.emplace_back(p, q);
    }
    props.push_back(run_property(config, "cyclic normal form vs bounded closure on uv", false, grid.size(),
                                 [&](std::size_t i, Rng&) {
      auto [p, q] = grid[i];
      FactorSpec spec = cyclic_factors(p, q);
      FPWord uv = parse_fp_word(spec, "u v");
      FPVerdict v = cyclic_malnormal(spec, uv);
      FPScan scan = fp_bounded_violation(spec, {uv}, config.radius);
      Json payload{{"p", p}, {"q", q}, {"word", "u v"}};
      return check(v.malnormal == scan.clean() &&
                       (v.malnormal || verify_cyclic_witness(spec, uv, *v.witness)),
                   payload);
    }));

    props.push_back(run_property(config, "cyclic normal form vs bounded closure", false, n,
                                 [&](std::size_t, Rng& rng) {
      auto [p, q] = pick(rng, grid);
      FactorSpec spec = cyclic_factors(p, q);
      FPWord w;
      Factor f = rng() % 2 ? Factor::A : Factor::B;
      for (std::size_t len = 2 * uniform(rng, 1, 2); w.length() < len; f = other(f)) {
        ElementId x = static_cast<ElementId>(uniform(rng, 1, spec.group(f).order() - 1));
        w = fp_mul(spec, w, fp_syllable(spec, f, x));
      }
      FPVerdict v = cyclic_malnormal(spec, w);
      FPScan scan = fp_bounded_violation(spec, {w}, config.radius);
      Json payload{{"p", p}, {"q", q}, {"word", to_string(spec, w)}};
      if (v.malnormal) return check(scan.clean(), payload);
      bool reachable = v.witness->conjugator.length() <= config.radius;
      return check(verify_cyclic_witness(spec, w, *v.witness) && (!reachable || !scan.clean()), payload);
    }));

    props.push_back(run_property(config, "frobenius kernel definitions agree", false, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = pick(rng, cat.entries);
      Subgroup h = random_subgroup(rng, e.group);
      if (h.is_trivial() || h.is_whole()) return vacuous();
      frobenius_kernel(h);  // throws DefinitionsDisagree on mismatch
      return pass();
    }));

    std::vector<const CatalogEntry*> small;
    for (const auto& e : cat.entries) {
      if (e.group.order() <= config.limits.lattice_cap) small.push_back(&e);
    }
    props.push_back(run_property(config, "hull vs lattice intersection", false, n,
                                 [&](std::size_t, Rng& rng) {
      const CatalogEntry& e = *pick(rng, small);
      Subgroup h = random_subgroup(rng, e.group);
      return check(malnormal_hull(h).hull == malnormal_hull_by_lattice(h, config.limits),
                   subgroup_json(e.name, h));
    }));
  });
}

}  // namespace malnorm
