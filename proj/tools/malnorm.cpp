#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "malnorm/catalog.hpp"
#include "malnorm/errors.hpp"
#include "malnorm/freeprod.hpp"
#include "malnorm/gallery.hpp"
#include "malnorm/malnormal_finite.hpp"
#include "malnorm/malnormal_free.hpp"
#include "malnorm/propsuite.hpp"
#include "malnorm/report.hpp"
#include "malnorm/stallings.hpp"

using namespace malnorm;

namespace {

struct CliConfig {
  Limits limits;
  std::size_t radius = 6;
  std::uint64_t seed = 0;
  bool human = false;
  bool verify = false;
  std::size_t jobs = 1;
};

// Reports produced by the selected subcommand, in output order.
std::vector<Json> g_reports;

void emit(const Report& r) { g_reports.push_back(r.to_json()); }

void print(const Json& report, bool human) {
  if (!human) {
    std::cout << report.dump() << '\n';
    return;
  }
  std::cout << report["kind"].get<std::string>() << ": " << (report["pass"].get<bool>() ? "PASS" : "FAIL")
            << '\n';
  for (const auto& [key, value] : report["data"].items()) {
    std::cout << "  " << key << " = " << value.dump() << '\n';
  }
  for (const auto& a : report["assertions"]) {
    std::cout << "  [" << (a["pass"].get<bool>() ? "ok" : "FAILED") << "] " << a["name"].get<std::string>()
              << ": expected " << a["expected"].dump() << ", got " << a["actual"].dump() << '\n';
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// ---- finite ----

struct FiniteArgs {
  std::string builtin;
  std::size_t degree = 0;
  std::string group;
  std::string gens;
  std::string method = "all";
};

struct FiniteInput {
  std::string name;
  FiniteGroup group;
  std::optional<Subgroup> subgroup;
};

FiniteInput finite_input(const FiniteArgs& a, const CliConfig& cfg, bool need_subgroup) {
  std::optional<CatalogEntry> entry;
  FiniteInput in{"", FiniteGroup::generate(1, std::vector<Permutation>{}), std::nullopt};
  if (!a.builtin.empty()) {
    entry = catalog_entry(a.builtin);
    if (entry->group.order() > cfg.limits.element_cap) {
      throw CapExceeded("group order exceeds element cap " + std::to_string(cfg.limits.element_cap));
    }
    in.name = entry->name;
    in.group = entry->group;
  } else if (a.degree > 0 && !a.group.empty()) {
    std::vector<Permutation> gens;
    for (const auto& s : split(a.group, ';')) gens.push_back(Permutation::parse(s, a.degree));
    in.name = "custom";
    in.group = FiniteGroup::generate(a.degree, gens, cfg.limits.element_cap);
  } else {
    throw InvalidParameters("give --builtin NAME or --degree N --group \"cycles;...\"");
  }
  if (!a.gens.empty()) {
    std::vector<ElementId> ids;
    for (const auto& s : split(a.gens, ';')) {
      ids.push_back(in.group.index_of(Permutation::parse(s, in.group.degree())));
    }
    in.subgroup = Subgroup::generated_by(in.group, ids);
  } else if (entry && entry->complement) {
    in.subgroup = entry->complement;
  }
  if (need_subgroup && !in.subgroup) {
    throw InvalidParameters("no subgroup: give --gens \"cycles;...\"");
  }
  return in;
}

std::vector<VerdictMethod> finite_methods(std::string m) {
  std::replace(m.begin(), m.end(), '_', '-');
  if (m == "all") return {VerdictMethod::definition, VerdictMethod::free_action, VerdictMethod::fixed_points};
  for (auto v : {VerdictMethod::definition, VerdictMethod::free_action, VerdictMethod::fixed_points}) {
    if (to_string(v) == m) return {v};
  }
  throw InvalidParameters("unknown method '" + m + "'");
}

Json members_json(const Subgroup& h) {
  Json out = Json::array();
  for (ElementId x : h.generators()) out.push_back(h.parent().element(x).to_string());
  return out;
}

Json finite_verdict_json(const FiniteGroup& g, const FiniteVerdict& v) {
  Json j{{"malnormal", v.malnormal}, {"method", to_string(v.method)}, {"trivial", v.trivial}};
  if (v.witness) {
    j["witness"] = {{"conjugator", g.element(v.witness->conjugator).to_string()},
                    {"element", g.element(v.witness->element).to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void finite_check(const FiniteArgs& a, const CliConfig& cfg) {
  FiniteInput in = finite_input(a, cfg, true);
  const Subgroup& h = *in.subgroup;
  Report r("finite.check");
  r.data["group"] = in.name;
  r.data["group_order"] = in.group.order();
  r.data["subgroup_generators"] = members_json(h);
  r.data["subgroup_order"] = h.order();
  std::vector<VerdictMethod> methods = finite_methods(a.method);
  Json verdicts = Json::array();
  std::optional<bool> first;
  bool agree = true;
  for (auto m : methods) {
    FiniteVerdict v = is_malnormal(h, m);
    verdicts.push_back(finite_verdict_json(in.group, v));
    if (!first) first = v.malnormal;
    agree = agree && v.malnormal == *first;
    if (cfg.verify && v.witness) {
      r.expect(std::string("witness verified (") + std::string(to_string(m)) + ")", true,
               verify_witness(h, *v.witness));
    }
  }
  r.data["malnormal"] = *first;
  r.data["verdicts"] = std::move(verdicts);
  if (methods.size() > 1) r.expect("methods agree", true, agree);
  emit(r);
}

void finite_frobenius(const FiniteArgs& a, const CliConfig& cfg) {
  FiniteInput in = finite_input(a, cfg, true);
  const Subgroup& h = *in.subgroup;
  FrobeniusReport fr = frobenius_analyze(h, cfg.limits);
  Report r("finite.frobenius");
  r.data["group"] = in.name;
  r.data["group_order"] = in.group.order();
  r.data["complement_order"] = h.order();
  Json kernel = Json::array();
  for (ElementId x : fr.kernel_elements) kernel.push_back(in.group.element(x).to_string());
  r.data["kernel_order"] = fr.kernel_elements.size();
  r.data["kernel_elements"] = std::move(kernel);
  r.data["kernel_abelian"] = fr.kernel_abelian;
  r.expect("is_frobenius_pair", true, fr.is_frobenius_pair);
  r.expect("kernel_is_subgroup", true, fr.kernel_is_subgroup);
  r.expect("kernel_normal", true, fr.kernel_normal);
  r.expect("kernel_order_equals_index", true, fr.kernel_order_equals_index);
  r.expect("splits", true, fr.splits);
  r.expect("kernel_regular_on_cosets", true, fr.kernel_regular_on_cosets);
  r.expect("kernel_nilpotent", true, fr.kernel_nilpotent);
  r.expect("congruence_holds", true, fr.congruence_holds);
  r.expect("thompson_applies", true, fr.thompson_applies);
  r.expect("fitting_equals_kernel", true, fr.fitting_equals_kernel);
  emit(r);
}

void finite_hull(const FiniteArgs& a, const CliConfig& cfg) {
  FiniteInput in = finite_input(a, cfg, true);
  HullResult hull = malnormal_hull(*in.subgroup);
  Report r("finite.hull");
  r.data["group"] = in.name;
  r.data["subgroup_order"] = in.subgroup->order();
  r.data["hull_order"] = hull.hull.order();
  r.data["hull_generators"] = members_json(hull.hull);
  Json cert = Json::array();
  for (ElementId g : hull.certificate) cert.push_back(in.group.element(g).to_string());
  r.data["certificate"] = std::move(cert);
  r.expect("hull malnormal", true, is_malnormal(hull.hull).malnormal);
  r.expect("hull contains H", true, in.subgroup->is_subgroup_of(hull.hull));
  if (in.group.order() <= cfg.limits.lattice_cap) {
    r.expect("hull equals lattice intersection", true,
             hull.hull == malnormal_hull_by_lattice(*in.subgroup, cfg.limits));
  }
  emit(r);
}

void finite_census(const FiniteArgs& a, const CliConfig& cfg) {
  FiniteInput in = finite_input(a, cfg, false);
  MalnormalCensus c = malnormal_subgroup_census(in.group, cfg.limits);
  Report r("finite.census");
  r.data["group"] = in.name;
  r.data["group_order"] = in.group.order();
  Json subs = Json::array();
  for (const auto& s : c.subgroups) subs.push_back({{"order", s.order()}, {"generators", members_json(s)}});
  r.data["subgroups"] = std::move(subs);
  r.data["classes"] = c.classes;
  r.data["all_conjugate"] = c.all_conjugate;
  r.data["kernels_coincide"] = c.kernels_coincide;
  r.data["kernel_order"] = c.kernel.size();
  if (!c.subgroups.empty()) {
    r.expect("all_conjugate", true, c.all_conjugate);
    r.expect("kernels_coincide", true, c.kernels_coincide);
  }
  emit(r);
}

// ---- free ----

struct FreeArgs {
  std::uint32_t rank = 0;
  std::string gens;
  std::string with;
  std::string dot;
  std::size_t budget = kDefaultClosureBudget;
};

std::uint32_t infer_rank(const FreeArgs& a, const std::vector<std::vector<FreeWord>>& lists) {
  std::uint32_t rank = a.rank;
  for (const auto& list : lists) {
    for (const auto& w : list) rank = std::max(rank, w.generators_used());
  }
  if (a.rank != 0 && rank > a.rank) throw InvalidParameters("word uses a letter outside the rank");
  return std::max<std::uint32_t>(rank, 1);
}

Json words_json(const std::vector<FreeWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

StallingsGraph free_input(const FreeArgs& a, std::vector<FreeWord>& gens) {
  if (a.gens.empty()) throw InvalidParameters("give --gens \"w1,w2,...\"");
  gens = parse_word_list(a.gens);
  return stallings(gens, infer_rank(a, {gens}));
}

Json free_verdict_json(const FreeVerdict& v) {
  Json j{{"malnormal", v.malnormal}, {"method", to_string(v.method)}, {"trivial", v.trivial}};
  if (v.witness) {
    j["witness"] = {{"conjugator", v.witness->conjugator.to_string()},
                    {"element", v.witness->element.to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void free_check(const FreeArgs& a, const CliConfig& cfg) {
  std::vector<FreeWord> gens;
  StallingsGraph h = free_input(a, gens);
  FreeVerdict v = is_malnormal_free(h);
  FreeScan scan = bounded_violation_search(h, cfg.radius);
  Report r("free.check");
  r.data["rank"] = h.alphabet_rank();
  r.data["generators"] = words_json(gens);
  r.data["basis"] = words_json(h.basis());
  r.data["malnormal"] = v.malnormal;
  r.data["verdict"] = free_verdict_json(v);
  r.data["bounded_radius"] = cfg.radius;
  r.data["bounded_violation_found"] = !scan.clean();
  if (v.malnormal) {
    r.expect("bounded search agrees", true, scan.clean());
  } else if (v.witness->conjugator.length() <= cfg.radius) {
    r.expect("bounded search agrees", true, !scan.clean());
  }
  if (cfg.verify && v.witness) r.expect("witness verified", true, verify_witness(h, *v.witness));
  emit(r);
}

void free_closure(const FreeArgs& a, const CliConfig& cfg) {
  std::vector<FreeWord> gens;
  StallingsGraph h = free_input(a, gens);
  FreeHull hull = malnormal_closure_free(h, a.budget);
  Report r("free.closure");
  r.data["rank"] = h.alphabet_rank();
  r.data["generators"] = words_json(gens);
  r.data["hull_basis"] = words_json(hull.hull.basis());
  r.data["certificate"] = words_json(hull.certificate);
  FreeVerdict v = is_malnormal_free(hull.hull);
  r.expect("hull malnormal", true, v.malnormal);
  bool contains = true;
  for (const auto& w : gens) contains = contains && member(hull.hull, w);
  r.expect("hull contains H", true, contains);
  if (cfg.verify) r.expect("hull clean at bounded radius", true, bounded_violation_search(hull.hull, cfg.radius).clean());
  emit(r);
}

void free_hall(const FreeArgs& a, const CliConfig&) {
  std::vector<FreeWord> gens;
  StallingsGraph h = free_input(a, gens);
  HallCompletion hc = hall_completion(h);
  Report r("free.hall");
  std::size_t rank = h.alphabet_rank();
  r.data["rank"] = rank;
  r.data["generators"] = words_json(gens);
  r.data["index"] = hc.index();
  r.data["f0_basis"] = words_json(hc.f0_basis);
  r.data["h_in_f0"] = words_json(hc.h_in_f0);
  r.data["complement_basis"] = words_json(hc.complement_basis);
  r.expect("f0 rank = index (rank - 1) + 1", hc.index() * (rank - 1) + 1, hc.f0_basis.size());
  bool prefix = hc.f0_basis.size() >= h.basis().size() &&
                std::equal(h.basis().begin(), h.basis().end(), hc.f0_basis.begin());
  r.expect("H basis extends to an F0 basis", true, prefix);
  StallingsGraph f0 = stallings(hc.f0_basis, h.alphabet_rank());
  StallingsGraph h_in = stallings(hc.h_in_f0, static_cast<std::uint32_t>(hc.f0_basis.size()));
  r.expect("H malnormal in F0", true, is_malnormal_free(h_in).malnormal);
  r.expect("F0 graph is the covering", true, f0 == hc.covering);
  emit(r);
}

void free_intersect(const FreeArgs& a, const CliConfig&) {
  if (a.with.empty()) throw InvalidParameters("give --with \"w1,w2,...\"");
  std::vector<FreeWord> hg = parse_word_list(a.gens), kg = parse_word_list(a.with);
  std::uint32_t rank = infer_rank(a, {hg, kg});
  StallingsGraph h = stallings(hg, rank), k = stallings(kg, rank);
  StallingsGraph i = intersect(h, k);
  Report r("free.intersect");
  r.data["rank"] = rank;
  r.data["basis"] = words_json(i.basis());
  r.data["subgroup_rank"] = i.subgroup_rank();
  bool ok = true;
  for (const auto& w : i.basis()) ok = ok && member(h, w) && member(k, w);
  r.expect("basis in both", true, ok);
  emit(r);
}

void free_graph(const FreeArgs& a, const CliConfig&) {
  std::vector<FreeWord> gens;
  StallingsGraph h = free_input(a, gens);
  Report r("free.graph");
  r.data["rank"] = h.alphabet_rank();
  r.data["vertices"] = h.vertex_count();
  r.data["edges"] = h.edge_count();
  r.data["basis"] = words_json(h.basis());
  std::string dot = h.to_dot();
  if (a.dot.empty()) {
    r.data["dot"] = dot;
  } else {
    std::ofstream out(a.dot);
    if (!out) throw InvalidParameters("cannot write " + a.dot);
    out << dot;
    r.data["dot_path"] = a.dot;
  }
  bool members = true;
  for (const auto& w : gens) members = members && member(h, w);
  r.expect("generators accepted", true, members);
  emit(r);
}

// ---- fprod ----

struct FprodArgs {
  std::size_t p = 2;
  std::size_t q = 3;
  std::string word;
  std::string side = "A";
};

Factor parse_side(const std::string& s) {
  if (s == "A" || s == "a") return Factor::A;
  if (s == "B" || s == "b") return Factor::B;
  throw InvalidParameters("side must be A or B");
}

Json fp_witness_json(const FactorSpec& spec, const FPVerdict& v) {
  Json j{{"malnormal", v.malnormal}, {"method", to_string(v.method)}, {"trivial", v.trivial}};
  if (v.witness) {
    j["witness"] = {{"conjugator", to_string(spec, v.witness->conjugator)},
                    {"element", to_string(spec, v.witness->element)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void fprod_cyclic(const FprodArgs& a, const CliConfig& cfg) {
  FactorSpec spec = cyclic_factors(a.p, a.q);
  std::string text = a.word.empty() ? "u v" : a.word;
  FPWord w = parse_fp_word(spec, text);
  FPVerdict v = cyclic_malnormal(spec, w);
  Report r("fprod.cyclic");
  r.data["p"] = a.p;
  r.data["q"] = a.q;
  r.data["word"] = to_string(spec, w);
  r.data["malnormal"] = v.malnormal;
  r.data["verdict"] = fp_witness_json(spec, v);
  if (w == parse_fp_word(spec, "u v")) {
    TorusKnotQuotient t = torus_knot_quotient(a.p, a.q);
    r.data["torus_knot"] = {{"coprime", t.coprime}, {"fuchsian_hypothesis", t.fuchsian_hypothesis}};
  }
  FPScan scan = fp_bounded_violation(spec, {w}, cfg.radius);
  r.data["bounded_radius"] = cfg.radius;
  if (v.malnormal) {
    r.expect("bounded closure agrees", true, scan.clean());
  } else if (v.witness->conjugator.length() <= cfg.radius) {
    r.expect("bounded closure agrees", true, !scan.clean());
  }
  if (cfg.verify && v.witness) r.expect("witness verified", true, verify_cyclic_witness(spec, w, *v.witness));
  emit(r);
}

void fprod_factor(const FprodArgs& a, const CliConfig& cfg) {
  FactorSpec spec = cyclic_factors(a.p, a.q);
  Factor side = parse_side(a.side);
  FPScan scan = factor_malnormal_scan(spec, side, cfg.radius);
  Report r("fprod.factor");
  r.data["p"] = a.p;
  r.data["q"] = a.q;
  r.data["side"] = a.side;
  r.data["radius"] = cfg.radius;
  if (scan.violation) {
    r.data["violation"] = {{"conjugator", to_string(spec, scan.violation->conjugator)},
                           {"element", to_string(spec, scan.violation->element)}};
  }
  r.expect("no violation", true, scan.clean());
  emit(r);
}

void fprod_kernel(const FprodArgs& a, const CliConfig&) {
  FactorSpec spec = cyclic_factors(a.p, a.q);
  Factor side = parse_side(a.side);
  Report r("fprod.kernel");
  r.data["p"] = a.p;
  r.data["q"] = a.q;
  r.data["side"] = a.side;
  if (!a.word.empty()) {
    FPWord g = parse_fp_word(spec, a.word);
    r.data["word"] = to_string(spec, g);
    r.data["in_kernel"] = kernel_member(spec, g, side);
  } else {
    KernelTriple t = kernel_triple(spec, side);
    r.data["h1"] = to_string(spec, t.h1);
    r.data["h2"] = to_string(spec, t.h2);
    r.data["k"] = to_string(spec, t.k);
    r.expect("h1 k in N", true, t.h1k_in_kernel);
    r.expect("k^-1 h2 in N", true, t.kinv_h2_in_kernel);
    r.expect("h1 h2 in N", false, t.h1h2_in_kernel);
  }
  emit(r);
}

// ---- props ----

struct PropsArgs {
  std::size_t trials = 1000;
  std::string json;
  std::string suite = "all";
};

void props_run(const PropsArgs& a, const CliConfig& cfg) {
  CampaignConfig c = CampaignConfig::defaults();
  c.seed = cfg.seed;
  c.trials = a.trials;
  c.limits = cfg.limits;
  c.radius = cfg.radius;
  c.jobs = cfg.jobs;
  using Suite = CampaignReport (*)(const CampaignConfig&);
  std::vector<std::pair<std::string, Suite>> suites{
      {"prop1", run_prop1_suite}, {"prop2", run_prop2_suite}, {"oracles", run_oracle_battery}};
  Json all = Json::array();
  bool known = a.suite == "all";
  for (const auto& [name, fn] : suites) {
    if (a.suite != "all" && a.suite != name) continue;
    known = true;
    Json j = fn(c).to_json();
    g_reports.push_back(j);
    all.push_back(j);
  }
  if (!known) throw InvalidParameters("unknown suite '" + a.suite + "'");
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw InvalidParameters("cannot write " + a.json);
    out << all.dump(2) << '\n';
  }
}

int exit_code_for_reports() {
  for (const auto& r : g_reports) {
    if (!r["pass"].get<bool>()) return 1;
  }
  return 0;
}

void print_error(const char* type, const std::exception& e) {
  std::cerr << Json{{"error", type}, {"message", e.what()}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Malnormal subgroup toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->envname("MALNORM_SEED");
  app.add_option("--cap", cfg.limits.element_cap, "Element cap for finite groups")->envname("MALNORM_CAP");
  app.add_option("--lattice-cap", cfg.limits.lattice_cap, "Group order cap for subgroup lattices");
  app.add_option("--radius", cfg.radius, "Radius of bounded searches");
  app.add_option("--jobs", cfg.jobs, "Worker threads for campaigns")->check(CLI::PositiveNumber);
  app.add_flag("--human", cfg.human, "Human-readable output instead of NDJSON");
  app.add_flag("--verify-witness", cfg.verify, "Re-check witnesses through an independent path");

  std::function<void()> action;
  auto bind = [&](CLI::App* sub, auto fn, const auto& args) {
    sub->callback([&, fn] { action = [&, fn] { fn(args, cfg); }; });
  };

  // finite
  FiniteArgs fa;
  CLI::App* finite = app.add_subcommand("finite", "Finite permutation groups");
  finite->require_subcommand(1);
  auto finite_opts = [&](CLI::App* sub, bool subgroup) {
    sub->add_option("--builtin", fa.builtin, "Catalog group (s3, a4, agl1-5, ...)");
    sub->add_option("--degree", fa.degree, "Degree of a custom group");
    sub->add_option("--group", fa.group, "Generators of a custom group, ';'-separated cycles");
    if (subgroup) {
      sub->add_option("--gens", fa.gens, "Subgroup generators, ';'-separated cycles (default: catalog complement)");
      sub->add_option("--method", fa.method, "definition, free-action, fixed-points or all");
    }
  };
  for (auto [name, fn, sg] : {std::tuple{"check", &finite_check, true}, std::tuple{"frobenius", &finite_frobenius, true},
                              std::tuple{"hull", &finite_hull, true}, std::tuple{"census", &finite_census, false}}) {
    CLI::App* sub = finite->add_subcommand(name);
    finite_opts(sub, sg);
    bind(sub, fn, fa);
  }

  // free
  FreeArgs fr;
  CLI::App* free = app.add_subcommand("free", "Subgroups of free groups");
  free->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"check", &free_check}, std::pair{"closure", &free_closure},
                          std::pair{"hall", &free_hall}, std::pair{"intersect", &free_intersect},
                          std::pair{"graph", &free_graph}}) {
    CLI::App* sub = free->add_subcommand(name);
    sub->add_option("--rank", fr.rank, "Rank of the free group (default: letters used, at least 1)");
    sub->add_option("--gens", fr.gens, "Comma-separated words, e.g. \"a^2,b a b^-1\"")->required();
    if (std::string(name) == "intersect") sub->add_option("--with", fr.with, "Second subgroup")->required();
    if (std::string(name) == "graph") sub->add_option("--dot", fr.dot, "Write DOT to this file");
    if (std::string(name) == "closure") sub->add_option("--budget", fr.budget, "Maximum number of joins");
    bind(sub, fn, fr);
  }

  // fprod
  FprodArgs fp;
  CLI::App* fprod = app.add_subcommand("fprod", "Free products of cyclic groups C_p * C_q");
  fprod->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"cyclic", &fprod_cyclic}, std::pair{"factor", &fprod_factor},
                          std::pair{"kernel", &fprod_kernel}}) {
    CLI::App* sub = fprod->add_subcommand(name);
    sub->add_option("--p", fp.p, "Order of u")->check(CLI::Range(2, 1000));
    sub->add_option("--q", fp.q, "Order of v")->check(CLI::Range(2, 1000));
    if (std::string(name) != "factor") sub->add_option("--word", fp.word, "Word in u, v, e.g. \"u v^2\"");
    if (std::string(name) != "cyclic") sub->add_option("--side", fp.side, "Factor A (u) or B (v)");
    bind(sub, fn, fp);
  }

  // gallery
  std::size_t gp = 7, gq = 5, gn = 3;
  std::string gs = "a5";
  bool whole = false;
  CLI::App* gallery = app.add_subcommand("gallery", "Exact reproductions of worked examples");
  gallery->require_subcommand(1);
  gallery->add_subcommand("psl2z")->callback([&] {
    action = [&] {
      emit(psl2z_report(12, cfg.seed));
      emit(psl2z_no_splitting_report());
    };
  });
  gallery->add_subcommand("picard")->callback([&] { action = [] { emit(picard_identities()); }; });
  CLI::App* affine = gallery->add_subcommand("affine");
  affine->add_option("--p", gp, "Prime");
  affine->callback([&] { action = [&] { emit(affine_report(gp)); }; });
  CLI::App* pgl2 = gallery->add_subcommand("pgl2");
  pgl2->add_option("--q", gq, "Prime in [5, 13]");
  pgl2->callback([&] { action = [&] { emit(pgl2_borel_analysis(gq)); }; });
  CLI::App* lamp = gallery->add_subcommand("lamplighter");
  lamp->add_option("--s", gs, "Catalog group S");
  lamp->callback([&] {
    action = [&] { emit(lamplighter_checks(catalog_entry(gs).group, gs, cfg.seed)); };
  });
  CLI::App* xi = gallery->add_subcommand("prop2xi");
  xi->add_option("--n", gn, "Modulus");
  xi->add_flag("--whole", whole, "Use H = F2");
  xi->callback([&] { action = [&] { emit(prop2xi_demo(gn, whole)); }; });

  // props
  PropsArgs pa;
  CLI::App* props = app.add_subcommand("props", "Seeded property campaigns");
  props->require_subcommand(1);
  CLI::App* run = props->add_subcommand("run");
  run->add_option("--trials", pa.trials, "Trials per property");
  run->add_option("--json", pa.json, "Write the full campaign report here");
  run->add_option("--suite", pa.suite, "prop1, prop2, oracles or all");
  bind(run, &props_run, pa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
  } catch (const InputError& e) {
    print_error("input", e);
    return 2;
  } catch (const CapExceeded& e) {
    print_error("cap_exceeded", e);
    return 3;
  } catch (const AssertionFailure& e) {
    print_error("assertion", e);
    return 1;
  }
  for (const auto& r : g_reports) print(r, cfg.human);
  return exit_code_for_reports();
}
