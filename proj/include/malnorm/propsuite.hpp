#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malnorm/finite_group.hpp"
#include "malnorm/report.hpp"

namespace malnorm {

struct CampaignConfig {
  std::uint64_t seed = 0;
  /// Random trials per property.
  std::size_t trials = 1000;
  Limits limits;
  /// Catalog names sampled for random (G, H) pairs.
  std::vector<std::string> catalog;
  /// Radius of the bounded oracles.
  std::size_t radius = 6;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;

  /// Defaults with the full built-in catalog.
  static CampaignConfig defaults();
};

struct PropertyResult {
  std::string name;
  bool required = true;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Trials whose hypothesis did not hold.
  std::size_t vacuous = 0;
  /// First failing trial, with enough data to rerun it.
  std::optional<Json> counterexample;
};

struct CampaignReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyResult> properties;
  double wall_time_ms = 0;

  static constexpr const char* kGenerator = "mt19937_64";

  /// Every required property has zero failures.
  bool pass() const noexcept;
  /// Report-shaped JSON: one assertion per property.
  Json to_json() const;
};

/// Per-trial seed from (seed, stream, trial) by splitmix64 mixing.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Agreement of the finite decision methods, and the semidirect conditions.
CampaignReport run_prop1_suite(const CampaignConfig& config);
/// Closure properties of malnormal subgroups, finite and free.
CampaignReport run_prop2_suite(const CampaignConfig& config);
/// Decision procedures against their bounded or brute-force counterparts.
CampaignReport run_oracle_battery(const CampaignConfig& config);

}  // namespace malnorm
