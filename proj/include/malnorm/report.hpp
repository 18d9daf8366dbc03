#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace malnorm {

using Json = nlohmann::ordered_json;

struct Assertion {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

/// Structured result of a check: free-form data plus named assertions.
struct Report {
  Report() = default;
  explicit Report(std::string k) : kind(std::move(k)) {}

  std::string kind;
  Json data = Json::object();
  std::vector<Assertion> assertions;

  /// Records an assertion that `actual` equals `expected`.
  void expect(std::string name, Json expected, Json actual);
  bool all_pass() const noexcept;
  Json to_json() const;
};

}  // namespace malnorm
