#include "malnorm/report.hpp"

#include <algorithm>

namespace malnorm {

void Report::expect(std::string name, Json expected, Json actual) {
  bool pass = expected == actual;
  assertions.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

bool Report::all_pass() const noexcept {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

Json Report::to_json() const {
  Json out;
  out["kind"] = kind;
  out["pass"] = all_pass();
  out["data"] = data;
  Json list = Json::array();
  for (const auto& a : assertions) {
    list.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
  }
  out["assertions"] = std::move(list);
  return out;
}

}  // namespace malnorm
