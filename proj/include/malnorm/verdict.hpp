#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace malnorm {

/// Which decision path produced a verdict.
enum class VerdictMethod {
  definition,    // gHg^-1 n H over coset representatives
  free_action,   // H acts freely on G/H minus the basepoint
  fixed_points,  // every g != e fixes at most one coset
  pullback,      // components of the core-graph fiber product
  normal_form,   // cyclic-word arithmetic in a free product
};

std::string_view to_string(VerdictMethod m);

/// g not in H together with x != e in H n gHg^-1.
template <typename Element>
struct ConjugationWitness {
  Element conjugator;
  Element element;
};

template <typename Element>
struct MalnormalVerdict {
  bool malnormal = true;
  std::optional<ConjugationWitness<Element>> witness;
  VerdictMethod method = VerdictMethod::definition;
  /// H is {e} or G; decided without scanning.
  bool trivial = false;
};

/// Outcome of an exhaustive search over a ball of conjugators.
template <typename Element>
struct BoundedScan {
  std::size_t radius = 0;
  std::optional<ConjugationWitness<Element>> violation;

  bool clean() const noexcept { return !violation.has_value(); }
};

}  // namespace malnorm
