#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malnorm/finite_group.hpp"
#include "malnorm/semidirect.hpp"

namespace malnorm {

// Standard permutation groups.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
/// Symmetries of the n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n);
/// Q8 in its regular representation on 8 points.
FiniteGroup quaternion_group();
/// C_m x C_n on m + n points.
FiniteGroup direct_product_cyclic(std::size_t m, std::size_t n);

bool is_prime(std::size_t n);
/// Smallest generator of the multiplicative group of F_p.
std::size_t primitive_root(std::size_t p);

/// A named group, optionally with a distinguished complement/kernel pair.
struct CatalogEntry {
  std::string name;
  std::string description;
  FiniteGroup group;
  std::optional<Subgroup> complement;
  std::optional<Subgroup> kernel;
  std::optional<SemidirectSpec> semidirect;
  /// The complement is a malnormal subgroup distinct from {e} and G.
  bool frobenius = false;
};

/// Names of the fixed built-in catalog, in catalog order.
std::vector<std::string> catalog_names();
std::vector<CatalogEntry> catalog();

/// Looks up a catalog name (case-insensitive). Parametric names cN, sN, aN,
/// dN and agl1-P are accepted as well. Throws InputError on unknown names.
CatalogEntry catalog_entry(std::string_view name);

}  // namespace malnorm
