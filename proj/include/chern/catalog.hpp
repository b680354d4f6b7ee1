#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chern/invariants.hpp"

namespace chern {

enum class FamilyId { elliptic, ruled_spheres, knot_surgered_elliptic, generic };

std::string to_string(FamilyId id);
// Accepts the canonical names plus the short alias "knot-elliptic".
FamilyId parse_family(std::string_view name);

/// Family identity plus integer parameters:
///   elliptic:               m
///   ruled-spheres:          (none)
///   knot-surgered-elliptic: k, knot_genus
///   generic:                chi_h, c1_sq, fiber_genus, singular_fibers, simply_connected (0/1)
struct BlockFamily {
  FamilyId id = FamilyId::generic;
  std::map<std::string, Integer> params;

  friend bool operator==(const BlockFamily&, const BlockFamily&) = default;
};

/// A block together with the family record it was built from.
struct CatalogEntry {
  BlockFamily family;
  LefschetzBlock block;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Canonical order: family, then parameters in the order listed above, then name.
bool canonical_less(const CatalogEntry& a, const CatalogEntry& b);

/// E(m): chi_h = m, c1^2 = 0, torus fibers, 12m fishtails. Throws ParameterError for m < 1.
LefschetzBlock elliptic_surface(Integer m);

/// S^2 x S^2 fibered by spheres with no singular fibers.
LefschetzBlock ruled_spheres();

/// E(k)_K for a fibered knot K of genus knot_genus: homeomorphic to E(k),
/// fiber genus 2 knot_genus + k - 1. The singular-fiber count is derived
/// from the Euler identity.
LefschetzBlock knot_surgered_elliptic(Integer k, Integer knot_genus);

struct CheckedBlock {
  LefschetzBlock block;
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
};

/// User-supplied block; violations are returned alongside, never thrown.
/// Negative genus or fiber count still throws ParameterError.
CheckedBlock generic_block(Integer chi_h, Integer c1_sq, Integer fiber_genus,
                           Integer singular_fibers, bool simply_connected,
                           std::string name = {});

/// Builds the block for a family record. Throws ParameterError on missing or
/// out-of-range parameters. Generic records may yield an invalid block; run
/// validate_block() on the result.
CatalogEntry make_entry(const BlockFamily& family, std::string name = {});

CatalogEntry elliptic_entry(Integer m);
CatalogEntry ruled_spheres_entry();
CatalogEntry knot_surgered_entry(Integer k, Integer knot_genus);

/// Built-in catalog used when no catalog file is supplied.
std::vector<CatalogEntry> default_catalog();

}  // namespace chern
