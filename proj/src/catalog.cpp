#include "chern/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace chern {

namespace {

Integer param(const BlockFamily& family, const std::string& key) {
  auto it = family.params.find(key);
  if (it == family.params.end())
    throw ParameterError(to_string(family.id) + ": missing parameter '" + key + "'");
  return it->second;
}

void require_only(const BlockFamily& family, std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : family.params)
    if (!keys.contains(key))
      throw ParameterError(to_string(family.id) + ": unknown parameter '" + key + "'");
}

std::vector<Integer> sort_key(const BlockFamily& family) {
  auto get = [&](const char* key) {
    auto it = family.params.find(key);
    return it == family.params.end() ? Integer{0} : it->second;
  };
  switch (family.id) {
    case FamilyId::elliptic: return {get("m")};
    case FamilyId::ruled_spheres: return {};
    case FamilyId::knot_surgered_elliptic: return {get("k"), get("knot_genus")};
    case FamilyId::generic:
      return {get("chi_h"), get("c1_sq"), get("fiber_genus"), get("singular_fibers"),
              get("simply_connected")};
  }
  return {};
}

}  // namespace

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::elliptic: return "elliptic";
    case FamilyId::ruled_spheres: return "ruled-spheres";
    case FamilyId::knot_surgered_elliptic: return "knot-surgered-elliptic";
    case FamilyId::generic: return "generic";
  }
  return "unknown";
}

FamilyId parse_family(std::string_view name) {
  if (name == "elliptic") return FamilyId::elliptic;
  if (name == "ruled-spheres") return FamilyId::ruled_spheres;
  if (name == "knot-surgered-elliptic" || name == "knot-elliptic")
    return FamilyId::knot_surgered_elliptic;
  if (name == "generic") return FamilyId::generic;
  throw ParameterError("unknown block family '" + std::string(name) + "'");
}

bool canonical_less(const CatalogEntry& a, const CatalogEntry& b) {
  return std::tuple(static_cast<int>(a.family.id), sort_key(a.family), a.block.name()) <
         std::tuple(static_cast<int>(b.family.id), sort_key(b.family), b.block.name());
}

LefschetzBlock elliptic_surface(Integer m) {
  if (m < 1) throw ParameterError("elliptic: m must be at least 1, got " + std::to_string(m));
  return LefschetzBlock("E(" + std::to_string(m) + ")", m, 0, 1, 12 * m, true);
}

LefschetzBlock ruled_spheres() { return LefschetzBlock("S2xS2", 1, 8, 0, 0, true); }

LefschetzBlock knot_surgered_elliptic(Integer k, Integer knot_genus) {
  if (k < 1)
    throw ParameterError("knot-surgered-elliptic: k must be at least 1, got " +
                         std::to_string(k));
  if (knot_genus < 0)
    throw ParameterError("knot-surgered-elliptic: knot genus must be non-negative, got " +
                         std::to_string(knot_genus));
  const Integer fiber_genus = 2 * knot_genus + k - 1;
  const Integer euler = 12 * k;
  const Integer singular = euler - 2 * (2 - 2 * fiber_genus);
  std::ostringstream name;
  name << "E(" << k << ")_K[g=" << knot_genus << "]";
  return LefschetzBlock(name.str(), k, 0, fiber_genus, singular, true);
}

CheckedBlock generic_block(Integer chi_h, Integer c1_sq, Integer fiber_genus,
                           Integer singular_fibers, bool simply_connected, std::string name) {
  if (name.empty()) {
    std::ostringstream os;
    os << "X(chi=" << chi_h << ",c1sq=" << c1_sq << ",g=" << fiber_genus
       << ",n=" << singular_fibers << ")";
    name = os.str();
  }
  LefschetzBlock block(std::move(name), chi_h, c1_sq, fiber_genus, singular_fibers,
                       simply_connected);
  auto violations = validate_block(block);
  return {std::move(block), std::move(violations)};
}

CatalogEntry make_entry(const BlockFamily& family, std::string name) {
  auto named = [&](LefschetzBlock block) {
    if (name.empty()) return block;
    return LefschetzBlock(std::move(name), block.invariants(), block.fiber_genus(),
                          block.singular_fibers(), block.simply_connected());
  };
  switch (family.id) {
    case FamilyId::elliptic:
      require_only(family, {"m"});
      return {family, named(elliptic_surface(param(family, "m")))};
    case FamilyId::ruled_spheres:
      require_only(family, {});
      return {family, named(ruled_spheres())};
    case FamilyId::knot_surgered_elliptic:
      require_only(family, {"k", "knot_genus"});
      return {family,
              named(knot_surgered_elliptic(param(family, "k"), param(family, "knot_genus")))};
    case FamilyId::generic: {
      require_only(family,
                   {"chi_h", "c1_sq", "fiber_genus", "singular_fibers", "simply_connected"});
      auto sc = family.params.find("simply_connected");
      const bool simply_connected = sc == family.params.end() || sc->second != 0;
      BlockFamily normalized = family;
      normalized.params["simply_connected"] = simply_connected ? 1 : 0;
      auto checked = generic_block(param(family, "chi_h"), param(family, "c1_sq"),
                                   param(family, "fiber_genus"),
                                   param(family, "singular_fibers"), simply_connected,
                                   std::move(name));
      return {std::move(normalized), std::move(checked.block)};
    }
  }
  throw ParameterError("unknown block family");
}

CatalogEntry elliptic_entry(Integer m) { return make_entry({FamilyId::elliptic, {{"m", m}}}); }

CatalogEntry ruled_spheres_entry() { return make_entry({FamilyId::ruled_spheres, {}}); }

CatalogEntry knot_surgered_entry(Integer k, Integer knot_genus) {
  return make_entry({FamilyId::knot_surgered_elliptic, {{"k", k}, {"knot_genus", knot_genus}}});
}

std::vector<CatalogEntry> default_catalog() {
  return {elliptic_entry(1),          elliptic_entry(2),          elliptic_entry(3),
          ruled_spheres_entry(),      knot_surgered_entry(1, 1),  knot_surgered_entry(2, 0),
          knot_surgered_entry(2, 1)};
}

}  // namespace chern
