#pragma once

// JSON schemas for blocks, triples, catalogs, search bounds and reports.
// Derived block invariants (sigma, euler, c2) are written for reading
// convenience and recomputed from (chi_h, c1_sq) on load.

#include "json.hpp"

#include <vector>

#include "chern/catalog.hpp"
#include "chern/chern_triple.hpp"
#include "chern/geography.hpp"
#include "chern/invariants.hpp"
#include "chern/search.hpp"

namespace chern {

using Json = nlohmann::json;

Json to_json(const FourManifoldInvariants& inv);
Json to_json(const LefschetzBlock& block);
Json to_json(const ChernTriple& t);
Json to_json(const BlockFamily& family);
Json to_json(const CatalogEntry& entry);
Json to_json(const std::vector<Violation>& violations);
Json to_json(const DivisibilityReport& report);
Json to_json(const Obstruction& obstruction);
Json to_json(const GeographyRegion& region);
Json to_json(const Realization& r);
Json to_json(const SearchResult& result);

/// Throws ParameterError on missing or mistyped fields.
LefschetzBlock block_from_json(const Json& j);
ChernTriple triple_from_json(const Json& j);
BlockFamily family_from_json(const Json& j);

/// A catalog file is an array whose items are either family records
/// {"family": ..., "params": {...}, "name"?: ...} or plain block objects.
std::vector<CatalogEntry> catalog_from_json(const Json& j);
Json catalog_to_json(const std::vector<CatalogEntry>& entries);

/// {"elliptic": {"m": [lo, hi]}, "ruled_spheres": bool,
///  "knot_surgered_elliptic": {"k": [lo, hi], "knot_genus": [lo, hi]},
///  "generic": {"chi_h": [lo, hi], "c1_sq": [lo, hi], "fiber_genus": [lo, hi]}}
/// Absent keys disable the family.
SearchBounds search_bounds_from_json(const Json& j);
Json to_json(const SearchBounds& bounds);

}  // namespace chern
