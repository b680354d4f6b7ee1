#pragma once

// Exhaustive search for pairs of catalog blocks whose fiber-sum construction
// realizes a target Chern triple. search_realizations() splits the candidate
// pairs across OpenMP threads; search_realizations_serial() is the reference
// loop it must agree with exactly.

#include <optional>
#include <vector>

#include "chern/catalog.hpp"
#include "chern/chern_triple.hpp"
#include "chern/geography.hpp"

namespace chern {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
  Integer lo = 0;
  Integer hi = -1;

  bool empty() const noexcept { return lo > hi; }
  Integer size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  bool contains(Integer v) const noexcept { return lo <= v && v <= hi; }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct GenericGrid {
  IntRange chi_h;
  IntRange c1_sq;
  IntRange fiber_genus;

  friend bool operator==(const GenericGrid&, const GenericGrid&) = default;
};

struct SearchBounds {
  std::optional<IntRange> elliptic_m;
  bool ruled_spheres = false;
  std::optional<IntRange> knot_k;
  std::optional<IntRange> knot_genus;  // used together with knot_k
  // Grid points become simply connected generic blocks with n derived from
  // the Euler identity; points with n < 0 or n in (0, 2g] are skipped.
  std::optional<GenericGrid> generic;
  // Additional explicit blocks (e.g. from a catalog file); invalid ones are skipped.
  std::vector<CatalogEntry> extra;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Default bounds: E(1..5), S^2 x S^2 and E(k)_K with k in 1..3, knot genus 0..2.
SearchBounds default_search_bounds();

/// Valid candidate blocks within bounds, sorted by canonical_less, duplicates removed.
std::vector<CatalogEntry> enumerate_candidates(const SearchBounds& bounds);

struct Realization {
  CatalogEntry first;
  CatalogEntry second;
  ChernTriple triple;
};

struct SearchOptions {
  int threads = 0;  // 0: OpenMP default
};

struct SearchResult {
  std::optional<Obstruction> obstruction;
  std::vector<Realization> realizations;
  std::size_t candidates = 0;
};

/// Unordered pairs {first, second} (first <= second canonically, equal
/// allowed) with halic_construction(first, second) == target. Output order
/// is canonical and independent of the thread count. Empty with an
/// obstruction when construction_obstruction() fires.
SearchResult search_realizations(const TargetTriple& target, const SearchBounds& bounds,
                                 const SearchOptions& options = {});

SearchResult search_realizations_serial(const TargetTriple& target, const SearchBounds& bounds);

}  // namespace chern
