#include "chern/search.hpp"

#include <omp.h>

#include <algorithm>

#include "chern/fiber_sum.hpp"

namespace chern {

namespace {

void require_at_least(const IntRange& range, Integer min, const char* what) {
  if (!range.empty() && range.lo < min)
    throw ParameterError(std::string(what) + " range must start at " + std::to_string(min) +
                         " or above");
}

struct PreparedSearch {
  std::vector<CatalogEntry> candidates;
  std::vector<BlockData> data;
};

PreparedSearch prepare(const SearchBounds& bounds) {
  PreparedSearch p;
  p.candidates = enumerate_candidates(bounds);
  p.data.reserve(p.candidates.size());
  for (const auto& c : p.candidates) p.data.push_back(block_data(c.block));
  return p;
}

// Matches of candidate i against candidates j >= i, in j order.
void collect_row(const PreparedSearch& p, std::size_t i, const TargetTriple& target,
                 std::vector<Realization>& out) {
  for (std::size_t j = i; j < p.data.size(); ++j) {
    if (closed_form_triple(p.data[i], p.data[j]) != target) continue;
    const auto& a = p.candidates[i];
    const auto& b = p.candidates[j];
    // Full recomputation through the validating entry point before emission.
    const auto triple = halic_construction(a.block, b.block);
    if (triple == target) out.push_back({a, b, triple});
  }
}

}  // namespace

SearchBounds default_search_bounds() {
  SearchBounds b;
  b.elliptic_m = IntRange{1, 5};
  b.ruled_spheres = true;
  b.knot_k = IntRange{1, 3};
  b.knot_genus = IntRange{0, 2};
  return b;
}

std::vector<CatalogEntry> enumerate_candidates(const SearchBounds& bounds) {
  std::vector<CatalogEntry> out;
  if (bounds.elliptic_m) {
    require_at_least(*bounds.elliptic_m, 1, "elliptic m");
    for (Integer m = bounds.elliptic_m->lo; m <= bounds.elliptic_m->hi; ++m)
      out.push_back(elliptic_entry(m));
  }
  if (bounds.ruled_spheres) out.push_back(ruled_spheres_entry());
  if (bounds.knot_k) {
    const IntRange genus = bounds.knot_genus.value_or(IntRange{0, 0});
    require_at_least(*bounds.knot_k, 1, "knot surgery k");
    require_at_least(genus, 0, "knot genus");
    for (Integer k = bounds.knot_k->lo; k <= bounds.knot_k->hi; ++k)
      for (Integer g = genus.lo; g <= genus.hi; ++g) out.push_back(knot_surgered_entry(k, g));
  }
  if (bounds.generic) {
    const auto& grid = *bounds.generic;
    require_at_least(grid.fiber_genus, 0, "generic fiber genus");
    for (Integer chi = grid.chi_h.lo; chi <= grid.chi_h.hi; ++chi)
      for (Integer c1 = grid.c1_sq.lo; c1 <= grid.c1_sq.hi; ++c1)
        for (Integer g = grid.fiber_genus.lo; g <= grid.fiber_genus.hi; ++g) {
          const Integer n = 12 * chi - c1 - 2 * (2 - 2 * g);
          if (n < 0) continue;
          BlockFamily family{FamilyId::generic,
                             {{"chi_h", chi},
                              {"c1_sq", c1},
                              {"fiber_genus", g},
                              {"singular_fibers", n},
                              {"simply_connected", 1}}};
          auto entry = make_entry(family);
          if (validate_block(entry.block).empty()) out.push_back(std::move(entry));
        }
  }
  for (const auto& e : bounds.extra)
    if (validate_block(e.block).empty()) out.push_back(e);

  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult search_realizations_serial(const TargetTriple& target, const SearchBounds& bounds) {
  SearchResult result;
  result.obstruction = construction_obstruction(target);
  const auto prepared = prepare(bounds);
  result.candidates = prepared.candidates.size();
  if (result.obstruction) return result;
  for (std::size_t i = 0; i < prepared.data.size(); ++i)
    collect_row(prepared, i, target, result.realizations);
  return result;
}

SearchResult search_realizations(const TargetTriple& target, const SearchBounds& bounds,
                                 const SearchOptions& options) {
  SearchResult result;
  result.obstruction = construction_obstruction(target);
  const auto prepared = prepare(bounds);
  result.candidates = prepared.candidates.size();
  if (result.obstruction) return result;

  const auto rows = static_cast<std::int64_t>(prepared.data.size());
  std::vector<std::vector<Realization>> per_row(prepared.data.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t i = 0; i < rows; ++i)
    collect_row(prepared, static_cast<std::size_t>(i), target, per_row[static_cast<std::size_t>(i)]);

  for (auto& row : per_row)
    std::move(row.begin(), row.end(), std::back_inserter(result.realizations));
  return result;
}

}  // namespace chern
