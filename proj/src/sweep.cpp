#include "chern/sweep.hpp"

#include <omp.h>

#include <vector>

#include "chern/geography.hpp"

namespace chern {

namespace {

struct RowReport {
  std::uint64_t mismatches = 0;
  std::uint64_t divisibility = 0;
  std::uint64_t mod6 = 0;
  std::optional<SweepFailure> first_mismatch;
  std::optional<SweepFailure> first_divisibility;
};

RowReport sweep_row(const std::vector<BlockData>& blocks, std::size_t i) {
  RowReport row;
  const auto& a = blocks[i];
  for (const auto& b : blocks) {
    const auto closed = closed_form_triple(a, b);
    const auto oracle = oracle_triple(a, b);
    if (closed != oracle) {
      ++row.mismatches;
      if (!row.first_mismatch) row.first_mismatch = SweepFailure{a, b, closed, oracle};
    }
    const bool halic_ok = halic_divisibility_check(closed).all_pass;
    const bool mod6_ok = closed.c1_cubed % 6 == 0;
    if (!halic_ok) ++row.divisibility;
    if (!mod6_ok) ++row.mod6;
    if ((!halic_ok || !mod6_ok) && !row.first_divisibility)
      row.first_divisibility = SweepFailure{a, b, closed, oracle};
  }
  return row;
}

std::vector<BlockData> grid_blocks(const SweepGrid& grid) {
  std::vector<BlockData> blocks(grid.block_count());
  for (std::uint64_t i = 0; i < blocks.size(); ++i) blocks[i] = grid.block_at(i);
  return blocks;
}

SweepReport merge(const std::vector<RowReport>& rows, std::uint64_t pairs) {
  SweepReport report;
  report.pairs = pairs;
  for (const auto& row : rows) {
    report.oracle_mismatches += row.mismatches;
    report.divisibility_failures += row.divisibility;
    report.mod6_failures += row.mod6;
    if (!report.first_mismatch) report.first_mismatch = row.first_mismatch;
    if (!report.first_divisibility_failure)
      report.first_divisibility_failure = row.first_divisibility;
  }
  return report;
}

}  // namespace

std::uint64_t SweepGrid::block_count() const noexcept {
  return static_cast<std::uint64_t>(fiber_genus.size() * chi_h.size() * c1_sq.size());
}

BlockData SweepGrid::block_at(std::uint64_t index) const noexcept {
  const auto nc = static_cast<std::uint64_t>(c1_sq.size());
  const auto nx = static_cast<std::uint64_t>(chi_h.size());
  const auto c = static_cast<Integer>(index % nc);
  const auto x = static_cast<Integer>((index / nc) % nx);
  const auto g = static_cast<Integer>(index / (nc * nx));
  return {chi_h.lo + x, c1_sq.lo + c, fiber_genus.lo + g};
}

SweepReport sweep_grid_serial(const SweepGrid& grid) {
  const auto blocks = grid_blocks(grid);
  std::vector<RowReport> rows;
  rows.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) rows.push_back(sweep_row(blocks, i));
  return merge(rows, grid.pair_count());
}

SweepReport sweep_grid(const SweepGrid& grid, int threads) {
  const auto blocks = grid_blocks(grid);
  std::vector<RowReport> rows(blocks.size());
  const auto n = static_cast<std::int64_t>(blocks.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (std::int64_t i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = sweep_row(blocks, static_cast<std::size_t>(i));

  return merge(rows, grid.pair_count());
}

}  // namespace chern
