#pragma once

// Grid sweep comparing the closed-form fiber-sum triple with the symbolic
// oracle and checking the divisibility conditions on every result. The
// parallel kernel and the serial reference return identical reports.

#include <cstdint>
#include <optional>

#include "chern/chern_triple.hpp"
#include "chern/fiber_sum.hpp"
#include "chern/search.hpp"

namespace chern {

/// Every block (g, chi_h, c1^2) in the box is paired with every block of
/// the same box, as an ordered pair.
struct SweepGrid {
  IntRange fiber_genus;
  IntRange chi_h;
  IntRange c1_sq;

  std::uint64_t block_count() const noexcept;
  std::uint64_t pair_count() const noexcept { return block_count() * block_count(); }
  BlockData block_at(std::uint64_t index) const noexcept;
};

struct SweepFailure {
  BlockData first;
  BlockData second;
  ChernTriple closed_form;
  ChernTriple oracle;
};

struct SweepReport {
  std::uint64_t pairs = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t divisibility_failures = 0;  // Halic conditions
  std::uint64_t mod6_failures = 0;          // c1^3 not divisible by 6
  // Lowest-index failing pair of each kind, if any.
  std::optional<SweepFailure> first_mismatch;
  std::optional<SweepFailure> first_divisibility_failure;

  bool clean() const noexcept {
    return oracle_mismatches == 0 && divisibility_failures == 0 && mod6_failures == 0;
  }
};

SweepReport sweep_grid(const SweepGrid& grid, int threads = 0);
SweepReport sweep_grid_serial(const SweepGrid& grid);

}  // namespace chern
