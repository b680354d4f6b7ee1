#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chern/chern_triple.hpp"
#include "chern/invariants.hpp"

namespace chern {

/// A requested (c3, c1^3, c1 c2); divisibility is checked, not enforced.
using TargetTriple = ChernTriple;

struct DivisibilityReport {
  bool c3_even = false;
  bool c1cubed_even = false;
  bool c1c2_mod24 = false;
  bool all_pass = false;
};

/// Necessary conditions on the Chern numbers of any symplectic 6-manifold:
/// c3 and c1^3 even, c1 c2 divisible by 24.
DivisibilityReport halic_divisibility_check(const ChernTriple& t) noexcept;

enum class ObstructionKind {
  c3_odd,
  c1cubed_odd,
  c1c2_not_divisible_by_24,
  c1cubed_not_divisible_by_6,  // specific to the fiber-sum-of-products construction
};

std::string to_string(ObstructionKind kind);

struct Obstruction {
  std::vector<ObstructionKind> reasons;

  std::string message() const;
};

/// Reasons why the target cannot come from the product fiber-sum
/// construction, or nullopt when none of the necessary conditions fail.
std::optional<Obstruction> construction_obstruction(const TargetTriple& t);

enum class RegionLabel {
  negative_c1sq_unknown,
  many_basic_classes,
  one_basic_class,
  general_type,
  above_bmy_unknown,
};

std::string to_string(RegionLabel label);

/// The boundary lines of the (chi_h, c1^2) geography chart.
enum class BoundaryLine {
  bmy,             // c1^2 = 9 chi_h
  zero_signature,  // c1^2 = 8 chi_h
  noether,         // c1^2 = 2 chi_h - 6
  chi_minus_three, // c1^2 = chi_h - 3
  elliptic_axis,   // c1^2 = 0
};

std::string to_string(BoundaryLine line);

struct GeographyRegion {
  Integer chi_h = 0;
  Integer c1_sq = 0;
  // Every region whose closed inequalities hold, in RegionLabel order.
  std::vector<RegionLabel> labels;
  // Lines of the chart passing through the point.
  std::vector<BoundaryLine> lines;
  bool on_elliptic_axis = false;
  int signature_sign = 0;
  // chi_h - c1^2 - 2, present whenever many_basic_classes is among the labels.
  std::optional<Integer> basic_class_count;

  bool has(RegionLabel label) const;
  bool on(BoundaryLine line) const;
};

GeographyRegion classify_geography_point(Integer chi_h, Integer c1_sq);

}  // namespace chern
