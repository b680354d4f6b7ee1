#include "chern/geography.hpp"

#include <algorithm>

namespace chern {

DivisibilityReport halic_divisibility_check(const ChernTriple& t) noexcept {
  DivisibilityReport r;
  r.c3_even = t.c3 % 2 == 0;
  r.c1cubed_even = t.c1_cubed % 2 == 0;
  r.c1c2_mod24 = t.c1c2 % 24 == 0;
  r.all_pass = r.c3_even && r.c1cubed_even && r.c1c2_mod24;
  return r;
}

std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::c3_odd: return "c3 is odd";
    case ObstructionKind::c1cubed_odd: return "c1^3 is odd";
    case ObstructionKind::c1c2_not_divisible_by_24: return "c1c2 is not divisible by 24";
    case ObstructionKind::c1cubed_not_divisible_by_6: return "c1^3 is not divisible by 6";
  }
  return "unknown";
}

std::string Obstruction::message() const {
  std::string out;
  for (auto kind : reasons) {
    if (!out.empty()) out += "; ";
    out += to_string(kind);
  }
  return out;
}

std::optional<Obstruction> construction_obstruction(const TargetTriple& t) {
  const auto halic = halic_divisibility_check(t);
  Obstruction ob;
  if (!halic.c3_even) ob.reasons.push_back(ObstructionKind::c3_odd);
  if (!halic.c1cubed_even) ob.reasons.push_back(ObstructionKind::c1cubed_odd);
  if (!halic.c1c2_mod24) ob.reasons.push_back(ObstructionKind::c1c2_not_divisible_by_24);
  if (t.c1_cubed % 6 != 0) ob.reasons.push_back(ObstructionKind::c1cubed_not_divisible_by_6);
  if (ob.reasons.empty()) return std::nullopt;
  return ob;
}

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::negative_c1sq_unknown: return "negative-c1sq-unknown";
    case RegionLabel::many_basic_classes: return "many-basic-classes";
    case RegionLabel::one_basic_class: return "one-basic-class";
    case RegionLabel::general_type: return "general-type";
    case RegionLabel::above_bmy_unknown: return "above-BMY-unknown";
  }
  return "unknown";
}

std::string to_string(BoundaryLine line) {
  switch (line) {
    case BoundaryLine::bmy: return "c1sq=9chi";
    case BoundaryLine::zero_signature: return "c1sq=8chi";
    case BoundaryLine::noether: return "c1sq=2chi-6";
    case BoundaryLine::chi_minus_three: return "c1sq=chi-3";
    case BoundaryLine::elliptic_axis: return "c1sq=0";
  }
  return "unknown";
}

bool GeographyRegion::has(RegionLabel label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

bool GeographyRegion::on(BoundaryLine line) const {
  return std::find(lines.begin(), lines.end(), line) != lines.end();
}

GeographyRegion classify_geography_point(Integer chi_h, Integer c1_sq) {
  GeographyRegion r;
  r.chi_h = chi_h;
  r.c1_sq = c1_sq;

  // Closed strips; a point on a shared line gets both labels.
  if (c1_sq < 0) r.labels.push_back(RegionLabel::negative_c1sq_unknown);
  if (0 <= c1_sq && c1_sq <= chi_h - 3) {
    r.labels.push_back(RegionLabel::many_basic_classes);
    r.basic_class_count = chi_h - c1_sq - 2;
  }
  if (chi_h - 3 <= c1_sq && c1_sq <= 2 * chi_h - 6) r.labels.push_back(RegionLabel::one_basic_class);
  if (2 * chi_h - 6 <= c1_sq && c1_sq <= 9 * chi_h) r.labels.push_back(RegionLabel::general_type);
  if (c1_sq > 9 * chi_h) r.labels.push_back(RegionLabel::above_bmy_unknown);

  if (c1_sq == 9 * chi_h) r.lines.push_back(BoundaryLine::bmy);
  if (c1_sq == 8 * chi_h) r.lines.push_back(BoundaryLine::zero_signature);
  if (c1_sq == 2 * chi_h - 6) r.lines.push_back(BoundaryLine::noether);
  if (c1_sq == chi_h - 3) r.lines.push_back(BoundaryLine::chi_minus_three);
  if (c1_sq == 0) r.lines.push_back(BoundaryLine::elliptic_axis);

  r.on_elliptic_axis = c1_sq == 0 && chi_h >= 1;
  const Integer sigma = c1_sq - 8 * chi_h;
  r.signature_sign = (sigma > 0) - (sigma < 0);
  return r;
}

}  // namespace chern
