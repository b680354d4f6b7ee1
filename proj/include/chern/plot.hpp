#pragma once

#include <string>

#include "chern/search.hpp"

namespace chern {

struct PlotWindow {
  IntRange chi_h;
  IntRange c1_sq;
};

/// One row per integer grid point: chi_h,c1_sq,signature_sign,labels
/// (labels joined by ';').
std::string render_geography_csv(const PlotWindow& window);

/// Static SVG chart of the (chi_h, c1^2) plane with the region shading, the
/// lines c1^2 = 9 chi_h, 8 chi_h, 2 chi_h - 6, chi_h - 3 and the dashed
/// elliptic axis.
std::string render_geography_svg(const PlotWindow& window);

}  // namespace chern
