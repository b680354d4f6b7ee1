#include "chern/plot.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "chern/geography.hpp"

namespace chern {

std::string render_geography_csv(const PlotWindow& window) {
  std::string out = "chi_h,c1_sq,signature_sign,labels\n";
  for (Integer chi = window.chi_h.lo; chi <= window.chi_h.hi; ++chi)
    for (Integer c1 = window.c1_sq.lo; c1 <= window.c1_sq.hi; ++c1) {
      const auto region = classify_geography_point(chi, c1);
      std::string labels;
      for (auto l : region.labels) {
        if (!labels.empty()) labels += ';';
        labels += to_string(l);
      }
      out += fmt::format("{},{},{},{}\n", chi, c1, region.signature_sign, labels);
    }
  return out;
}

namespace {

// c1^2 = slope * chi + offset
struct Line {
  double slope;
  double offset;
  double at(double x) const { return slope * x + offset; }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Canvas {
  double x_lo, x_hi, y_lo, y_hi;
  static constexpr double width = 720, height = 540, margin = 56;

  double px(double x) const { return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin); }
  double py(double y) const {
    return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
  }
  double clamp_y(double y) const { return std::clamp(y, y_lo, y_hi); }
};

struct Strip {
  std::optional<Line> lower;  // nullopt: unbounded below
  std::optional<Line> upper;  // nullopt: unbounded above
  const char* fill;
  const char* label;
};

std::string strip_polygon(const Canvas& c, const Strip& s) {
  auto lower = [&](double x) { return c.clamp_y(s.lower ? s.lower->at(x) : -kInf); };
  auto upper = [&](double x) { return std::max(lower(x), c.clamp_y(s.upper ? s.upper->at(x) : kInf)); };

  // Vertices occur at the window edges, where a boundary crosses the top or
  // bottom of the window, and where the two boundaries meet.
  std::vector<double> xs{c.x_lo, c.x_hi};
  for (const auto& line : {s.lower, s.upper}) {
    if (!line || line->slope == 0) continue;
    for (double y : {c.y_lo, c.y_hi}) xs.push_back((y - line->offset) / line->slope);
  }
  if (s.lower && s.upper && s.lower->slope != s.upper->slope)
    xs.push_back((s.upper->offset - s.lower->offset) / (s.lower->slope - s.upper->slope));
  std::erase_if(xs, [&](double x) { return x < c.x_lo || x > c.x_hi; });
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::string points;
  for (double x : xs) points += fmt::format("{:.2f},{:.2f} ", c.px(x), c.py(upper(x)));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    points += fmt::format("{:.2f},{:.2f} ", c.px(*it), c.py(lower(*it)));
  if (!points.empty()) points.pop_back();
  return fmt::format("  <polygon class=\"region\" data-region=\"{}\" points=\"{}\" fill=\"{}\" "
                     "fill-opacity=\"0.35\" stroke=\"none\"/>\n",
                     s.label, points, s.fill);
}

std::string line_segment(const Canvas& c, const Line& line, const char* label, const char* dash) {
  // Clip the line to the window.
  double x0 = c.x_lo, x1 = c.x_hi;
  if (line.slope != 0) {
    double a = (c.y_lo - line.offset) / line.slope;
    double b = (c.y_hi - line.offset) / line.slope;
    if (a > b) std::swap(a, b);
    x0 = std::max(x0, a);
    x1 = std::min(x1, b);
  } else if (line.offset < c.y_lo || line.offset > c.y_hi) {
    return {};
  }
  if (x0 > x1) return {};
  std::string out = fmt::format(
      "  <line class=\"boundary\" data-line=\"{}\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" "
      "y2=\"{:.2f}\" stroke=\"black\" stroke-width=\"1.5\"{}/>\n",
      label, c.px(x0), c.py(line.at(x0)), c.px(x1), c.py(line.at(x1)),
      dash ? fmt::format(" stroke-dasharray=\"{}\"", dash) : std::string{});
  out += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\">{}</text>\n",
                     c.px(x1) - 70, c.py(line.at(x1)) - 4, label);
  return out;
}

}  // namespace

std::string render_geography_svg(const PlotWindow& window) {
  if (window.chi_h.lo >= window.chi_h.hi || window.c1_sq.lo >= window.c1_sq.hi)
    throw ParameterError("plot window must have positive width and height");

  const Canvas c{static_cast<double>(window.chi_h.lo), static_cast<double>(window.chi_h.hi),
                 static_cast<double>(window.c1_sq.lo), static_cast<double>(window.c1_sq.hi)};
  const Line bmy{9, 0}, zero_sig{8, 0}, noether{2, -6}, chi3{1, -3}, axis{0, 0};

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "  <rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
      Canvas::width, Canvas::height);

  const Strip strips[] = {
      {std::nullopt, axis, "#bbbbbb", "negative-c1sq-unknown"},
      {axis, chi3, "#9ecae1", "many-basic-classes"},
      {chi3, noether, "#a1d99b", "one-basic-class"},
      {noether, bmy, "#fdd0a2", "general-type"},
      {bmy, std::nullopt, "#dddddd", "above-BMY-unknown"},
  };
  for (const auto& s : strips) svg += strip_polygon(c, s);

  // Axes
  svg += fmt::format(
      "  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#333\"/>\n"
      "  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{3:.2f}\" stroke=\"#333\"/>\n",
      c.px(c.x_lo), c.py(c.y_lo), c.px(c.x_hi), c.py(c.y_hi));
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\">chi_h</text>\n",
                     c.px(c.x_hi) - 30, c.py(c.y_lo) + 30);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\">c1^2</text>\n",
                     c.px(c.x_lo) - 40, c.py(c.y_hi) - 10);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\">{}</text>\n",
                     c.px(c.x_lo), c.py(c.y_lo) + 14, window.chi_h.lo);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\">{}</text>\n",
                     c.px(c.x_hi) - 10, c.py(c.y_lo) + 14, window.chi_h.hi);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\">{}</text>\n",
                     c.px(c.x_lo) - 30, c.py(c.y_lo), window.c1_sq.lo);
  svg += fmt::format("  <text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\">{}</text>\n",
                     c.px(c.x_lo) - 30, c.py(c.y_hi) + 8, window.c1_sq.hi);

  svg += line_segment(c, bmy, "c1sq=9chi", nullptr);
  svg += line_segment(c, zero_sig, "c1sq=8chi", nullptr);
  svg += line_segment(c, noether, "c1sq=2chi-6", nullptr);
  svg += line_segment(c, chi3, "c1sq=chi-3", nullptr);
  svg += line_segment(c, axis, "c1sq=0", "6,4");

  // Elliptic surfaces E(n) on the axis.
  if (window.c1_sq.contains(0))
    for (Integer n = std::max<Integer>(1, window.chi_h.lo); n <= window.chi_h.hi; ++n)
      svg += fmt::format(
          "  <circle class=\"elliptic\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"black\"/>\n",
          c.px(static_cast<double>(n)), c.py(0));

  svg += "</svg>\n";
  return svg;
}

}  // namespace chern
