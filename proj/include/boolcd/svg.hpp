#pragma once

#include <string>
#include <utility>
#include <vector>

namespace boolcd {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Self-contained deterministic SVG 1.1 line chart: fixed canvas, fixed
/// palette, fixed numeric precision, elements emitted in input order.
std::string emit_svg_line(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series);

/// Stacked bars, one bar per category, one segment per series entry.
/// values[s][c] is series s in category c.
std::string emit_svg_stacked_bars(const std::string& title,
                                  const std::vector<std::string>& categories,
                                  const std::vector<std::string>& series_names,
                                  const std::vector<std::vector<double>>& values);

/// Horizontal diverging bars: losses extend left in red, gains right in green.
/// Entries flagged `new_class` render a marker instead of a bar.
std::string emit_svg_diverging_bars(const std::string& title,
                                    const std::vector<std::string>& class_names,
                                    const std::vector<double>& gains,
                                    const std::vector<double>& losses,
                                    const std::vector<bool>& new_class);

}  // namespace boolcd
