#include "boolcd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "boolcd/errors.hpp"

namespace boolcd {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 608.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 348.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) +
         "\">\n<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" fill=\"white\"/>\n";
}

std::string text_at(double x, double y, const std::string& s, const std::string& anchor,
                    int size) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + escape_text(s) +
         "</text>\n";
}

std::string title_and_axes(const std::string& title, const std::string& x_label,
                           const std::string& y_label) {
  std::string out;
  out += text_at(kWidth / 2, 24, title, "middle", 14);
  out += text_at((kLeft + kRight) / 2, kHeight - 12, x_label, "middle", 12);
  out += "<text x=\"16\" y=\"" + num((kTop + kBottom) / 2) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((kTop + kBottom) / 2) + ")\">" + escape_text(y_label) + "</text>\n";
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  double scale(double v, double out_lo, double out_hi) const {
    if (hi == lo) return (out_lo + out_hi) / 2.0;
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

std::string ticks_x(const Range& r) {
  std::string out;
  for (int i = 0; i <= 4; ++i) {
    const double v = r.lo + (r.hi - r.lo) * i / 4.0;
    const double x = r.scale(v, kLeft, kRight);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(kBottom + 5) + "\" stroke=\"black\"/>\n";
    out += text_at(x, kBottom + 20, tick_label(v), "middle", 11);
  }
  return out;
}

std::string ticks_y(const Range& r) {
  std::string out;
  for (int i = 0; i <= 4; ++i) {
    const double v = r.lo + (r.hi - r.lo) * i / 4.0;
    const double y = r.scale(v, kBottom, kTop);
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    out += text_at(kLeft - 9, y + 4, tick_label(v), "end", 11);
  }
  return out;
}

std::string legend(const std::vector<std::string>& names) {
  std::string out;
  double y = kTop + 6;
  for (std::size_t s = 0; s < names.size(); ++s) {
    const char* color = kPalette[s % kPaletteSize];
    out += "<rect x=\"" + num(kRight - 150) + "\" y=\"" + num(y - 9) +
           "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
    out += text_at(kRight - 133, y + 2, names[s], "start", 11);
    y += 18;
  }
  return out;
}

}  // namespace

std::string emit_svg_line(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series) {
  bool any_point = false;
  for (const Series& s : series) any_point = any_point || !s.points.empty();
  if (series.empty() || !any_point) {
    throw InputError("emit_svg_line: no data");
  }

  Range xr{series.front().points.front().first, series.front().points.front().first};
  Range yr{series.front().points.front().second, series.front().points.front().second};
  for (const Series& s : series) {
    for (const auto& [px, py] : s.points) {
      xr.lo = std::min(xr.lo, px);
      xr.hi = std::max(xr.hi, px);
      yr.lo = std::min(yr.lo, py);
      yr.hi = std::max(yr.hi, py);
    }
  }
  if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
  if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;

  std::string out = svg_open();
  out += title_and_axes(title, x_label, y_label);
  out += ticks_x(xr);
  out += ticks_y(yr);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPaletteSize];
    names.push_back(series[s].name);
    if (series[s].points.size() > 1) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < series[s].points.size(); ++i) {
        if (i) out += ' ';
        out += num(xr.scale(series[s].points[i].first, kLeft, kRight)) + "," +
               num(yr.scale(series[s].points[i].second, kBottom, kTop));
      }
      out += "\"/>\n";
    }
    for (const auto& [px, py] : series[s].points) {
      out += "<circle cx=\"" + num(xr.scale(px, kLeft, kRight)) + "\" cy=\"" +
             num(yr.scale(py, kBottom, kTop)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
  }
  out += legend(names);
  out += "</svg>\n";
  return out;
}

std::string emit_svg_stacked_bars(const std::string& title,
                                  const std::vector<std::string>& categories,
                                  const std::vector<std::string>& series_names,
                                  const std::vector<std::vector<double>>& values) {
  if (categories.empty() || series_names.empty() || values.size() != series_names.size()) {
    throw InputError("emit_svg_stacked_bars: no data or mismatched series");
  }
  for (const auto& row : values) {
    if (row.size() != categories.size()) {
      throw InputError("emit_svg_stacked_bars: series length does not match categories");
    }
  }
  double max_total = 0.0;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double total = 0.0;
    for (std::size_t s = 0; s < values.size(); ++s) total += std::max(0.0, values[s][c]);
    max_total = std::max(max_total, total);
  }
  if (max_total <= 0.0) max_total = 1.0;
  Range yr{0.0, max_total};

  std::string out = svg_open();
  out += title_and_axes(title, "frame", "proportion");
  out += ticks_y(yr);

  const double band = (kRight - kLeft) / static_cast<double>(categories.size());
  const double bar_w = band * 0.7;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const double x = kLeft + band * static_cast<double>(c) + (band - bar_w) / 2.0;
    out += text_at(x + bar_w / 2, kBottom + 20, categories[c], "middle", 11);
    double acc = 0.0;
    for (std::size_t s = 0; s < values.size(); ++s) {
      const double v = std::max(0.0, values[s][c]);
      if (v <= 0.0) continue;
      const double y0 = yr.scale(acc, kBottom, kTop);
      const double y1 = yr.scale(acc + v, kBottom, kTop);
      out += "<rect x=\"" + num(x) + "\" y=\"" + num(y1) + "\" width=\"" + num(bar_w) +
             "\" height=\"" + num(y0 - y1) + "\" fill=\"" +
             std::string(kPalette[s % kPaletteSize]) + "\"/>\n";
      acc += v;
    }
  }
  out += legend(series_names);
  out += "</svg>\n";
  return out;
}

std::string emit_svg_diverging_bars(const std::string& title,
                                    const std::vector<std::string>& class_names,
                                    const std::vector<double>& gains,
                                    const std::vector<double>& losses,
                                    const std::vector<bool>& new_class) {
  if (class_names.empty() || gains.size() != class_names.size() ||
      losses.size() != class_names.size() || new_class.size() != class_names.size()) {
    throw InputError("emit_svg_diverging_bars: no data or mismatched lengths");
  }
  double max_abs = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    max_abs = std::max({max_abs, gains[i], losses[i]});
  }
  if (max_abs <= 0.0) max_abs = 1.0;
  Range xr{-max_abs, max_abs};

  std::string out = svg_open();
  out += text_at(kWidth / 2, 24, title, "middle", 14);
  out += text_at((kLeft + kRight) / 2, kHeight - 12, "loss %  /  gain %", "middle", 12);
  const double mid = xr.scale(0.0, kLeft, kRight);
  out += "<line x1=\"" + num(mid) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(mid) + "\" y2=\"" +
         num(kBottom) + "\" stroke=\"black\"/>\n";
  out += ticks_x(xr);

  const double band = (kBottom - kTop) / static_cast<double>(class_names.size());
  const double bar_h = band * 0.6;
  for (std::size_t i = 0; i < class_names.size(); ++i) {
    const double y = kTop + band * static_cast<double>(i) + (band - bar_h) / 2.0;
    out += text_at(kLeft - 9, y + bar_h / 2 + 4, class_names[i], "end", 11);
    if (new_class[i]) {
      out += text_at(mid + 6, y + bar_h / 2 + 4, "new class", "start", 11);
      continue;
    }
    if (losses[i] > 0.0) {
      const double x0 = xr.scale(-losses[i], kLeft, kRight);
      out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(mid - x0) +
             "\" height=\"" + num(bar_h) + "\" fill=\"#d62728\"/>\n";
    }
    if (gains[i] > 0.0) {
      const double x1 = xr.scale(gains[i], kLeft, kRight);
      out += "<rect x=\"" + num(mid) + "\" y=\"" + num(y) + "\" width=\"" + num(x1 - mid) +
             "\" height=\"" + num(bar_h) + "\" fill=\"#2ca02c\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace boolcd
