#include "unruhbell/svg_plot.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace unruhbell {

namespace {

constexpr double chsh_ceiling = 2.0 * std::numbers::sqrt2;

struct Panel {
  double x0 = 0.0;   // pixel origin of the plot area (top-left)
  double y0 = 0.0;
  double width = 0.0;
  double height = 0.0;
  double y_max = 1.0;

  double px(double r) const { return x0 + width * (r / squeezing_max); }
  double py(double v) const { return y0 + height * (1.0 - v / y_max); }
};

struct CurveStyle {
  const char* label;
  const char* color;
  const char* dash;  // empty string = solid
};

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

using Series = std::vector<std::pair<double, double>>;

Series extract(const std::vector<SweepRecord>& records, Observer observer,
               Sector sector, bool chsh) {
  Series series;
  for (const SweepRecord& rec : records) {
    if (rec.initial_sign != InitialSign::plus) continue;
    if (rec.observer != observer || rec.sector != sector) continue;
    series.emplace_back(rec.r, chsh ? rec.chsh_horodecki : rec.concurrence);
  }
  return series;
}

void draw_polyline(std::ostringstream& os, const Panel& panel,
                   const Series& series, const CurveStyle& style) {
  os << "  <polyline fill=\"none\" stroke=\"" << style.color
     << "\" stroke-width=\"1.6\"";
  if (style.dash[0] != '\0') {
    os << " stroke-dasharray=\"" << style.dash << "\"";
  }
  os << " points=\"";
  for (const auto& [r, v] : series) {
    os << fmt(panel.px(r)) << ',' << fmt(panel.py(v)) << ' ';
  }
  os << "\"/>\n";
}

void draw_axes(std::ostringstream& os, const Panel& panel, const char* title,
               const std::vector<double>& y_ticks) {
  os << "  <rect x=\"" << fmt(panel.x0) << "\" y=\"" << fmt(panel.y0)
     << "\" width=\"" << fmt(panel.width) << "\" height=\""
     << fmt(panel.height)
     << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>\n";
  os << "  <text x=\"" << fmt(panel.x0 + panel.width / 2) << "\" y=\""
     << fmt(panel.y0 - 10)
     << "\" text-anchor=\"middle\" font-size=\"13\" font-weight=\"bold\">"
     << title << "</text>\n";

  const std::vector<std::pair<double, const char*>> x_ticks = {
      {0.0, "0"}, {0.2, "0.2"}, {0.4, "0.4"}, {0.6, "0.6"},
      {squeezing_max, "pi/4"}};
  for (const auto& [r, label] : x_ticks) {
    const double x = panel.px(r);
    os << "  <line x1=\"" << fmt(x) << "\" y1=\""
       << fmt(panel.y0 + panel.height) << "\" x2=\"" << fmt(x) << "\" y2=\""
       << fmt(panel.y0 + panel.height + 4)
       << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << fmt(x) << "\" y=\""
       << fmt(panel.y0 + panel.height + 16)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << label
       << "</text>\n";
  }
  for (double v : y_ticks) {
    const double y = panel.py(v);
    os << "  <line x1=\"" << fmt(panel.x0 - 4) << "\" y1=\"" << fmt(y)
       << "\" x2=\"" << fmt(panel.x0) << "\" y2=\"" << fmt(y)
       << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << fmt(panel.x0 - 7) << "\" y=\"" << fmt(y + 3.5)
       << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(v) << "</text>\n";
  }
  os << "  <text x=\"" << fmt(panel.x0 + panel.width / 2) << "\" y=\""
     << fmt(panel.y0 + panel.height + 32)
     << "\" text-anchor=\"middle\" font-size=\"12\">r</text>\n";
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepRecord>& records,
                             const std::vector<SweepRecord>& reference) {
  const Panel left{60.0, 40.0, 340.0, 300.0, 1.0};
  const Panel right{510.0, 40.0, 340.0, 300.0, chsh_ceiling};

  const CurveStyle styles[4] = {
      {"Rob particle", "#1f77b4", ""},
      {"Rob antiparticle", "#1f77b4", "6 4"},
      {"AntiRob particle", "#d62728", "10 4 2 4"},
      {"AntiRob antiparticle", "#d62728", "3 3"},
  };
  const CurveStyle reference_style{"Rob particle, |q_R| = 1", "#9467bd", ""};
  const std::pair<Observer, Sector> combos[4] = {
      {Observer::rob, Sector::particle},
      {Observer::rob, Sector::antiparticle},
      {Observer::antirob, Sector::particle},
      {Observer::antirob, Sector::antiparticle},
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"920\" "
        "height=\"420\" viewBox=\"0 0 920 420\" font-family=\"sans-serif\">\n";
  os << "  <rect width=\"920\" height=\"420\" fill=\"white\"/>\n";

  draw_axes(os, left, "Concurrence", {0.0, 0.25, 0.5, 0.75, 1.0});
  draw_axes(os, right, "Maximal CHSH value", {0.0, 1.0, 2.0, chsh_ceiling});

  // Local-realism bound on the CHSH panel.
  os << "  <line x1=\"" << fmt(right.x0) << "\" y1=\"" << fmt(right.py(2.0))
     << "\" x2=\"" << fmt(right.x0 + right.width) << "\" y2=\""
     << fmt(right.py(2.0))
     << "\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"5 5\"/>\n";
  os << "  <text x=\"" << fmt(right.x0 + 6) << "\" y=\""
     << fmt(right.py(2.0) - 5)
     << "\" font-size=\"10\" fill=\"#555\">local-realism bound</text>\n";

  for (int n = 0; n < 4; ++n) {
    const auto& [observer, sector] = combos[n];
    draw_polyline(os, left, extract(records, observer, sector, false),
                  styles[n]);
    draw_polyline(os, right, extract(records, observer, sector, true),
                  styles[n]);
  }
  draw_polyline(os, right,
                extract(reference, Observer::rob, Sector::particle, true),
                reference_style);

  // Legend below the panels.
  double legend_x = 60.0;
  const double legend_y = 395.0;
  auto legend_entry = [&](const CurveStyle& style) {
    os << "  <line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(legend_y - 4)
       << "\" x2=\"" << fmt(legend_x + 26) << "\" y2=\"" << fmt(legend_y - 4)
       << "\" stroke=\"" << style.color << "\" stroke-width=\"1.6\"";
    if (style.dash[0] != '\0') {
      os << " stroke-dasharray=\"" << style.dash << "\"";
    }
    os << "/>\n";
    os << "  <text x=\"" << fmt(legend_x + 31) << "\" y=\"" << fmt(legend_y)
       << "\" font-size=\"11\">" << style.label << "</text>\n";
    legend_x += 36.0 + 7.0 * std::char_traits<char>::length(style.label);
  };
  for (const CurveStyle& style : styles) legend_entry(style);
  legend_entry(reference_style);

  os << "</svg>\n";
  return os.str();
}

}  // namespace unruhbell
