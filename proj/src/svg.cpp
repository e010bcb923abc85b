#include "ovt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ovt {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 640.0;
constexpr double kMargin = 60.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int channel(double v) { return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); }

}  // namespace

void write_scatter_svg(std::ostream& out, const ScatterPlot& plot) {
  double x0 = plot.x_range[0], x1 = plot.x_range[1];
  double y0 = plot.y_range[0], y1 = plot.y_range[1];
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#808080\"/>\n"
      << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
      << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#000\"/>\n";
  if (x0 < 0.0 && x1 > 0.0) {
    out << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(y0)) << "\" x2=\"" << num(px(0))
        << "\" y2=\"" << num(py(y1)) << "\" stroke=\"#444\" stroke-width=\"0.5\"/>\n";
  }
  if (y0 < 0.0 && y1 > 0.0) {
    out << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(x1))
        << "\" y2=\"" << num(py(0)) << "\" stroke=\"#444\" stroke-width=\"0.5\"/>\n";
  }
  if (!plot.outline.empty()) {
    out << "<polygon fill=\"none\" stroke=\"#000\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < plot.outline.size(); ++i) {
      if (i) out << ' ';
      out << num(px(plot.outline[i][0])) << ',' << num(py(plot.outline[i][1]));
    }
    out << "\"/>\n";
  }
  for (const auto& p : plot.points) {
    out << "<circle cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y)) << "\" r=\""
        << num(plot.marker_radius) << "\" fill=\"rgb(" << channel(p.rgb[0]) << ','
        << channel(p.rgb[1]) << ',' << channel(p.rgb[2]) << ")\"/>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"16\">" << escape(plot.title) << "</text>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << escape(plot.x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"14\" transform=\"rotate(-90 20 " << kHeight / 2 << ")\">"
      << escape(plot.y_label) << "</text>\n"
      << "</svg>\n";
}

}  // namespace ovt
