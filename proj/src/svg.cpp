#include "perclab/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "perclab/errors.hpp"

namespace perclab {

namespace {

std::string fixed(double x, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string svg_curve(std::span<const double> xs, std::span<const double> ys, std::string_view title,
                      std::string_view x_label, std::string_view y_label) {
  if (xs.size() != ys.size() || xs.empty()) throw ValidationError("svg_curve needs matching, nonempty series");
  constexpr double kWidth = 480, kHeight = 320, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  const double xmin = *std::min_element(xs.begin(), xs.end());
  double xmax = *std::max_element(xs.begin(), xs.end());
  if (xmax == xmin) xmax = xmin + 1.0;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kHeight - kBottom - y * (kHeight - kTop - kBottom); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"320\" viewBox=\"0 0 480 320\">\n";
  svg += "<rect width=\"480\" height=\"320\" fill=\"white\"/>\n";
  svg += "<text x=\"240\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(py(0)) + "\" x2=\"" + fixed(kWidth - kRight) + "\" y2=\"" +
         fixed(py(0)) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(py(0)) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
         fixed(py(1)) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = i / 4.0;
    svg += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(py(y) + 4) +
           "\" text-anchor=\"end\" font-size=\"10\">" + fixed(y) + "</text>\n";
    const double x = xmin + (xmax - xmin) * i / 4.0;
    svg += "<text x=\"" + fixed(px(x)) + "\" y=\"" + fixed(py(0) + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\">" + fixed(x) + "</text>\n";
  }
  svg += "<text x=\"240\" y=\"" + fixed(kHeight - 10) + "\" text-anchor=\"middle\" font-size=\"12\">" +
         escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"160\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 160)\">" +
         escape(y_label) + "</text>\n";
  svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) svg += ' ';
    svg += fixed(px(xs[i])) + "," + fixed(py(ys[i]));
  }
  svg += "\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg += "<circle cx=\"" + fixed(px(xs[i])) + "\" cy=\"" + fixed(py(ys[i])) + "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace perclab
