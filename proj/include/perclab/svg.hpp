#pragma once

#include <span>
#include <string>
#include <string_view>

namespace perclab {

/// Minimal static SVG: axes on [xmin,xmax] x [0,1], tick labels, a polyline
/// through the points and a dot per point.
std::string svg_curve(std::span<const double> xs, std::span<const double> ys, std::string_view title,
                      std::string_view x_label, std::string_view y_label);

}  // namespace perclab
