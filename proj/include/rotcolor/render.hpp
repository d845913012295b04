#pragma once

#include <string>
#include <vector>

#include "rotcolor/trochoid.hpp"

namespace rotcolor {

struct RenderConfig {
  int width = 800;
  int height = 800;
  double base_stroke = 3.0;     // pixels
  double polygon_stroke = 1.5;  // pixels
  double vertex_radius = 3.0;   // pixels
  std::string base_color = "#000000";
  std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  int precision = 12;
};

/// The diagram of the trochoid: Q in base_color, P_i cycling through the palette.
/// Identical inputs give identical bytes.
std::string render_trochoid_svg(const TrochoidSpec& spec, const RenderConfig& cfg = {});

}  // namespace rotcolor
