#include "rotcolor/render.hpp"

#include <algorithm>
#include <sstream>

#include "rotcolor/errors.hpp"
#include "rotcolor/serialize.hpp"

namespace rotcolor {

std::string render_trochoid_svg(const TrochoidSpec& spec, const RenderConfig& cfg) {
  if (cfg.width <= 0 || cfg.height <= 0) throw InvalidArgument("canvas size must be positive");
  if (cfg.palette.empty()) throw InvalidArgument("palette must not be empty");
  const Trochoid t = build_trochoid(spec);

  // SVG's y axis points down; draw (x, -y).
  auto project = [](const Point& z) {
    const auto c = z.embed();
    return std::pair<double, double>{c.real(), -c.imag()};
  };
  std::vector<std::vector<std::pair<double, double>>> shapes;
  auto add = [&](const std::vector<Point>& poly) {
    std::vector<std::pair<double, double>> pts;
    for (const Point& z : poly) pts.push_back(project(z));
    shapes.push_back(std::move(pts));
  };
  add(t.base);
  for (const auto& poly : t.polygons) add(poly);

  double xmin = shapes[0][0].first, xmax = xmin, ymin = shapes[0][0].second, ymax = ymin;
  for (const auto& s : shapes) {
    for (const auto& [x, y] : s) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 0.05 * span;
  xmin -= pad;
  ymin -= pad;
  const double w = (xmax - xmin) + pad;
  const double h = (ymax - ymin) + pad;
  const double px = std::max(w / cfg.width, h / cfg.height);
  auto f = [&](double v) { return format_float(v, cfg.precision); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
     << "\" viewBox=\"" << f(xmin) << ' ' << f(ymin) << ' ' << f(w) << ' ' << f(h) << "\">\n";
  os << "<title>(" << spec.strands() << ", " << spec.k << "; " << spec.blocks() << ", " << spec.l
     << ")-trochoid, D(" << spec.p << "," << spec.q << ")</title>\n";
  os << "<g fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
  auto polygon = [&](const std::vector<std::pair<double, double>>& pts, const std::string& color,
                     double stroke, const char* cls) {
    os << "<polygon class=\"" << cls << "\" stroke=\"" << color << "\" stroke-width=\"" << f(stroke * px)
       << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) os << ' ';
      os << f(pts[i].first) << ',' << f(pts[i].second);
    }
    os << "\"/>\n";
  };
  for (std::size_t i = 1; i < shapes.size(); ++i) {
    polygon(shapes[i], cfg.palette[(i - 1) % cfg.palette.size()], cfg.polygon_stroke, i == 1 ? "start" : "copy");
  }
  polygon(shapes[0], cfg.base_color, cfg.base_stroke, "base");
  os << "</g>\n<g fill=\"" << cfg.base_color << "\">\n";
  for (const auto& [x, y] : shapes[0]) {
    os << "<circle cx=\"" << f(x) << "\" cy=\"" << f(y) << "\" r=\"" << f(cfg.vertex_radius * px) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rotcolor
