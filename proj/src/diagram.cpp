#include "rotcolor/diagram.hpp"

#include <cstdlib>
#include <numeric>

namespace rotcolor {

TorusDiagram::TorusDiagram(int p, int q) : p_(p), q_(q), m_(std::abs(p)), n_(std::abs(q)) {
  if (m_ < 2 || n_ < 2) throw InvalidArgument("D(p,q) needs |p|, |q| >= 2");
  if (std::gcd(m_, n_) != 1) {
    throw InvalidArgument("D(" + std::to_string(p) + "," + std::to_string(q) +
                          ") is a link: p and q must be coprime");
  }
  eps_ = (static_cast<long long>(p) * q > 0) ? 1 : -1;
  crossings_.reserve(static_cast<std::size_t>(n_) * (m_ - 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 1; j < m_; ++j) {
      const int over = arc(i, 0);
      if (eps_ > 0) {
        crossings_.push_back({arc(i, j), over, arc(i + 1, j - 1), 1});
      } else {
        crossings_.push_back({arc(i + 1, j - 1), over, arc(i, j), -1});
      }
    }
  }
}

int TorusDiagram::arc(int i, int j) const {
  i %= n_;
  if (i < 0) i += n_;
  if (j == 0) {
    i = (i + 1) % n_;
    j = m_ - 1;
  }
  if (j < 1 || j >= m_) throw InvalidArgument("arc index j out of range");
  return i * (m_ - 1) + (j - 1);
}

std::string TorusDiagram::arc_label(int a) const {
  return "a_" + std::to_string(a / (m_ - 1)) + "_" + std::to_string(a % (m_ - 1) + 1);
}

TorusDiagram build_diagram(int p, int q) { return TorusDiagram(p, q); }

AreaValue total_weight(const TorusDiagram& d, const Coloring<RotElem>& c, const Point& o) {
  AreaValue w;
  for (const Crossing& x : d.crossings()) {
    const RotElem& source = c.colors[x.sign > 0 ? x.under_in : x.under_out];
    const AreaValue f = cocycle_phi(o, source, c.colors[x.over]);
    w += x.sign > 0 ? f : -f;
  }
  return w;
}

AreaValue closed_form_weight(int p, int q, int k, int l, const PolygonSpec& base,
                             const PolygonSpec& start) {
  const int m = std::abs(p);
  const int n = std::abs(q);
  if (base.m != n || base.k != l) throw InvalidArgument("base polygon must have type (|q|, l)");
  if (start.m != m || start.k != k) throw InvalidArgument("start polygon must have type (|p|, k)");
  if (!(base.anchor == start.anchor) || base.direction != start.direction || base.side != start.side) {
    throw InvalidArgument("base and start polygons must share their anchored edge");
  }
  const AreaValue sp = signed_area_polygon(polygon_vertices(start));
  const AreaValue sq = signed_area_polygon(polygon_vertices(base));
  const AreaValue w = sp.times(n) - sq.times(m);
  return (static_cast<long long>(p) * q > 0) ? w : -w;
}

}  // namespace rotcolor
