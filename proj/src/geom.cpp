#include "rotcolor/geom.hpp"

#include "rotcolor/errors.hpp"

namespace rotcolor {
namespace {

const CycNum& imag_unit() {
  static const CycNum i = cyc_root(4, 1);
  return i;
}

}  // namespace

AreaValue AreaValue::from_scaled(CycNum scaled) {
  AreaValue a;
  a.approx_ = scaled.embed().imag() / 4.0;
  if (scaled.is_zero()) a.approx_ = 0.0;
  a.scaled_ = std::move(scaled);
  return a;
}

CycNum AreaValue::exact() const { return (scaled_ * -imag_unit()).scaled(Rational(1, 4)); }

int AreaValue::sign() const {
  if (scaled_.is_zero()) return 0;
  return approx_ > 0 ? 1 : -1;
}

AreaValue& AreaValue::operator+=(const AreaValue& o) { return *this = from_scaled(scaled_ + o.scaled_); }

AreaValue& AreaValue::operator-=(const AreaValue& o) { return *this = from_scaled(scaled_ - o.scaled_); }

AreaValue AreaValue::operator-() const { return from_scaled(-scaled_); }

AreaValue AreaValue::times(const Rational& r) const { return from_scaled(scaled_.scaled(r)); }

CycNum unit(const RationalTurn& t) { return cyc_root(static_cast<int>(t.den()), t.num()); }

Point rotate(const Point& z, const Point& center, const RationalTurn& t) {
  if (t.is_zero()) return z;
  return Point((z - center) * unit(t) + center.value);
}

AreaValue signed_area_tri(const Point& x, const Point& y, const Point& z) {
  const CycNum w = (y - x).conj() * (z - x);
  return AreaValue::from_scaled(w - w.conj());
}

AreaValue signed_area_polygon(const std::vector<Point>& vertices, const Point& o) {
  if (vertices.size() < 2) throw InvalidArgument("a polygon needs at least 2 vertices");
  const std::size_t m = vertices.size();
  AreaValue total;
  for (std::size_t i = 0; i < m; ++i) total += signed_area_tri(o, vertices[i], vertices[(i + 1) % m]);
#ifndef NDEBUG
  const Point o2 = o + CycNum(1);
  AreaValue again;
  for (std::size_t i = 0; i < m; ++i) again += signed_area_tri(o2, vertices[i], vertices[(i + 1) % m]);
  if (!(again == total)) throw ConsistencyError("polygon area depends on the fan point");
#endif
  return total;
}

AreaValue boundary_area_check(const Point& x, const Point& y, const Point& z, const Point& w) {
  return signed_area_tri(y, z, w) - signed_area_tri(x, z, w) + signed_area_tri(x, y, w) -
         signed_area_tri(x, y, z);
}

void PolygonSpec::validate() const {
  if (m < 2) throw InvalidArgument("polygon needs m >= 2, got " + std::to_string(m));
  if (k < 1 || k > m - 1) {
    throw InvalidArgument("polygon type (" + std::to_string(m) + "," + std::to_string(k) +
                          ") needs 1 <= k <= m-1");
  }
  if (sgn(side) <= 0) throw InvalidArgument("polygon side must be positive");
}

CycNum PolygonSpec::edge() const { return unit(direction).scaled(side); }

std::vector<Point> polygon_vertices(const PolygonSpec& spec) {
  spec.validate();
  const CycNum e = spec.edge();
  std::vector<Point> out;
  out.reserve(spec.m);
  out.push_back(spec.anchor);
  for (int j = 0; j + 1 < spec.m; ++j) {
    out.push_back(out.back() + e * cyc_root(spec.m, static_cast<long long>(spec.k) * j));
  }
  const Point closing = out.back() + e * cyc_root(spec.m, static_cast<long long>(spec.k) * (spec.m - 1));
  if (!(closing == spec.anchor)) throw ConsistencyError("regular polygon edge walk does not close");
  return out;
}

PolygonSpec mirror_type(const PolygonSpec& spec) {
  PolygonSpec out = spec;
  out.k = spec.m - spec.k;
  return out;
}

}  // namespace rotcolor
