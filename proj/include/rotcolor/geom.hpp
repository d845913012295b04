#pragma once

// Planar geometry with cyclotomic coordinates: a point is the complex number
// itself, stored exactly.

#include <vector>

#include "rotcolor/exactnum.hpp"

namespace rotcolor {

struct Point {
  CycNum value;

  Point() = default;
  Point(CycNum v) : value(std::move(v)) {}  // NOLINT: a point is its coordinate

  friend CycNum operator-(const Point& a, const Point& b) { return a.value - b.value; }
  friend Point operator+(const Point& a, const CycNum& d) { return Point(a.value + d); }
  friend Point operator-(const Point& a, const CycNum& d) { return Point(a.value - d); }
  friend bool operator==(const Point& a, const Point& b) { return a.value == b.value; }

  std::complex<double> embed() const { return value.embed(); }
};

/// Signed area kept as scaled = 4i * area, which stays inside the field.
class AreaValue {
 public:
  AreaValue() = default;
  static AreaValue from_scaled(CycNum scaled);

  const CycNum& scaled() const noexcept { return scaled_; }
  double approx() const noexcept { return approx_; }
  /// The real area as a field element, scaled * (-i) / 4.
  CycNum exact() const;
  bool is_zero() const { return scaled_.is_zero(); }
  /// -1, 0 or +1. Zero is decided exactly; the sign of a nonzero value is
  /// read from the embedding.
  int sign() const;

  AreaValue& operator+=(const AreaValue& o);
  AreaValue& operator-=(const AreaValue& o);
  friend AreaValue operator+(AreaValue a, const AreaValue& b) { return a += b; }
  friend AreaValue operator-(AreaValue a, const AreaValue& b) { return a -= b; }
  AreaValue operator-() const;
  AreaValue times(const Rational& r) const;

  friend bool operator==(const AreaValue& a, const AreaValue& b) { return a.scaled_ == b.scaled_; }

 private:
  CycNum scaled_;
  double approx_ = 0.0;
};

/// e^{2 pi i t}, at the smallest level that holds it.
CycNum unit(const RationalTurn& t);

Point rotate(const Point& z, const Point& center, const RationalTurn& t);

AreaValue signed_area_tri(const Point& x, const Point& y, const Point& z);
/// Fan of triangles from o. The value does not depend on o; debug builds
/// recheck that with a second fan point.
AreaValue signed_area_polygon(const std::vector<Point>& vertices, const Point& o = Point());
/// s(y,z,w) - s(x,z,w) + s(x,y,w) - s(x,y,z); always zero.
AreaValue boundary_area_check(const Point& x, const Point& y, const Point& z, const Point& w);

struct PolygonSpec {
  int m = 2;
  int k = 1;
  Point anchor;
  RationalTurn direction;
  Rational side{1};

  void validate() const;
  /// side * e(direction): the first edge.
  CycNum edge() const;
  friend bool operator==(const PolygonSpec&, const PolygonSpec&) = default;
};

/// Edge walk w_{j+1} = w_j + edge * zeta_m^{kj}, starting at the anchor.
std::vector<Point> polygon_vertices(const PolygonSpec& spec);
PolygonSpec mirror_type(const PolygonSpec& spec);

}  // namespace rotcolor
