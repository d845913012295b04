#pragma once

#include <concepts>
#include <variant>
#include <vector>

#include "rotcolor/geom.hpp"

namespace rotcolor {

/// Element of the dihedral quandle Z/nZ with x * y = 2y - x.
struct DihedralElem {
  int n = 3;
  int value = 0;

  DihedralElem() = default;
  DihedralElem(int modulus, long long v);
  friend bool operator==(const DihedralElem&, const DihedralElem&) = default;
  friend auto operator<=>(const DihedralElem&, const DihedralElem&) = default;
};

/// A rotation of the plane: centre and angle.
struct RotElem {
  Point center;
  RationalTurn angle;
  friend bool operator==(const RotElem&, const RotElem&) = default;
};

using QuandleElem = std::variant<DihedralElem, RotElem>;

DihedralElem q_op(const DihedralElem& x, const DihedralElem& y);
DihedralElem q_inv_op(const DihedralElem& x, const DihedralElem& y);
/// Rotates x's centre about y's centre by y's angle; x keeps its own angle.
RotElem q_op(const RotElem& x, const RotElem& y);
RotElem q_inv_op(const RotElem& x, const RotElem& y);
/// Throws InstanceMismatch when x and y come from different quandles.
QuandleElem q_op(const QuandleElem& x, const QuandleElem& y);
QuandleElem q_inv_op(const QuandleElem& x, const QuandleElem& y);

template <class Q>
concept FiniteQuandle = requires(const Q& q, const typename Q::Element& x) {
  { q.elements() } -> std::convertible_to<std::vector<typename Q::Element>>;
  { q.index(x) } -> std::convertible_to<std::size_t>;
  { q.op(x, x) } -> std::convertible_to<typename Q::Element>;
  { q.inv_op(x, x) } -> std::convertible_to<typename Q::Element>;
};

class DihedralQuandle {
 public:
  using Element = DihedralElem;

  explicit DihedralQuandle(int n);
  int order() const noexcept { return n_; }
  std::vector<Element> elements() const;
  std::size_t index(const Element& x) const { return static_cast<std::size_t>(x.value); }
  Element op(const Element& x, const Element& y) const { return q_op(x, y); }
  Element inv_op(const Element& x, const Element& y) const { return q_inv_op(x, y); }

 private:
  int n_;
};

/// -s(o, x, y) + s(o, x * y, y) on the centres.
AreaValue cocycle_phi(const Point& o, const RotElem& x, const RotElem& y);
/// f(x,y) + f(x*y, z) - f(x,z) - f(x*z, y*z); zero for a 2-cocycle.
AreaValue verify_qc1(const Point& o, const RotElem& x, const RotElem& y, const RotElem& z);

}  // namespace rotcolor
