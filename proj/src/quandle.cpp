#include "rotcolor/quandle.hpp"

#include "rotcolor/errors.hpp"

namespace rotcolor {

DihedralElem::DihedralElem(int modulus, long long v) : n(modulus) {
  if (modulus < 3) throw InvalidArgument("dihedral quandle needs n >= 3");
  long long r = v % modulus;
  if (r < 0) r += modulus;
  value = static_cast<int>(r);
}

namespace {

void check_same(const DihedralElem& x, const DihedralElem& y) {
  if (x.n != y.n) {
    throw InstanceMismatch("dihedral elements of orders " + std::to_string(x.n) + " and " +
                           std::to_string(y.n));
  }
}

}  // namespace

DihedralElem q_op(const DihedralElem& x, const DihedralElem& y) {
  check_same(x, y);
  return DihedralElem(x.n, 2LL * y.value - x.value);
}

// The dihedral operation is an involution in its first argument.
DihedralElem q_inv_op(const DihedralElem& x, const DihedralElem& y) { return q_op(x, y); }

RotElem q_op(const RotElem& x, const RotElem& y) {
  return RotElem{rotate(x.center, y.center, y.angle), x.angle};
}

RotElem q_inv_op(const RotElem& x, const RotElem& y) {
  return RotElem{rotate(x.center, y.center, -y.angle), x.angle};
}

QuandleElem q_op(const QuandleElem& x, const QuandleElem& y) {
  return std::visit(
      [](const auto& a, const auto& b) -> QuandleElem {
        using A = std::decay_t<decltype(a)>;
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<A, B>) {
          return q_op(a, b);
        } else {
          throw InstanceMismatch("quandle operation across different instances");
        }
      },
      x, y);
}

QuandleElem q_inv_op(const QuandleElem& x, const QuandleElem& y) {
  return std::visit(
      [](const auto& a, const auto& b) -> QuandleElem {
        using A = std::decay_t<decltype(a)>;
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<A, B>) {
          return q_inv_op(a, b);
        } else {
          throw InstanceMismatch("quandle operation across different instances");
        }
      },
      x, y);
}

DihedralQuandle::DihedralQuandle(int n) : n_(n) {
  if (n < 3) throw InvalidArgument("dihedral quandle needs n >= 3");
}

std::vector<DihedralElem> DihedralQuandle::elements() const {
  std::vector<DihedralElem> out;
  out.reserve(n_);
  for (int v = 0; v < n_; ++v) out.emplace_back(n_, v);
  return out;
}

AreaValue cocycle_phi(const Point& o, const RotElem& x, const RotElem& y) {
  return signed_area_tri(o, q_op(x, y).center, y.center) - signed_area_tri(o, x.center, y.center);
}

AreaValue verify_qc1(const Point& o, const RotElem& x, const RotElem& y, const RotElem& z) {
  return cocycle_phi(o, x, y) + cocycle_phi(o, q_op(x, y), z) - cocycle_phi(o, x, z) -
         cocycle_phi(o, q_op(x, z), q_op(y, z));
}

}  // namespace rotcolor
