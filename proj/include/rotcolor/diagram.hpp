#pragma once

// The standard diagram D(p,q) as the closure of the |p|-strand braid
// (s_1 s_2 ... s_{|p|-1})^{|q|}. Block i (0 <= i < |q|) carries the arcs
// a_{i,0..|p|-1}; arc a_{i,0} is the same arc as a_{i+1,|p|-1}. Inside block i
// the over-arc a_{i,0} crosses every other strand, sending a_{i,j} to
// a_{i+1,j-1}.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rotcolor/errors.hpp"
#include "rotcolor/quandle.hpp"

namespace rotcolor {

struct Crossing {
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class TorusDiagram {
 public:
  TorusDiagram(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int strands() const noexcept { return m_; }
  int blocks() const noexcept { return n_; }
  /// +1 when pq > 0, else -1.
  int sign_eps() const noexcept { return eps_; }
  int arc_count() const noexcept { return n_ * (m_ - 1); }
  /// Index of a_{i,j}; i is taken mod |q| and a_{i,0} resolves to a_{i+1,|p|-1}.
  int arc(int i, int j) const;
  /// Representative label "a_i_j" with 1 <= j <= |p|-1.
  std::string arc_label(int arc) const;
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

 private:
  int p_, q_, m_, n_, eps_;
  std::vector<Crossing> crossings_;
};

TorusDiagram build_diagram(int p, int q);

/// Colors indexed by arc index of D(p,q).
template <class Elem>
struct Coloring {
  int p = 0;
  int q = 0;
  std::vector<Elem> colors;

  const Elem& at(const TorusDiagram& d, int i, int j) const { return colors[d.arc(i, j)]; }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::optional<std::size_t> failed_crossing;
  std::string message;
  explicit operator bool() const noexcept { return ok; }
};

template <class Elem>
ValidationReport validate_coloring(const TorusDiagram& d, const Coloring<Elem>& c) {
  if (c.p != d.p() || c.q != d.q() || static_cast<int>(c.colors.size()) != d.arc_count()) {
    return {false, std::nullopt, "coloring does not belong to D(" + std::to_string(d.p()) + "," +
                                     std::to_string(d.q()) + ")"};
  }
  const auto& xs = d.crossings();
  for (std::size_t idx = 0; idx < xs.size(); ++idx) {
    const Crossing& x = xs[idx];
    const Elem& in = c.colors[x.under_in];
    const Elem& over = c.colors[x.over];
    const Elem& out = c.colors[x.under_out];
    const bool good = x.sign > 0 ? (q_op(in, over) == out) : (q_inv_op(in, over) == out);
    if (!good) {
      return {false, idx,
              "crossing " + std::to_string(idx) + " (under " + d.arc_label(x.under_in) + " -> " +
                  d.arc_label(x.under_out) + ", over " + d.arc_label(x.over) + ") violated"};
    }
  }
  return {};
}

template <class Elem>
bool is_trivial(const Coloring<Elem>& c) {
  return std::all_of(c.colors.begin(), c.colors.end(),
                     [&](const Elem& e) { return e == c.colors.front(); });
}

/// Rows of the block picture: row i lists the colors of a_{i,0..|p|-1}.
template <class Elem>
std::vector<std::vector<Elem>> coloring_rows(const TorusDiagram& d, const Coloring<Elem>& c) {
  std::vector<std::vector<Elem>> rows(d.blocks());
  for (int i = 0; i < d.blocks(); ++i) {
    rows[i].reserve(d.strands());
    for (int j = 0; j < d.strands(); ++j) rows[i].push_back(c.at(d, i, j));
  }
  return rows;
}

template <class Elem>
Coloring<Elem> coloring_from_rows(const TorusDiagram& d, const std::vector<std::vector<Elem>>& rows) {
  Coloring<Elem> c{d.p(), d.q(), {}};
  c.colors.reserve(d.arc_count());
  for (int i = 0; i < d.blocks(); ++i) {
    for (int j = 1; j < d.strands(); ++j) c.colors.push_back(rows[i][j]);
  }
  return c;
}

/// Carries a row of |p| colors through one braid block.
template <class Elem, class Op>
std::vector<Elem> propagate_block(const std::vector<Elem>& row, Op&& op) {
  std::vector<Elem> next;
  next.reserve(row.size());
  for (std::size_t j = 1; j < row.size(); ++j) next.push_back(op(row[j], row[0]));
  next.push_back(row[0]);
  return next;
}

/// Every coloring of d by the finite quandle, sorted lexicographically by
/// (arc index, element index). A coloring is fixed by the colors on block 0,
/// so the search runs over |X|^{|p|} seeds and keeps those that close up.
template <FiniteQuandle Q>
std::vector<Coloring<typename Q::Element>> enumerate_colorings_finite(
    const Q& quandle, const TorusDiagram& d, std::size_t max_seeds = 50'000'000) {
  using Elem = typename Q::Element;
  const auto elems = quandle.elements();
  const int m = d.strands();
  double seeds = 1;
  for (int j = 0; j < m; ++j) seeds *= static_cast<double>(elems.size());
  if (seeds > static_cast<double>(max_seeds)) {
    throw BudgetExceeded("finite coloring enumeration needs " + std::to_string(seeds) +
                         " seeds, budget " + std::to_string(max_seeds));
  }
  auto op = [&](const Elem& x, const Elem& y) { return quandle.op(x, y); };
  std::vector<Coloring<Elem>> out;
  std::vector<std::size_t> digits(m, 0);
  while (true) {
    std::vector<Elem> row0;
    row0.reserve(m);
    for (int j = 0; j < m; ++j) row0.push_back(elems[digits[j]]);
    std::vector<std::vector<Elem>> rows{row0};
    for (int i = 1; i <= d.blocks(); ++i) rows.push_back(propagate_block(rows.back(), op));
    if (rows.back() == rows.front()) {
      rows.pop_back();
      out.push_back(coloring_from_rows(d, rows));
    }
    int pos = m - 1;
    while (pos >= 0 && ++digits[pos] == elems.size()) digits[pos--] = 0;
    if (pos < 0) break;
  }
  auto key_less = [&](const Coloring<Elem>& a, const Coloring<Elem>& b) {
    return std::lexicographical_compare(
        a.colors.begin(), a.colors.end(), b.colors.begin(), b.colors.end(),
        [&](const Elem& x, const Elem& y) { return quandle.index(x) < quandle.index(y); });
  };
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

/// Sum over crossings of sign * Phi_o(source, over). The source is the
/// under-arc before the rotation: under_in at positive crossings, under_out
/// at negative ones.
AreaValue total_weight(const TorusDiagram& d, const Coloring<RotElem>& c, const Point& o = Point());

/// eps * (S(P0) |q| - S(Q) |p|) for Q of type (|q|, l) and P0 of type (|p|, k)
/// sharing their first edge.
AreaValue closed_form_weight(int p, int q, int k, int l, const PolygonSpec& base,
                             const PolygonSpec& start);

/// Planar isotopy D(p,q) -> D(p,q): c'(a_{i,j}) = c(a_{i+1,j}).
template <class Elem>
Coloring<Elem> shift_generic(const Coloring<Elem>& c) {
  const TorusDiagram d(c.p, c.q);
  auto rows = coloring_rows(d, c);
  std::rotate(rows.begin(), rows.begin() + 1, rows.end());
  return coloring_from_rows(d, rows);
}

/// Inside-out move D(p,q) -> D(q,p). The over-arcs a_{-t,|p|-1} of D(p,q)
/// become block 0 of D(q,p); the remaining blocks follow by propagation.
template <class Elem>
Coloring<Elem> switch_generic(const Coloring<Elem>& c) {
  const TorusDiagram d(c.p, c.q);
  const TorusDiagram e(c.q, c.p);
  const int n = d.blocks();
  std::vector<Elem> seed;
  seed.reserve(n);
  for (int t = 0; t < n; ++t) seed.push_back(c.at(d, (n - t) % n, d.strands() - 1));
  auto op = [](const Elem& x, const Elem& y) { return q_op(x, y); };
  std::vector<std::vector<Elem>> rows{seed};
  for (int s = 0; s < e.blocks(); ++s) rows.push_back(propagate_block(rows.back(), op));
  if (!(rows.back() == rows.front())) {
    throw InvalidArgument("switch_generic: input is not a valid coloring of D(" +
                          std::to_string(c.p) + "," + std::to_string(c.q) + ")");
  }
  rows.pop_back();
  return coloring_from_rows(e, rows);
}

}  // namespace rotcolor
