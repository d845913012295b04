#pragma once

// Trochoids, the colorings they carry, and the moves between them.
//
// A spec is anchored by the shared edge of Q and P0: v0 = w00 = anchor and
// v1 = w01 = anchor + side * e(direction). Internally every spec is kept with
// Plus chirality; a Minus spec names the mirror polygon on the other side of
// the same segment and normalizes to (anchor + edge, direction + 1/2).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotcolor/diagram.hpp"
#include "rotcolor/geom.hpp"

namespace rotcolor {

enum class Chirality { Plus, Minus };

struct TrochoidSpec {
  int p = 3;
  int q = 2;
  int k = 1;
  int l = 1;
  Point anchor;
  RationalTurn direction;
  Rational side{1};
  Chirality chirality = Chirality::Plus;

  void validate() const;
  TrochoidSpec normalized() const;

  int strands() const;  // |p|
  int blocks() const;   // |q|
  int p_prime() const;
  int q_prime() const;
  int k_prime() const;
  int l_prime() const;
  /// p'q'/2 when p'q' is even, p'q' otherwise.
  long long alpha() const;
  /// lcm(2p'q', |p|, |q|, 4, den(direction), level(anchor)); LevelError past the cap.
  int session_level() const;

  /// Q, type (|q|, l), and P0, type (|p|, k), of the normalized spec.
  PolygonSpec base_polygon() const;
  PolygonSpec start_polygon() const;
  /// side * e(direction) of the normalized spec.
  CycNum edge() const;

  /// Equality of the normalized forms.
  friend bool operator==(const TrochoidSpec& a, const TrochoidSpec& b);
  /// Exact canonical key: (p, q, k, l, side, anchor, direction).
  std::string key() const;
};

/// ((m - 2k)/m - (n - 2l)/n) / 2 turns, i.e. l/n - k/m.
RationalTurn theta(int m, int k, int n, int l);

struct Trochoid {
  std::vector<Point> base;                   // v_0 .. v_{|q|-1}
  std::vector<std::vector<Point>> polygons;  // P_i, vertices w_{i,0..|p|-1}
  RationalTurn angle;
};

/// P_i is P_{i-1} rotated about v_{[i]} by theta; checks w_{i,[i]} = v_{[i]}
/// and w_{i,[i+1]} = v_{[i+1]}.
Trochoid build_trochoid(const TrochoidSpec& spec);
/// Rotating P_{|q|-1} about v_0 gives back P_0, with vertex w_{|q|,j+|q|} landing on w_{0,j}.
bool trochoid_closes(const TrochoidSpec& spec);

/// C(a_{i,j}) = (w_{i,[i+j+1]}, theta).
Coloring<RotElem> derive_coloring(const TrochoidSpec& spec);
/// Inverse of derive_coloring, up to normalization of the spec.
TrochoidSpec recover_trochoid(const Coloring<RotElem>& c);

TrochoidSpec shift_spec(const TrochoidSpec& spec);
/// Spec on D(q,p) with (k, l) -> (|q| - l, |p| - k).
TrochoidSpec switch_spec(const TrochoidSpec& spec);
/// Switch, shift, switch, shift: the theta-rotation about the center point.
TrochoidSpec fundamental_deformation(const TrochoidSpec& spec);
Point center_point(const TrochoidSpec& spec);

struct LatticeSpec {
  long long alpha = 1;
  Point base_point;
  RationalTurn base_direction;
  Rational side{1};
};

LatticeSpec lattice_of(const TrochoidSpec& spec);
/// v_sigma = side * e(base_direction) * zeta_{2 alpha}^sigma.
std::vector<CycNum> lattice_generators(const LatticeSpec& lat);
bool lattice_contains(const LatticeSpec& lat, const Point& w);
/// w + v_sigma for every sigma. With verify set, also searches the lattice
/// points near w and throws ConsistencyError unless exactly 2 alpha of them
/// lie at distance side.
std::vector<Point> unit_neighbors(const LatticeSpec& lat, const Point& w, bool verify = false);
/// Number of lattice points at distance side from w, by bounded search over
/// power-basis coefficients |c| <= bound.
std::size_t count_unit_lattice_points(const LatticeSpec& lat, const Point& w, int bound = 2);

/// Direction index sets V_sigma and V_tau in Z/2alpha, each sorted.
std::pair<std::vector<int>, std::vector<int>> v_sets_sigma_tau(const TrochoidSpec& spec, int sigma);

enum class Move { Shift, Switch };

struct MoveSeq {
  std::vector<Move> moves;

  std::size_t switch_count() const;
  bool even() const { return switch_count() % 2 == 0; }
  bool empty() const { return moves.empty(); }
  std::size_t size() const { return moves.size(); }
  friend bool operator==(const MoveSeq&, const MoveSeq&) = default;
};

const char* move_name(Move m);

enum class Verdict { Equivalent, NotEquivalent, Undetermined };
enum class Reason { None, KLMismatch, SideLengthMismatch, LatticeMismatch };

struct ClassificationResult {
  Verdict verdict = Verdict::Undetermined;
  Reason reason = Reason::None;
  MoveSeq witness;
  std::string note;
};

const char* verdict_name(Verdict v);
const char* reason_name(Reason r);

/// R-equivalence of the colorings of two specs on the same D(p,q).
ClassificationResult classify(const TrochoidSpec& a, const TrochoidSpec& b);

TrochoidSpec replay(const MoveSeq& moves, const TrochoidSpec& spec);

template <class Elem>
Coloring<Elem> replay(const MoveSeq& moves, Coloring<Elem> c) {
  for (Move m : moves.moves) c = (m == Move::Shift) ? shift_generic(c) : switch_generic(c);
  return c;
}

struct Region {
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  bool contains(std::complex<double> z) const;
};

struct OrbitOptions {
  int max_moves = 8;
  std::optional<Region> region;
  std::size_t max_states = 500'000;
  int threads = 1;
};

struct OrbitEntry {
  TrochoidSpec spec;
  MoveSeq witness;
};

/// Breadth-first closure under shift and switch. Only states back on D(p,q)
/// (even switch count) are returned, sorted by key. States whose anchor
/// leaves the region are dropped.
std::vector<OrbitEntry> orbit_bfs(const TrochoidSpec& spec, const OrbitOptions& opts);

}  // namespace rotcolor
