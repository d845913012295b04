#include "rotcolor/trochoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "rotcolor/errors.hpp"

namespace rotcolor {

// ---------------------------------------------------------------------------
// TrochoidSpec

void TrochoidSpec::validate() const {
  (void)TorusDiagram(p, q);
  const int m = std::abs(p);
  const int n = std::abs(q);
  if (k < 1 || k > m - 1) throw InvalidArgument("k must lie in [1, |p|-1], got " + std::to_string(k));
  if (l < 1 || l > n - 1) throw InvalidArgument("l must lie in [1, |q|-1], got " + std::to_string(l));
  if (sgn(side) <= 0) throw InvalidArgument("side length must be positive");
}

TrochoidSpec TrochoidSpec::normalized() const {
  TrochoidSpec s = *this;
  s.side.canonicalize();
  if (chirality == Chirality::Plus) return s;
  s.anchor = anchor + unit(direction).scaled(side);
  s.direction = direction + RationalTurn(1, 2);
  s.chirality = Chirality::Plus;
  return s;
}

int TrochoidSpec::strands() const { return std::abs(p); }
int TrochoidSpec::blocks() const { return std::abs(q); }
int TrochoidSpec::p_prime() const { return strands() / std::gcd(strands(), k); }
int TrochoidSpec::q_prime() const { return blocks() / std::gcd(blocks(), l); }
int TrochoidSpec::k_prime() const { return k / std::gcd(strands(), k); }
int TrochoidSpec::l_prime() const { return l / std::gcd(blocks(), l); }

long long TrochoidSpec::alpha() const {
  const long long g = static_cast<long long>(p_prime()) * q_prime();
  return g % 2 == 0 ? g / 2 : g;
}

int TrochoidSpec::session_level() const {
  const TrochoidSpec s = normalized();
  long long level = 2LL * p_prime() * q_prime();
  for (long long f : {static_cast<long long>(strands()), static_cast<long long>(blocks()), 4LL,
                      static_cast<long long>(s.direction.den()),
                      static_cast<long long>(s.anchor.value.level())}) {
    level = std::lcm(level, f);
  }
  if (level > level_cap()) {
    throw LevelError("spec needs cyclotomic level " + std::to_string(level) + " above the cap " +
                         std::to_string(level_cap()),
                     static_cast<int>(std::min<long long>(level, 1LL << 30)));
  }
  return static_cast<int>(level);
}

PolygonSpec TrochoidSpec::base_polygon() const {
  const TrochoidSpec s = normalized();
  return PolygonSpec{blocks(), l, s.anchor, s.direction, s.side};
}

PolygonSpec TrochoidSpec::start_polygon() const {
  const TrochoidSpec s = normalized();
  return PolygonSpec{strands(), k, s.anchor, s.direction, s.side};
}

CycNum TrochoidSpec::edge() const {
  const TrochoidSpec s = normalized();
  return unit(s.direction).scaled(s.side);
}

bool operator==(const TrochoidSpec& a, const TrochoidSpec& b) {
  const TrochoidSpec x = a.normalized();
  const TrochoidSpec y = b.normalized();
  return x.p == y.p && x.q == y.q && x.k == y.k && x.l == y.l && x.side == y.side &&
         x.direction == y.direction && x.anchor == y.anchor;
}

namespace {

std::string key_at(const TrochoidSpec& s, int level) {
  return std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.k) + "," +
         std::to_string(s.l) + "|" + s.side.get_str() + "|" + s.direction.to_string() + "|" +
         s.anchor.value.lift(level).key();
}

}  // namespace

std::string TrochoidSpec::key() const {
  const TrochoidSpec s = normalized();
  return key_at(s, s.session_level());
}

RationalTurn theta(int m, int k, int n, int l) {
  if (m < 2 || n < 2) throw InvalidArgument("theta needs m, n >= 2");
  return RationalTurn(static_cast<std::int64_t>(l) * m - static_cast<std::int64_t>(k) * n,
                      static_cast<std::int64_t>(m) * n);
}

// ---------------------------------------------------------------------------
// Construction

Trochoid build_trochoid(const TrochoidSpec& spec) {
  spec.validate();
  const TrochoidSpec s = spec.normalized();
  (void)s.session_level();
  const int m = s.strands();
  const int n = s.blocks();
  Trochoid t;
  t.angle = theta(m, s.k, n, s.l);
  t.base = polygon_vertices(s.base_polygon());
  t.polygons.push_back(polygon_vertices(s.start_polygon()));
  for (int i = 1; i < n; ++i) {
    const Point& c = t.base[i % n];
    std::vector<Point> next;
    next.reserve(m);
    for (const Point& z : t.polygons.back()) next.push_back(rotate(z, c, t.angle));
    t.polygons.push_back(std::move(next));
  }
  for (int i = 0; i < n; ++i) {
    if (!(t.polygons[i][i % m] == t.base[i % n]) ||
        !(t.polygons[i][(i + 1) % m] == t.base[(i + 1) % n])) {
      throw ConsistencyError("trochoid step " + std::to_string(i) +
                             " lost contact with the base polygon");
    }
  }
  return t;
}

bool trochoid_closes(const TrochoidSpec& spec) {
  const Trochoid t = build_trochoid(spec);
  const int m = spec.strands();
  const int n = spec.blocks();
  const Point& c = t.base[0];
  for (int j = 0; j < m; ++j) {
    if (!(rotate(t.polygons[n - 1][(j + n) % m], c, t.angle) == t.polygons[0][j])) return false;
  }
  return true;
}

Coloring<RotElem> derive_coloring(const TrochoidSpec& spec) {
  const Trochoid t = build_trochoid(spec);
  const int m = spec.strands();
  const int n = spec.blocks();
  Coloring<RotElem> c{spec.p, spec.q, {}};
  c.colors.reserve(static_cast<std::size_t>(n) * (m - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j < m; ++j) c.colors.push_back(RotElem{t.polygons[i][(i + j + 1) % m], t.angle});
  }
  return c;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(sqrt(num), sqrt(den));
}

// The turn t with e(t) = u, for a root of unity u.
std::optional<RationalTurn> turn_of(const CycNum& u) {
  const int big = 2 * u.level();
  for (int j = 0; j < big; ++j) {
    if (u == cyc_root(big, j)) return RationalTurn(j, big);
  }
  return std::nullopt;
}

}  // namespace

TrochoidSpec recover_trochoid(const Coloring<RotElem>& c) {
  const TorusDiagram d(c.p, c.q);
  if (static_cast<int>(c.colors.size()) != d.arc_count()) {
    throw InvalidArgument("coloring has the wrong number of arcs");
  }
  if (is_trivial(c)) throw InvalidArgument("trivial coloring carries no trochoid");
  const RationalTurn angle = c.colors.front().angle;
  for (const RotElem& e : c.colors) {
    if (e.angle != angle) throw InvalidArgument("colors have different second components");
  }
  const int m = d.strands();
  const int n = d.blocks();
  std::optional<std::pair<int, int>> kl;
  for (int k = 1; k < m && !kl; ++k) {
    for (int l = 1; l < n && !kl; ++l) {
      if (theta(m, k, n, l) == angle) kl = {k, l};
    }
  }
  if (!kl) throw InvalidArgument("rotation angle " + angle.to_string() + " matches no (k, l)");
  const Point v0 = c.at(d, 0, m - 1).center;
  const Point v1 = c.at(d, 1, m - 1).center;
  const CycNum e = v1 - v0;
  const auto side_sq = abs_sq(e).as_rational();
  const auto side = side_sq ? rational_sqrt(*side_sq) : std::nullopt;
  if (!side || sgn(*side) == 0) throw InvalidArgument("edge length is not a positive rational");
  const auto dir = turn_of(e.scaled(1 / *side));
  if (!dir) throw InvalidArgument("edge direction is not a root of unity");
  TrochoidSpec spec{c.p, c.q, kl->first, kl->second, v0, *dir, *side, Chirality::Plus};
  if (!(derive_coloring(spec) == c)) throw InvalidArgument("colors are not carried by a trochoid");
  return spec;
}

// ---------------------------------------------------------------------------
// Moves

TrochoidSpec shift_spec(const TrochoidSpec& spec) {
  TrochoidSpec s = spec.normalized();
  s.anchor = s.anchor + s.edge();
  s.direction = s.direction + RationalTurn(s.l, s.blocks());
  return s;
}

TrochoidSpec switch_spec(const TrochoidSpec& spec) {
  const TrochoidSpec s = spec.normalized();
  return TrochoidSpec{s.q,
                      s.p,
                      s.blocks() - s.l,
                      s.strands() - s.k,
                      s.anchor + s.edge(),
                      s.direction + RationalTurn(1, 2),
                      s.side,
                      Chirality::Plus};
}

TrochoidSpec fundamental_deformation(const TrochoidSpec& spec) {
  return shift_spec(switch_spec(shift_spec(switch_spec(spec))));
}

Point center_point(const TrochoidSpec& spec) { return spec.normalized().anchor; }

std::size_t MoveSeq::switch_count() const {
  return static_cast<std::size_t>(std::count(moves.begin(), moves.end(), Move::Switch));
}

const char* move_name(Move m) { return m == Move::Shift ? "shift" : "switch"; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::KLMismatch: return "KLMismatch";
    case Reason::SideLengthMismatch: return "SideLengthMismatch";
    case Reason::LatticeMismatch: return "LatticeMismatch";
  }
  return "?";
}

TrochoidSpec replay(const MoveSeq& moves, const TrochoidSpec& spec) {
  TrochoidSpec s = spec.normalized();
  for (Move m : moves.moves) s = (m == Move::Shift) ? shift_spec(s) : switch_spec(s);
  return s;
}

// ---------------------------------------------------------------------------
// Lattice

LatticeSpec lattice_of(const TrochoidSpec& spec) {
  const TrochoidSpec s = spec.normalized();
  return LatticeSpec{s.alpha(), s.anchor, s.direction, s.side};
}

std::vector<CycNum> lattice_generators(const LatticeSpec& lat) {
  const int two_alpha = static_cast<int>(2 * lat.alpha);
  const CycNum e = unit(lat.base_direction).scaled(lat.side);
  std::vector<CycNum> out;
  out.reserve(two_alpha);
  for (int s = 0; s < two_alpha; ++s) out.push_back(e * cyc_root(two_alpha, s));
  return out;
}

namespace {

// (w - base) / (side * e(direction)) expressed at level 2 alpha, when it lies there.
std::optional<CycNum> lattice_coordinates(const LatticeSpec& lat, const Point& w) {
  const CycNum x = ((w - lat.base_point) * unit(-lat.base_direction)).scaled(1 / lat.side);
  return x.restrict_to(static_cast<int>(2 * lat.alpha));
}

}  // namespace

bool lattice_contains(const LatticeSpec& lat, const Point& w) {
  const auto x = lattice_coordinates(lat, w);
  return x && x->is_integral();
}

std::size_t count_unit_lattice_points(const LatticeSpec& lat, const Point& w, int bound) {
  if (!lattice_contains(lat, w)) throw InvalidArgument("point is not in the lattice");
  return unit_elements_in_box(static_cast<int>(2 * lat.alpha), bound).size();
}

std::vector<Point> unit_neighbors(const LatticeSpec& lat, const Point& w, bool verify) {
  if (!lattice_contains(lat, w)) throw InvalidArgument("point is not in the lattice");
  std::vector<Point> out;
  for (const CycNum& v : lattice_generators(lat)) out.push_back(w + v);
  if (verify) {
    const std::size_t found = count_unit_lattice_points(lat, w);
    if (found != static_cast<std::size_t>(2 * lat.alpha)) {
      throw ConsistencyError("found " + std::to_string(found) + " lattice points at unit distance, expected " +
                             std::to_string(2 * lat.alpha));
    }
    const CycNum side_sq(lat.side * lat.side);
    for (const Point& z : out) {
      if (!lattice_contains(lat, z) || !(abs_sq(z - w) == side_sq)) {
        throw ConsistencyError("generator step left the lattice or the unit circle");
      }
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> v_sets_sigma_tau(const TrochoidSpec& spec, int sigma) {
  const long long two_alpha = 2 * spec.alpha();
  const long long pp = spec.p_prime();
  const long long qq = spec.q_prime();
  const long long step_q = two_alpha / qq * spec.l_prime();
  const long long step_p = two_alpha / pp * spec.k_prime();
  auto mod = [two_alpha](long long v) { return static_cast<int>(((v % two_alpha) + two_alpha) % two_alpha); };
  const long long beta = mod(step_q - step_p);
  const long long offset_eps = (qq - 1) * step_q + spec.alpha();
  const int tau = mod(sigma + offset_eps);
  auto orbit = [&](int start) {
    std::vector<int> out;
    for (long long j = 0; j < pp * qq; ++j) out.push_back(mod(start + j * beta));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return {orbit(mod(sigma)), orbit(tau)};
}

// ---------------------------------------------------------------------------
// Classification

namespace {

long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const long long qt = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - qt * a1);
    std::tie(x, x1) = std::make_pair(x1, x - qt * x1);
  }
  if (g != 1) throw ConsistencyError("rotation step is not invertible modulo p'q'");
  return ((x % m) + m) % m;
}

// Assembles shifts and fundamental deformations taking a to b. Both are
// normalized, share (p, q, k, l, side), b's direction lies in
// e(a.direction) * mu_g and b's anchor offset lies in side * e(a.direction) * Z[zeta_g].
MoveSeq build_witness(const TrochoidSpec& a, const TrochoidSpec& b, const CycNum& offset) {
  const long long g = static_cast<long long>(a.p_prime()) * a.q_prime();
  const RationalTurn th = theta(a.strands(), a.k, a.blocks(), a.l);
  if (th.den() != g) throw ConsistencyError("theta does not have denominator p'q'");
  const long long h_inv = mod_inverse(th.num(), g);
  const RationalTurn shift_turn(a.l, a.blocks());

  MoveSeq w;
  RationalTurn dir = a.direction;
  auto rotate_to = [&](const RationalTurn& target) {
    const RationalTurn delta = target - dir;
    if (g % delta.den() != 0) throw ConsistencyError("target direction outside e(d) * mu_g");
    const long long steps = (delta.num() * (g / delta.den())) % g * h_inv % g;
    for (long long r = 0; r < steps; ++r) {
      for (Move mv : {Move::Switch, Move::Shift, Move::Switch, Move::Shift}) w.moves.push_back(mv);
    }
    dir = target;
  };

  const auto coeffs = offset.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const long long c = coeffs[j].get_num().get_si();
    const RationalTurn u = a.direction + RationalTurn(static_cast<std::int64_t>(j), g);
    for (long long t = 0; t < std::abs(c); ++t) {
      if (c > 0) {
        rotate_to(u);
        w.moves.push_back(Move::Shift);
        dir = u + shift_turn;
      } else {
        rotate_to(u + shift_turn);
        for (int s = 0; s + 1 < a.blocks(); ++s) w.moves.push_back(Move::Shift);
        dir = u;
      }
    }
  }
  rotate_to(b.direction);
  return w;
}

}  // namespace

ClassificationResult classify(const TrochoidSpec& spec_a, const TrochoidSpec& spec_b) {
  if (spec_a.p != spec_b.p || spec_a.q != spec_b.q) {
    throw InstanceMismatch("classify needs both specs on the same D(p,q)");
  }
  spec_a.validate();
  spec_b.validate();
  ClassificationResult res;
  if (spec_a.k != spec_b.k || spec_a.l != spec_b.l) {
    res.verdict = Verdict::NotEquivalent;
    res.reason = Reason::KLMismatch;
    res.note = "types (k,l) differ, so the colorings have different rotation angles";
    return res;
  }
  if (spec_a.side != spec_b.side) {
    res.verdict = Verdict::NotEquivalent;
    res.reason = Reason::SideLengthMismatch;
    res.note = "side lengths differ";
    return res;
  }
  const TrochoidSpec a = spec_a.normalized();
  const TrochoidSpec b = spec_b.normalized();
  const long long g = static_cast<long long>(a.p_prime()) * a.q_prime();
  const bool even = g % 2 == 0;

  const RationalTurn delta = b.direction - a.direction;
  const bool direction_ok = g % delta.den() == 0;
  const CycNum raw = ((b.anchor - a.anchor) * unit(-a.direction)).scaled(1 / a.side);
  const auto offset = raw.restrict_to(static_cast<int>(g));
  const bool anchor_ok = offset && offset->is_integral();

  if (!direction_ok || !anchor_ok) {
    if (even) {
      res.verdict = Verdict::NotEquivalent;
      res.reason = Reason::LatticeMismatch;
      res.note = !anchor_ok ? "anchor is outside the lattice W1" : "edge direction is outside V";
    } else {
      res.verdict = Verdict::Undetermined;
      res.note = "p'q' is odd: target is not reachable by the constructive move set and the "
                 "equivalence class is open";
    }
    return res;
  }
  res.witness = build_witness(a, b, *offset);
  if (!(replay(res.witness, a) == b)) throw ConsistencyError("classification witness does not replay");
  res.verdict = Verdict::Equivalent;
  res.note = std::to_string(res.witness.size()) + (res.witness.size() == 1 ? " move" : " moves");
  return res;
}

// ---------------------------------------------------------------------------
// Orbit search

bool Region::contains(std::complex<double> z) const {
  constexpr double eps = 1e-9;
  return z.real() >= xmin - eps && z.real() <= xmax + eps && z.imag() >= ymin - eps &&
         z.imag() <= ymax + eps;
}

namespace {

struct Successor {
  TrochoidSpec spec;
  std::string key;
  bool inside = true;
};

}  // namespace

std::vector<OrbitEntry> orbit_bfs(const TrochoidSpec& spec, const OrbitOptions& opts) {
  spec.validate();
  const TrochoidSpec start = spec.normalized();
  const int level = static_cast<int>(
      std::lcm(std::lcm(static_cast<long long>(start.session_level()), 2LL * start.strands()),
               2LL * start.blocks()));
  if (level > level_cap()) throw LevelError("orbit level exceeds the cap", level);

  std::vector<OrbitEntry> states{{start, {}}};
  std::unordered_set<std::string> seen{key_at(start, level)};
  std::vector<std::size_t> frontier{0};
  const int threads = std::max(1, opts.threads);

  for (int depth = 0; depth < opts.max_moves && !frontier.empty(); ++depth) {
    std::vector<std::array<Successor, 2>> succ(frontier.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f) {
        const TrochoidSpec& s = states[frontier[f]].spec;
        succ[f][0].spec = shift_spec(s);
        succ[f][1].spec = switch_spec(s);
        for (auto& x : succ[f]) {
          x.inside = !opts.region || opts.region->contains(x.spec.anchor.embed());
          if (x.inside) x.key = key_at(x.spec, level);
        }
      }
    };
    if (threads == 1 || frontier.size() < 64) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
        pool.emplace_back(work, lo, std::min(frontier.size(), lo + chunk));
      }
      for (auto& t : pool) t.join();
    }
    std::vector<std::size_t> next;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (int mv = 0; mv < 2; ++mv) {
        Successor& x = succ[f][mv];
        if (!x.inside || !seen.insert(x.key).second) continue;
        MoveSeq w = states[frontier[f]].witness;
        w.moves.push_back(mv == 0 ? Move::Shift : Move::Switch);
        states.push_back({std::move(x.spec), std::move(w)});
        next.push_back(states.size() - 1);
      }
    }
    if (states.size() > opts.max_states) {
      throw BudgetExceeded("orbit search passed " + std::to_string(opts.max_states) + " states",
                           next.size());
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].spec.p == start.p && states[i].spec.q == start.q) {
      order.emplace_back(key_at(states[i].spec, level), i);
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<OrbitEntry> out;
  out.reserve(order.size());
  for (const auto& [key, i] : order) out.push_back(std::move(states[i]));
  return out;
}

}  // namespace rotcolor
