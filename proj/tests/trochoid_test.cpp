#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rotcolor/errors.hpp"
#include "rotcolor/trochoid.hpp"

using namespace rotcolor;

namespace {

using cd = std::complex<double>;

cd E(double turn) { return std::polar(1.0, 2 * std::numbers::pi * turn); }

TrochoidSpec unit_spec(int p, int q, int k, int l) {
  return TrochoidSpec{p, q, k, l, Point(), RationalTurn(), Rational(1)};
}

std::vector<TrochoidSpec> all_specs(std::initializer_list<std::pair<int, int>> grid) {
  std::vector<TrochoidSpec> out;
  for (auto [p, q] : grid) {
    for (int k = 1; k < std::abs(p); ++k) {
      for (int l = 1; l < std::abs(q); ++l) out.push_back(unit_spec(p, q, k, l));
    }
  }
  return out;
}

// Float trochoid straight from the rotation recipe.
std::vector<std::vector<cd>> float_trochoid(int m, int k, int n, int l, cd anchor, cd edge) {
  auto walk = [&](int verts, int step) {
    std::vector<cd> v{anchor};
    for (int j = 0; j + 1 < verts; ++j) v.push_back(v.back() + edge * E(double(step) * j / verts));
    return v;
  };
  const auto base = walk(n, l);
  std::vector<std::vector<cd>> polys{walk(m, k)};
  const double th = double(l) / n - double(k) / m;
  for (int i = 1; i < n; ++i) {
    std::vector<cd> next;
    for (cd z : polys.back()) next.push_back((z - base[i % n]) * E(th) + base[i % n]);
    polys.push_back(next);
  }
  return polys;
}

std::vector<std::string> vertex_keys(const TrochoidSpec& s, int level, const Point* c = nullptr,
                                     RationalTurn t = {}) {
  const Trochoid tr = build_trochoid(s);
  std::vector<std::string> out;
  auto add = [&](const Point& z) { out.push_back((c ? rotate(z, *c, t) : z).value.lift(level).key()); };
  for (const auto& v : tr.base) add(v);
  for (const auto& poly : tr.polygons) {
    for (const auto& v : poly) add(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::initializer_list<std::pair<int, int>> kGrid{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 4},
                                                        {4, 3}, {3, 5}, {4, 5}};

}  // namespace

TEST(Theta, Examples) {
  EXPECT_TRUE(theta(5, 2, 5, 2).is_zero());
  EXPECT_EQ(theta(4, 1, 3, 2), RationalTurn(5, 12));
  EXPECT_EQ(theta(3, 1, 2, 1), RationalTurn(1, 6));
}

TEST(Theta, AgreesWithPrimedForm) {
  for (const auto& s : all_specs(kGrid)) {
    const RationalTurn th = theta(s.strands(), s.k, s.blocks(), s.l);
    const long long pp = s.p_prime(), qq = s.q_prime();
    EXPECT_EQ(th, RationalTurn(s.l_prime() * pp - s.k_prime() * qq, pp * qq));
    EXPECT_EQ(th.den(), pp * qq);
  }
}

TEST(BuildTrochoid, MatchesFloatOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3), dir(0, 11);
  for (auto s : all_specs(kGrid)) {
    s.anchor = Point(CycNum(c(rng)) + cyc_root(3, 1).scaled(c(rng)));
    s.direction = RationalTurn(dir(rng), 12);
    s.side = Rational(c(rng) + 5, 3);
    const Trochoid t = build_trochoid(s);
    const auto ref = float_trochoid(s.strands(), s.k, s.blocks(), s.l, s.anchor.embed(),
                                    s.side.get_d() * E(s.direction.as_double()));
    ASSERT_EQ(t.polygons.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      for (std::size_t j = 0; j < ref[i].size(); ++j) {
        EXPECT_LT(std::abs(t.polygons[i][j].embed() - ref[i][j]), 1e-9);
      }
    }
    EXPECT_TRUE(trochoid_closes(s));
  }
}

TEST(BuildTrochoid, TrefoilExample) {
  const Trochoid t = build_trochoid(unit_spec(3, 2, 1, 1));
  ASSERT_EQ(t.base.size(), 2u);
  EXPECT_EQ(t.base[1], Point(CycNum(1)));
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(t.polygons[1][j], rotate(t.polygons[0][j], Point(CycNum(1)), RationalTurn(1, 6)));
  }
  const Trochoid f5 = build_trochoid(unit_spec(4, 3, 1, 2));
  EXPECT_EQ(f5.base.size(), 3u);
  EXPECT_EQ(f5.polygons.size(), 3u);
  EXPECT_EQ(f5.polygons[0].size(), 4u);
}

TEST(DeriveColoring, ValidAndNonTrivial) {
  for (auto [p, q] : {std::pair{3, 2}, {2, 3}, {3, -2}, {-3, 4}, {5, 3}}) {
    const TorusDiagram d(p, q);
    for (int k = 1; k < d.strands(); ++k) {
      for (int l = 1; l < d.blocks(); ++l) {
        const auto c = derive_coloring(TrochoidSpec{p, q, k, l, Point(), RationalTurn(1, 4), Rational(1)});
        EXPECT_TRUE(validate_coloring(d, c));
        EXPECT_FALSE(is_trivial(c));
        for (const auto& e : c.colors) EXPECT_EQ(e.angle, theta(d.strands(), k, d.blocks(), l));
      }
    }
  }
  EXPECT_EQ(derive_coloring(unit_spec(3, 2, 1, 1)).colors[0].angle, RationalTurn(1, 6));
}

TEST(RecoverTrochoid, RoundTrip) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-4, 4), dir(0, 23);
  const auto specs = all_specs(kGrid);
  for (int t = 0; t < 20; ++t) {
    TrochoidSpec s = specs[(t * 7) % specs.size()];
    s.anchor = Point(CycNum(Rational(c(rng), 2)) + cyc_root(8, 1).scaled(c(rng)));
    s.direction = RationalTurn(dir(rng), 24);
    s.side = Rational(std::abs(c(rng)) + 1, 2);
    s.chirality = t % 3 == 0 ? Chirality::Minus : Chirality::Plus;
    const auto col = derive_coloring(s);
    const TrochoidSpec r = recover_trochoid(col);
    EXPECT_EQ(r, s);
    EXPECT_EQ(r.chirality, Chirality::Plus);
    EXPECT_EQ(derive_coloring(r), col);
  }
}

TEST(RecoverTrochoid, Rejects) {
  Coloring<RotElem> trivial{3, 2, std::vector<RotElem>(4, RotElem{Point(), RationalTurn(1, 6)})};
  EXPECT_THROW(recover_trochoid(trivial), InvalidArgument);
  auto c = derive_coloring(unit_spec(3, 2, 1, 1));
  c.colors[1].angle = RationalTurn(1, 3);
  EXPECT_THROW(recover_trochoid(c), InvalidArgument);
  auto d = derive_coloring(unit_spec(3, 2, 1, 1));
  d.colors[2].center = Point(CycNum(9));
  EXPECT_THROW(recover_trochoid(d), InvalidArgument);
}

TEST(Moves, ShiftAndSwitchCommuteWithDerive) {
  for (auto s : all_specs({{2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 5}, {3, 5}, {3, -2}, {-4, 3}})) {
    s.direction = RationalTurn(1, 5);
    const auto c = derive_coloring(s);
    EXPECT_EQ(derive_coloring(shift_spec(s)), shift_generic(c));
    EXPECT_EQ(derive_coloring(switch_spec(s)), switch_generic(c));
  }
}

TEST(Moves, Examples) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  const TrochoidSpec sw = switch_spec(s);
  EXPECT_EQ(sw.p, 2);
  EXPECT_EQ(sw.q, 3);
  EXPECT_EQ(sw.k, 1);
  EXPECT_EQ(sw.l, 2);
  EXPECT_EQ(switch_spec(sw), s);
  // |q| shifts keep every vertex set.
  for (const auto& t : all_specs({{3, 2}, {4, 3}, {3, 5}})) {
    TrochoidSpec x = t;
    for (int i = 0; i < t.blocks(); ++i) x = shift_spec(x);
    const int level = 4 * t.session_level();
    EXPECT_EQ(vertex_keys(x, level), vertex_keys(t, level));
  }
  // (3,2,1,1): one shift moves P0 onto the other triangle copy.
  const Trochoid a = build_trochoid(s);
  const Trochoid b = build_trochoid(shift_spec(s));
  EXPECT_EQ(b.polygons[0][2], a.polygons[1][0]);
}

TEST(FundamentalDeformation, RotationAboutCenterWithOrderPQ) {
  for (const auto& s : all_specs(kGrid)) {
    const int level = 4 * s.session_level();
    const RationalTurn th = theta(s.strands(), s.k, s.blocks(), s.l);
    const Point c = center_point(s);
    const TrochoidSpec f = fundamental_deformation(s);
    EXPECT_EQ(vertex_keys(f, level), vertex_keys(s, level, &c, th));
    EXPECT_EQ(center_point(f), c);
    const auto base = vertex_keys(s, level);
    const int g = s.p_prime() * s.q_prime();
    TrochoidSpec x = s;
    for (int i = 1; i < g; ++i) {
      x = fundamental_deformation(x);
      EXPECT_NE(vertex_keys(x, level), base) << "early return at " << i;
    }
    x = fundamental_deformation(x);
    EXPECT_EQ(vertex_keys(x, level), base);
    EXPECT_EQ(x, s);
  }
}

TEST(CenterPoint, Examples) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  EXPECT_EQ(center_point(s), Point());
  EXPECT_EQ(center_point(shift_spec(s)), Point(CycNum(1)));
  const Trochoid a = build_trochoid(s);
  const Trochoid b = build_trochoid(fundamental_deformation(s));
  EXPECT_NE(std::find(a.base.begin(), a.base.end(), center_point(s)), a.base.end());
  EXPECT_NE(std::find(b.base.begin(), b.base.end(), center_point(s)), b.base.end());
}

TEST(Lattice, Generators) {
  const auto g32 = lattice_generators(lattice_of(unit_spec(3, 2, 1, 1)));
  EXPECT_EQ(g32.size(), 6u);
  for (int s = 0; s < 6; ++s) EXPECT_EQ(g32[s], cyc_root(6, s));
  const auto g35 = lattice_generators(lattice_of(unit_spec(3, 5, 1, 1)));
  EXPECT_EQ(g35.size(), 30u);
  for (const auto& v : g35) EXPECT_EQ(abs_sq(v), CycNum(1));
}

TEST(Lattice, Contains) {
  TrochoidSpec s = unit_spec(3, 2, 1, 1);
  s.anchor = Point(CycNum(Rational(1, 3)));
  s.direction = RationalTurn(1, 8);
  const LatticeSpec lat = lattice_of(s);
  const auto v = lattice_generators(lat);
  EXPECT_TRUE(lattice_contains(lat, lat.base_point));
  EXPECT_TRUE(lattice_contains(lat, lat.base_point + v[0] + v[1]));
  EXPECT_FALSE(lattice_contains(lat, lat.base_point + v[0].scaled(Rational(1, 2))));
  EXPECT_FALSE(lattice_contains(lat, lat.base_point + cyc_root(4, 1)));
}

TEST(Lattice, UnitNeighbors) {
  // alpha = 3: Eisenstein, alpha = 2: square.
  const LatticeSpec eis = lattice_of(unit_spec(3, 2, 1, 1));
  EXPECT_EQ(unit_neighbors(eis, eis.base_point, true).size(), 6u);
  LatticeSpec sq{2, Point(), RationalTurn(), Rational(1)};
  EXPECT_EQ(unit_neighbors(sq, Point(CycNum(1)), true).size(), 4u);
  for (long long alpha : {2, 3, 4, 6}) {
    LatticeSpec lat{alpha, Point(), RationalTurn(1, 7), Rational(2)};
    const Point w = lat.base_point + lattice_generators(lat)[1];
    const auto nb = unit_neighbors(lat, w, true);
    EXPECT_EQ(nb.size(), static_cast<std::size_t>(2 * alpha));
    EXPECT_NE(std::find(nb.begin(), nb.end(), lat.base_point), nb.end());
  }
  EXPECT_THROW(unit_neighbors(eis, Point(CycNum(Rational(1, 2)))), InvalidArgument);
}

TEST(VSets, EvenAndOdd) {
  const auto [a, b] = v_sets_sigma_tau(unit_spec(3, 2, 1, 1), 0);
  EXPECT_EQ(a.size(), 6u);
  EXPECT_EQ(a, b);
  const auto [c, d] = v_sets_sigma_tau(unit_spec(3, 5, 1, 1), 0);
  EXPECT_EQ(c.size(), 15u);
  EXPECT_EQ(d.size(), 15u);
  std::set<int> all(c.begin(), c.end());
  all.insert(d.begin(), d.end());
  EXPECT_EQ(all.size(), 30u);
  for (const auto& s : all_specs(kGrid)) {
    const auto [x, y] = v_sets_sigma_tau(s, 1);
    EXPECT_EQ(static_cast<int>(x.size()), s.p_prime() * s.q_prime());
    EXPECT_EQ(static_cast<int>(y.size()), s.p_prime() * s.q_prime());
  }
}

TEST(Classify, Examples) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  const auto r = classify(s, shift_spec(s));
  EXPECT_EQ(r.verdict, Verdict::Equivalent);
  EXPECT_EQ(r.witness.moves, std::vector<Move>{Move::Shift});
  EXPECT_EQ(replay(r.witness, derive_coloring(s)), derive_coloring(shift_spec(s)));
  EXPECT_TRUE(classify(s, s).witness.empty());

  const auto kl = classify(s, unit_spec(3, 2, 2, 1));
  EXPECT_EQ(kl.verdict, Verdict::NotEquivalent);
  EXPECT_EQ(kl.reason, Reason::KLMismatch);

  TrochoidSpec big = s;
  big.side = 2;
  const auto side = classify(s, big);
  EXPECT_EQ(side.reason, Reason::SideLengthMismatch);
  const TorusDiagram d(3, 2);
  EXPECT_EQ(total_weight(d, derive_coloring(big)), total_weight(d, derive_coloring(s)).times(4));

  TrochoidSpec odd = unit_spec(3, 5, 1, 1);
  TrochoidSpec partner = odd;
  partner.chirality = Chirality::Minus;
  EXPECT_EQ(classify(odd, partner).verdict, Verdict::Undetermined);

  TrochoidSpec off = s;
  off.anchor = Point(CycNum(Rational(1, 2)));
  const auto lm = classify(s, off);
  EXPECT_EQ(lm.verdict, Verdict::NotEquivalent);
  EXPECT_EQ(lm.reason, Reason::LatticeMismatch);

  EXPECT_THROW(classify(s, unit_spec(2, 3, 1, 1)), InstanceMismatch);
}

TEST(Classify, WitnessesReplayExactly) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> c(-2, 2);
  for (const auto& s : all_specs(kGrid)) {
    const LatticeSpec lat = lattice_of(s);
    const auto gens = lattice_generators(lat);
    TrochoidSpec b = s;
    CycNum off;
    for (int j = 0; j < 3; ++j) off += gens[(j * 5) % gens.size()].scaled(c(rng));
    b.anchor = s.anchor + off;
    const int g = s.p_prime() * s.q_prime();
    b.direction = RationalTurn(c(rng) + 2, g);
    const auto r = classify(s, b);
    if (g % 2 == 1 && (b.direction.den() != 1 && g % b.direction.den() != 0)) continue;
    ASSERT_EQ(r.verdict, Verdict::Equivalent) << s.p << s.q << s.k << s.l << " " << r.note;
    EXPECT_TRUE(r.witness.even());
    EXPECT_EQ(replay(r.witness, derive_coloring(s)), derive_coloring(b));
  }
}

TEST(Classify, ChiralityPartners) {
  for (const auto& s : all_specs(kGrid)) {
    TrochoidSpec m = s;
    m.chirality = Chirality::Minus;
    const auto r = classify(s, m);
    const bool even = (s.p_prime() * s.q_prime()) % 2 == 0;
    EXPECT_EQ(r.verdict, even ? Verdict::Equivalent : Verdict::Undetermined);
    if (even) EXPECT_EQ(replay(r.witness, derive_coloring(s)), derive_coloring(m));
  }
}

TEST(Replay, Examples) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  const auto c = derive_coloring(s);
  EXPECT_EQ(replay(MoveSeq{}, c), c);
  const auto twice = replay(MoveSeq{{Move::Switch, Move::Switch}}, c);
  EXPECT_EQ(twice.p, 3);
  EXPECT_EQ(recover_trochoid(twice).k, 1);
  const TorusDiagram d(3, 2);
  EXPECT_EQ(total_weight(d, twice), total_weight(d, c));
}

TEST(OrbitBfs, MembershipAndWeights) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  OrbitOptions opts;
  opts.max_moves = 8;
  const auto states = orbit_bfs(s, opts);
  ASSERT_FALSE(states.empty());
  const LatticeSpec lat = lattice_of(s);
  const TorusDiagram d(3, 2);
  const AreaValue w = total_weight(d, derive_coloring(s));
  for (const auto& e : states) {
    EXPECT_EQ(e.spec.p, 3);
    EXPECT_TRUE(e.witness.even());
    EXPECT_TRUE(lattice_contains(lat, e.spec.anchor));
    EXPECT_EQ(6 % (e.spec.direction - lat.base_direction).den(), 0);
    EXPECT_EQ(total_weight(d, derive_coloring(e.spec)), w);
    EXPECT_EQ(replay(e.witness, s), e.spec);
  }
}

TEST(OrbitBfs, DeepSearchMovesTheAnchor) {
  const TrochoidSpec s = unit_spec(3, 2, 1, 1);
  OrbitOptions opts;
  opts.max_moves = 4 * 6;
  opts.region = Region{-3, 3, -3, 3};
  const auto states = orbit_bfs(s, opts);
  const LatticeSpec lat = lattice_of(s);
  bool moved = false;
  for (const auto& e : states) {
    moved |= !(e.spec.anchor == s.anchor);
    EXPECT_TRUE(lattice_contains(lat, e.spec.anchor));
  }
  EXPECT_TRUE(moved);
}

TEST(OrbitBfs, DeterministicAcrossThreads) {
  TrochoidSpec s = unit_spec(4, 3, 1, 1);
  OrbitOptions one;
  one.max_moves = 10;
  OrbitOptions many = one;
  many.threads = 4;
  const auto a = orbit_bfs(s, one);
  const auto b = orbit_bfs(s, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].spec, b[i].spec);
    EXPECT_EQ(a[i].witness, b[i].witness);
  }
}

TEST(OrbitBfs, Budget) {
  OrbitOptions opts;
  opts.max_moves = 40;
  opts.max_states = 100;
  try {
    orbit_bfs(unit_spec(4, 3, 1, 1), opts);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.frontier(), 0u);
  }
}

// Every admissible spec near the start is reached by the move search, and
// classify agrees with a verified witness.
TEST(OrbitBfs, CompletenessEvenCases) {
  for (const auto& s : all_specs({{3, 2}, {2, 3}, {3, 4}, {4, 3}})) {
    const int g = s.p_prime() * s.q_prime();
    if (g % 2 != 0) continue;
    OrbitOptions opts;
    opts.max_moves = 6 * g;
    opts.region = Region{-2, 2, -2, 2};
    const auto states = orbit_bfs(s, opts);
    std::set<std::string> reached;
    for (const auto& e : states) reached.insert(e.spec.key());

    // Targets: anchor offsets sum c_j zeta_g^j with |c_j| <= 1 in the unit box,
    // directions in mu_g.
    const int phi = static_cast<int>(euler_phi(g));
    std::vector<int> coeff(phi, -1);
    std::size_t targets = 0;
    while (true) {
      std::vector<Rational> cs(coeff.begin(), coeff.end());
      const CycNum off = CycNum::from_canonical(g, cs);
      const auto z = off.embed();
      if (std::abs(z.real()) <= 1 + 1e-9 && std::abs(z.imag()) <= 1 + 1e-9) {
        for (int r = 0; r < g; ++r) {
          TrochoidSpec b = s;
          b.anchor = Point(off);
          b.direction = RationalTurn(r, g);
          ++targets;
          EXPECT_TRUE(reached.count(b.key())) << s.p << s.q << s.k << s.l << " " << off.to_string() << " " << r;
          const auto cls = classify(s, b);
          ASSERT_EQ(cls.verdict, Verdict::Equivalent);
          EXPECT_EQ(replay(cls.witness, derive_coloring(s)), derive_coloring(b));
        }
      }
      int pos = phi - 1;
      while (pos >= 0 && coeff[pos] == 1) coeff[pos--] = -1;
      if (pos < 0) break;
      ++coeff[pos];
    }
    EXPECT_GT(targets, static_cast<std::size_t>(g));
  }
}
