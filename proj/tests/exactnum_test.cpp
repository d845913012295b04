#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "rotcolor/errors.hpp"
#include "rotcolor/exactnum.hpp"

using namespace rotcolor;

namespace {

std::complex<double> float_root(int n, long long j) {
  const double a = 2.0 * std::numbers::pi * double(j) / double(n);
  return {std::cos(a), std::sin(a)};
}

CycNum random_integral(std::mt19937_64& rng, int level, int bound = 3) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::vector<Rational> exps(level);
  for (auto& e : exps) e = c(rng);
  return CycNum::from_exponents(level, exps);
}

CycNum rat(long a, long b = 1) { return CycNum(Rational(a, b)); }

}  // namespace

TEST(CycloPoly, SmallLevels) {
  EXPECT_EQ(cyclo_poly(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclo_poly(3), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(cyclo_poly(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclo_poly(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclo_poly(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
  EXPECT_EQ(p105[41], -2);
}

TEST(CycloPoly, VanishesAtRoot) {
  for (int n : {5, 6, 8, 9, 12, 15, 24}) {
    const auto& poly = cyclo_poly(n);
    std::vector<Rational> exps(poly.begin(), poly.end());
    EXPECT_TRUE(CycNum::from_exponents(n, exps).is_zero()) << n;
    EXPECT_EQ(static_cast<long long>(poly.size()) - 1, euler_phi(n));
  }
}

TEST(CycRoot, Examples) {
  const CycNum i = cyc_root(4, 1);
  EXPECT_EQ(i.level(), 4);
  ASSERT_EQ(i.coeffs().size(), 2u);
  EXPECT_EQ(i.coeffs()[0], 0);
  EXPECT_EQ(i.coeffs()[1], 1);
  EXPECT_EQ(cyc_root(3, 0), CycNum(1));
  EXPECT_EQ(cyc_root(3, 2), -CycNum(1) - cyc_root(3, 1));
  EXPECT_EQ(cyc_root(5, -1), cyc_root(5, 4));
  EXPECT_EQ(cyc_root(6, 1).to_string(), "cyc6[0 1]");
}

TEST(CycArith, Examples) {
  EXPECT_TRUE((CycNum(1) + cyc_root(3, 1) + cyc_root(3, 2)).is_zero());
  const CycNum i = cyc_root(4, 1);
  EXPECT_EQ((CycNum(1) + i) * (CycNum(1) - i), CycNum(2));
  EXPECT_EQ(i * i, CycNum(-1));
  // Mixed levels lift to the lcm: zeta_3 * zeta_4 = zeta_12^7.
  EXPECT_EQ(cyc_root(3, 1) * cyc_root(4, 1), cyc_root(12, 7));
  EXPECT_EQ(cyc_root(8, 2), i);
  EXPECT_THROW(CycNum(1) / CycNum(0), DivisionByZero);
}

TEST(CycArith, DivisionInverts) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const int level = std::vector<int>{3, 5, 7, 8, 12, 15}[t % 6];
    const CycNum a = random_integral(rng, level);
    const CycNum b = random_integral(rng, level);
    if (b.is_zero()) continue;
    EXPECT_EQ((a / b) * b, a);
  }
}

TEST(CycArith, EmbeddingIsRingHomomorphism) {
  std::mt19937_64 rng(11);
  const std::vector<int> levels{1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24};
  std::uniform_int_distribution<std::size_t> lv(0, levels.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const CycNum a = random_integral(rng, levels[lv(rng)]);
    const CycNum b = random_integral(rng, levels[lv(rng)]);
    EXPECT_LT(std::abs((a * b).embed() - a.embed() * b.embed()), 1e-9);
    EXPECT_LT(std::abs((a + b).embed() - (a.embed() + b.embed())), 1e-9);
  }
}

TEST(CycArith, ConjugationAndNorm) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const int level = 1 + t % 24;
    const CycNum a = random_integral(rng, level);
    const CycNum b = random_integral(rng, level);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(abs_sq(a * b), abs_sq(a) * abs_sq(b));
    EXPECT_EQ(abs_sq(a), abs_sq(a.conj()));
    EXPECT_EQ(abs_sq(a).conj(), abs_sq(a));
    EXPECT_LT(std::abs(a.conj().embed() - std::conj(a.embed())), 1e-9);
  }
}

TEST(AbsSq, Examples) {
  EXPECT_EQ(abs_sq(cyc_root(7, 3)), CycNum(1));
  EXPECT_EQ(abs_sq(CycNum(1) + cyc_root(4, 1)), CycNum(2));
  EXPECT_TRUE(abs_sq(CycNum()).is_zero());
}

TEST(IsRootOfUnity, Examples) {
  EXPECT_EQ(is_root_of_unity(cyc_root(12, 5)), 12);
  EXPECT_EQ(is_root_of_unity(-cyc_root(3, 1)), 6);
  EXPECT_EQ(is_root_of_unity(CycNum(1) + cyc_root(4, 1)), std::nullopt);
  EXPECT_EQ(is_root_of_unity(CycNum(-1)), 2);
  EXPECT_THROW(is_root_of_unity(rat(1, 2)), NotIntegral);
}

TEST(Embed, Examples) {
  EXPECT_EQ(CycNum(1).embed(), std::complex<double>(1.0, 0.0));
  EXPECT_LT(std::abs(cyc_root(4, 1).embed() - std::complex<double>(0, 1)), 1e-12);
  EXPECT_LT(std::abs(cyc_root(6, 1).embed() - std::complex<double>(0.5, std::sqrt(3.0) / 2)), 1e-12);
}

TEST(Embed, ErrorBoundUpToLevel120) {
  std::mt19937_64 rng(17);
  for (int level : {7, 60, 105, 120}) {
    const CycNum a = random_integral(rng, level, 2);
    std::complex<double> direct = 0;
    double norm1 = 0;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      const double c = a.coeffs()[j].get_d();
      direct += c * float_root(level, static_cast<long long>(j));
      norm1 += std::abs(c);
    }
    EXPECT_LE(std::abs(a.embed() - direct), 1e-12 * std::max(1.0, norm1));
  }
}

TEST(LiftRestrict, RoundTrip) {
  const CycNum z = cyc_root(6, 1);
  const CycNum up = z.lift(24);
  EXPECT_EQ(up.level(), 24);
  EXPECT_EQ(up, z);
  const auto down = up.restrict_to(6);
  ASSERT_TRUE(down.has_value());
  EXPECT_EQ(down->level(), 6);
  EXPECT_EQ(*down, z);
  // zeta_3 lives in Q(zeta_6) but not in Q(i).
  EXPECT_TRUE(cyc_root(3, 1).restrict_to(6).has_value());
  EXPECT_FALSE(cyc_root(3, 1).restrict_to(4).has_value());
  EXPECT_THROW(z.lift(9), LevelError);
}

TEST(RationalTurn, Normalizes) {
  EXPECT_EQ(RationalTurn(3, 2), RationalTurn(1, 2));
  EXPECT_EQ(RationalTurn(-1, 4), RationalTurn(3, 4));
  EXPECT_EQ(RationalTurn(2, -6).to_string(), "2/3");
  EXPECT_EQ(RationalTurn(1, 3) + RationalTurn(5, 6), RationalTurn(1, 6));
  EXPECT_EQ(RationalTurn(2, 5) * 3, RationalTurn(1, 5));
  EXPECT_EQ(RationalTurn::parse("7/4"), RationalTurn(3, 4));
  EXPECT_THROW(RationalTurn(1, 0), InvalidArgument);
  EXPECT_THROW(RationalTurn::parse("x"), InvalidArgument);
}

TEST(TurnToRoot, Examples) {
  EXPECT_EQ(turn_to_root(RationalTurn(1, 2), 4), CycNum(-1));
  EXPECT_EQ(turn_to_root(RationalTurn(1, 6), 12), cyc_root(12, 2));
  EXPECT_EQ(turn_to_root(RationalTurn(0, 1), 7), CycNum(1));
  try {
    turn_to_root(RationalTurn(1, 5), 12);
    FAIL() << "expected LevelError";
  } catch (const LevelError& e) {
    EXPECT_EQ(e.required_level(), 5);
  }
}

// Exhaustive tuple scan with a float filter; exact keys dedupe the hits.
std::set<std::string> tuple_scan_units(int n, int bound) {
  std::set<std::string> found;
  std::vector<int> c(n, -bound);
  while (true) {
    std::complex<double> z = 0;
    for (int t = 0; t < n; ++t) z += double(c[t]) * float_root(n, t);
    if (std::abs(std::norm(z) - 1.0) < 1e-6) {
      std::vector<Rational> exps(c.begin(), c.end());
      const CycNum x = CycNum::from_exponents(n, exps);
      if (abs_sq(x) == CycNum(1)) found.insert(x.key());
    }
    int pos = n - 1;
    while (pos >= 0 && c[pos] == bound) c[pos--] = -bound;
    if (pos < 0) break;
    ++c[pos];
  }
  return found;
}

TEST(EnumerateUnits, Examples) {
  EXPECT_EQ(enumerate_unit_elements(4, 2).size(), 4u);
  EXPECT_EQ(enumerate_unit_elements(3, 2).size(), 6u);
  const auto five = enumerate_unit_elements(5, 2);
  EXPECT_EQ(five.size(), 10u);
  for (const auto& u : five) {
    bool signed_power = false;
    for (int k = 0; k < 5; ++k) signed_power |= (u == cyc_root(5, k) || u == -cyc_root(5, k));
    EXPECT_TRUE(signed_power) << u.to_string();
  }
}

TEST(EnumerateUnits, MatchesTupleScan) {
  for (auto [n, b] : {std::pair{3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 1}, {8, 1}}) {
    std::set<std::string> keys;
    for (const auto& u : enumerate_unit_elements(n, b)) keys.insert(u.key());
    EXPECT_EQ(keys, tuple_scan_units(n, b)) << "N=" << n << " bound=" << b;
  }
}

TEST(EnumerateUnits, EveryUnitIsARootOfUnity) {
  for (int n : {3, 4, 5, 6, 8, 9, 10, 12}) {
    const long long m = n % 2 == 0 ? n : 2 * n;
    const auto units = enumerate_unit_elements(n, 2);
    EXPECT_EQ(static_cast<long long>(units.size()), m) << n;
    for (const auto& u : units) {
      const auto order = is_root_of_unity(u);
      ASSERT_TRUE(order.has_value());
      EXPECT_EQ(m % *order, 0);
    }
    EXPECT_TRUE(std::is_sorted(units.begin(), units.end(), canonical_less));
  }
}

TEST(EnumerateUnits, Budget) {
  EXPECT_THROW(enumerate_unit_elements(13, 2), BudgetExceeded);
  EXPECT_THROW(enumerate_unit_elements(5, 4), BudgetExceeded);
  UnitEnumerationBudget tight;
  tight.max_images = 50;
  EXPECT_THROW(enumerate_unit_elements(8, 2, tight), BudgetExceeded);
}

TEST(UnitBox, MatchesRootsOfUnity) {
  for (int n : {4, 6, 8, 12}) {
    const long long m = n % 2 == 0 ? n : 2 * n;
    EXPECT_EQ(static_cast<long long>(unit_elements_in_box(n, 2).size()), m) << n;
  }
}
