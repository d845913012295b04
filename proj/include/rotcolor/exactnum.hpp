#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores phi(N) rational coefficients in the power basis
// 1, zeta_N, ..., zeta_N^{phi(N)-1}, reduced modulo the N-th cyclotomic
// polynomial ("cyclo_poly"). That representative is unique, so equality is a
// coefficient comparison once both operands sit at a common level. Binary
// operations lift to lcm of the two levels automatically.

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rotcolor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest level any computation may lift to. Reads QT_SESSION_LEVEL_CAP once
/// (default 240).
int level_cap();

long long euler_phi(long long n);
long long lcm_level(long long a, long long b);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclo_poly(int n);

class CycNum {
 public:
  /// Zero at level 1.
  CycNum();
  /// The rational r embedded at the given level.
  explicit CycNum(const Rational& r, int level = 1);
  CycNum(long v) : CycNum(Rational(v)) {}  // NOLINT: integers convert implicitly

  /// Builds sum_e exps[e] * zeta_level^e for an exponent vector of any length
  /// and reduces it to canonical form.
  static CycNum from_exponents(int level, std::span<const Rational> exps);
  /// Canonical coefficients given directly (length must be phi(level)).
  static CycNum from_canonical(int level, std::vector<Rational> coeffs);

  int level() const noexcept { return level_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Same number expressed at a multiple of the current level.
  CycNum lift(int level) const;
  /// The same number expressed at `level`, if it lies in Q(zeta_level).
  std::optional<CycNum> restrict_to(int level) const;

  bool is_zero() const;
  bool is_integral() const;
  std::optional<Rational> as_rational() const;

  /// Complex conjugation, the Galois automorphism zeta -> zeta^{-1}.
  CycNum conj() const;
  /// Galois automorphism zeta_N -> zeta_N^a, gcd(a, N) = 1.
  CycNum galois(int a) const;
  CycNum inverse() const;
  CycNum pow(long long e) const;

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;
  CycNum scaled(const Rational& r) const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  std::complex<double> embed() const;
  /// Compact text form "cyc12[0 1 0 -1/2]".
  std::string to_string() const;
  /// Stable text key of the coefficients at the current level.
  std::string key() const;

 private:
  CycNum(int level, std::vector<Rational> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {}

  int level_;
  std::vector<Rational> coeffs_;
};

/// The angle 2*pi*num/den, reduced with num in [0, den).
class RationalTurn {
 public:
  RationalTurn() = default;
  RationalTurn(std::int64_t num, std::int64_t den);

  static RationalTurn parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double as_double() const noexcept { return double(num_) / double(den_); }
  bool is_zero() const noexcept { return num_ == 0; }

  RationalTurn operator+(const RationalTurn& o) const;
  RationalTurn operator-(const RationalTurn& o) const;
  RationalTurn operator-() const { return RationalTurn(-num_, den_); }
  RationalTurn operator*(std::int64_t k) const;

  friend bool operator==(const RationalTurn&, const RationalTurn&) = default;
  friend std::strong_ordering operator<=>(const RationalTurn& a, const RationalTurn& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// zeta_N^j in canonical form.
CycNum cyc_root(int n, long long j);
/// e^{2 pi i t} at level L; throws LevelError when t.den() does not divide L.
CycNum turn_to_root(const RationalTurn& t, int level);

/// a * conj(a); lies in the real subfield.
CycNum abs_sq(const CycNum& a);
std::complex<double> embed(const CycNum& a);

/// For integral a with |a| = 1, the exact multiplicative order (a divisor of
/// N for even N, of 2N for odd N). Absent when |a| != 1. Throws NotIntegral
/// for non-integral input and ConsistencyError if |a| = 1 but a is not a
/// root of unity.
std::optional<long long> is_root_of_unity(const CycNum& a);

struct UnitEnumerationBudget {
  int max_level = 12;
  int max_bound = 3;
  std::size_t max_images = 20'000'000;
};

/// Every distinct element sum_{t<N} c_t zeta_N^t with integer |c_t| <= bound
/// and |.| = 1, in canonical order. Throws BudgetExceeded past the budget.
std::vector<CycNum> enumerate_unit_elements(int n, int bound,
                                            const UnitEnumerationBudget& budget = {});

/// Elements with canonical power-basis coefficients |c_j| <= bound and |.| = 1,
/// in canonical order. Scans (2 bound + 1)^phi(n) tuples.
std::vector<CycNum> unit_elements_in_box(int n, int bound, std::size_t max_tuples = 20'000'000);

/// Lexicographic order on canonical coefficients; both operands must share a level.
bool canonical_less(const CycNum& a, const CycNum& b);

}  // namespace rotcolor
