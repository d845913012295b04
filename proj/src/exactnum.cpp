#include "rotcolor/exactnum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rotcolor/errors.hpp"

namespace rotcolor {
namespace {

using Poly = std::vector<std::int64_t>;

struct CycloData {
  int n = 1;
  int phi = 1;
  Poly poly;
  // reduce[e] = coefficients of x^e mod cyclo_poly(n), for 0 <= e < n.
  std::vector<Poly> reduce;
};

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  trim(num);
  if (!(num.size() == 1 && num[0] == 0)) throw ConsistencyError("cyclo_poly division left a remainder");
  return quot;
}

std::unique_ptr<CycloData> build_cyclo(int n);

const CycloData& cyclo_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloData>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto built = build_cyclo(n);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

std::unique_ptr<CycloData> build_cyclo(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic level must be positive");
  auto d = std::make_unique<CycloData>();
  d->n = n;
  // x^n - 1 divided by every cyclo_poly(m) with m | n, m < n.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int m = 1; m < n; ++m) {
    if (n % m == 0) p = divide_monic(p, cyclo_data(m).poly);
  }
  d->poly = p;
  d->phi = static_cast<int>(p.size()) - 1;
  const int phi = d->phi;
  d->reduce.assign(n, Poly(phi, 0));
  Poly cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    d->reduce[e] = cur;
    // multiply by x, then fold the overflow term back through the monic poly.
    const std::int64_t top = cur[phi - 1];
    for (int t = phi - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int t = 0; t < phi; ++t) cur[t] -= top * p[t];
    }
  }
  return d;
}

std::vector<Rational> reduce_exponents(const CycloData& d, std::span<const Rational> exps) {
  std::vector<Rational> out(d.phi);
  for (std::size_t e = 0; e < exps.size(); ++e) {
    if (sgn(exps[e]) == 0) continue;
    const Poly& row = d.reduce[e % d.n];
    for (int t = 0; t < d.phi; ++t) {
      if (row[t] != 0) out[t] += exps[e] * static_cast<long>(row[t]);
    }
  }
  return out;
}

void check_cap(long long level) {
  if (level > level_cap()) {
    throw LevelError("cyclotomic level " + std::to_string(level) + " exceeds cap " +
                         std::to_string(level_cap()) + " (QT_SESSION_LEVEL_CAP)",
                     static_cast<int>(level));
  }
}

// Solves A x = b exactly; A is rows x cols with independent columns.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  if (pivot_col.size() != cols) throw ConsistencyError("dependent basis in exact solve");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

int level_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("QT_SESSION_LEVEL_CAP")) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
      if (ec == std::errc() && v > 0) return v;
    }
    return 240;
  }();
  return cap;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long long lcm_level(long long a, long long b) { return std::lcm(a, b); }

const std::vector<std::int64_t>& cyclo_poly(int n) { return cyclo_data(n).poly; }

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : level_(1), coeffs_(1) {}

CycNum::CycNum(const Rational& r, int level) : level_(level) {
  check_cap(level);
  coeffs_.assign(cyclo_data(level).phi, Rational(0));
  coeffs_[0] = r;
  coeffs_[0].canonicalize();
}

CycNum CycNum::from_exponents(int level, std::span<const Rational> exps) {
  check_cap(level);
  std::vector<Rational> canon(exps.begin(), exps.end());
  for (auto& c : canon) c.canonicalize();
  return CycNum(level, reduce_exponents(cyclo_data(level), canon));
}

CycNum CycNum::from_canonical(int level, std::vector<Rational> coeffs) {
  check_cap(level);
  if (static_cast<int>(coeffs.size()) != cyclo_data(level).phi) {
    throw InvalidArgument("canonical coefficient count must equal phi(level)");
  }
  for (auto& c : coeffs) c.canonicalize();
  return CycNum(level, std::move(coeffs));
}

CycNum CycNum::lift(int level) const {
  if (level == level_) return *this;
  if (level % level_ != 0) {
    throw LevelError("level " + std::to_string(level) + " is not a multiple of " +
                         std::to_string(level_),
                     static_cast<int>(lcm_level(level, level_)));
  }
  check_cap(level);
  const CycloData& d = cyclo_data(level);
  const int step = level / level_;
  std::vector<Rational> out(d.phi);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const Poly& row = d.reduce[(j * step) % level];
    for (int t = 0; t < d.phi; ++t) {
      if (row[t] != 0) out[t] += coeffs_[j] * static_cast<long>(row[t]);
    }
  }
  return CycNum(level, std::move(out));
}

std::optional<CycNum> CycNum::restrict_to(int level) const {
  if (level < 1) throw InvalidArgument("level must be positive");
  const int big = static_cast<int>(lcm_level(level_, level));
  const CycNum x = lift(big);
  const CycloData& hi = cyclo_data(big);
  const CycloData& lo = cyclo_data(level);
  const int step = big / level;
  std::vector<std::vector<Rational>> a(hi.phi, std::vector<Rational>(lo.phi));
  for (int j = 0; j < lo.phi; ++j) {
    const Poly& row = hi.reduce[(j * step) % big];
    for (int t = 0; t < hi.phi; ++t) a[t][j] = Rational(static_cast<long>(row[t]));
  }
  auto sol = solve_exact(std::move(a), x.coeffs_);
  if (!sol) return std::nullopt;
  return CycNum(level, std::move(*sol));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CycNum::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t t = 1; t < coeffs_.size(); ++t) {
    if (sgn(coeffs_[t]) != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::galois(int a) const {
  if (std::gcd(a, level_) != 1) throw InvalidArgument("Galois exponent must be coprime to the level");
  const CycloData& d = cyclo_data(level_);
  std::vector<Rational> exps(level_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    long long e = (static_cast<long long>(j) * a) % level_;
    if (e < 0) e += level_;
    exps[e] += coeffs_[j];
  }
  return CycNum(level_, reduce_exponents(d, exps));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const CycloData& d = cyclo_data(level_);
  // Column j holds the coefficients of this * zeta^j.
  std::vector<std::vector<Rational>> a(d.phi, std::vector<Rational>(d.phi));
  for (int j = 0; j < d.phi; ++j) {
    std::vector<Rational> exps(coeffs_.size() + j);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) exps[i + j] = coeffs_[i];
    auto col = reduce_exponents(d, exps);
    for (int t = 0; t < d.phi; ++t) a[t][j] = col[t];
  }
  std::vector<Rational> rhs(d.phi);
  rhs[0] = 1;
  auto sol = solve_exact(std::move(a), std::move(rhs));
  if (!sol) throw ConsistencyError("nonzero cyclotomic element without inverse");
  return CycNum(level_, std::move(*sol));
}

CycNum CycNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(Rational(1), level_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  const int l = static_cast<int>(lcm_level(level_, other.level_));
  if (l != level_) *this = lift(l);
  if (other.level_ == l) {
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  } else {
    const CycNum o = other.lift(l);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += o.coeffs_[t];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inverse(); }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum CycNum::scaled(const Rational& r) const {
  Rational f = r;
  f.canonicalize();
  CycNum out = *this;
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const int l = static_cast<int>(lcm_level(a.level_, b.level_));
  const CycNum xs = a.lift(l);
  const CycNum ys = b.lift(l);
  const CycloData& d = cyclo_data(l);
  std::vector<Rational> exps(2 * d.phi - 1);
  for (int i = 0; i < d.phi; ++i) {
    if (sgn(xs.coeffs_[i]) == 0) continue;
    for (int j = 0; j < d.phi; ++j) {
      if (sgn(ys.coeffs_[j]) == 0) continue;
      exps[i + j] += xs.coeffs_[i] * ys.coeffs_[j];
    }
  }
  return CycNum(l, reduce_exponents(d, exps));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const int l = static_cast<int>(lcm_level(a.level_, b.level_));
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::complex<double> CycNum::embed() const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const double ang = 2.0 * std::numbers::pi * double(j) / double(level_);
    acc += coeffs_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  os << "cyc" << level_ << "[";
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    if (t) os << ' ';
    os << coeffs_[t].get_str();
  }
  os << "]";
  return os.str();
}

std::string CycNum::key() const {
  std::string k = std::to_string(level_);
  k += ':';
  for (const auto& c : coeffs_) {
    k += c.get_str();
    k += ',';
  }
  return k;
}

bool canonical_less(const CycNum& a, const CycNum& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

// ---------------------------------------------------------------------------
// RationalTurn

RationalTurn::RationalTurn(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("turn denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  num %= den;
  if (num < 0) num += den;
  num_ = num;
  den_ = den;
}

RationalTurn RationalTurn::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return RationalTurn(std::stoll(text), 1);
    return RationalTurn(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse turn '" + text + "'");
  }
}

RationalTurn RationalTurn::operator+(const RationalTurn& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return RationalTurn(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RationalTurn RationalTurn::operator-(const RationalTurn& o) const { return *this + (-o); }

RationalTurn RationalTurn::operator*(std::int64_t k) const {
  const __int128 prod = static_cast<__int128>(num_) * (k % den_);
  return RationalTurn(static_cast<std::int64_t>(prod % den_), den_);
}

std::strong_ordering operator<=>(const RationalTurn& a, const RationalTurn& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalTurn::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Free functions

CycNum cyc_root(int n, long long j) {
  if (n < 1) throw InvalidArgument("root level must be positive");
  j %= n;
  if (j < 0) j += n;
  std::vector<Rational> exps(j + 1);
  exps[j] = 1;
  return CycNum::from_exponents(n, exps);
}

CycNum turn_to_root(const RationalTurn& t, int level) {
  if (level % t.den() != 0) {
    throw LevelError("turn " + t.to_string() + " needs a level divisible by " +
                         std::to_string(t.den()) + ", got " + std::to_string(level),
                     static_cast<int>(t.den()));
  }
  return cyc_root(level, t.num() * (level / t.den()));
}

CycNum abs_sq(const CycNum& a) { return a * a.conj(); }

std::complex<double> embed(const CycNum& a) { return a.embed(); }

std::optional<long long> is_root_of_unity(const CycNum& a) {
  if (!a.is_integral()) throw NotIntegral("is_root_of_unity needs an element of Z[zeta_N]");
  if (!(abs_sq(a) == CycNum(1))) return std::nullopt;
  const long long n = a.level();
  const long long bound = (n % 2 == 0) ? n : 2 * n;
  const CycNum one(1);
  for (long long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && a.pow(d) == one) return d;
  }
  throw ConsistencyError("integral element of absolute value 1 is not a root of unity: " +
                         a.to_string());
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// |v|^2 == 1 in Z[zeta_n], on small integer coefficient vectors.
bool is_unit_modulus(const CycloData& d, const std::vector<std::int64_t>& v) {
  const int phi = d.phi;
  std::vector<std::int64_t> conj(phi, 0);
  for (int j = 0; j < phi; ++j) {
    if (v[j] == 0) continue;
    const Poly& row = d.reduce[(d.n - j) % d.n];
    for (int t = 0; t < phi; ++t) conj[t] += v[j] * row[t];
  }
  std::vector<std::int64_t> prod(phi, 0);
  for (int i = 0; i < phi; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (conj[j] == 0) continue;
      const Poly& row = d.reduce[(i + j) % d.n];
      for (int t = 0; t < phi; ++t) prod[t] += v[i] * conj[j] * row[t];
    }
  }
  if (prod[0] != 1) return false;
  for (int t = 1; t < phi; ++t) {
    if (prod[t] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CycNum> enumerate_unit_elements(int n, int bound, const UnitEnumerationBudget& budget) {
  if (n < 1 || bound < 1) throw InvalidArgument("level and bound must be positive");
  if (n > budget.max_level || bound > budget.max_bound) {
    throw BudgetExceeded("unit enumeration at level " + std::to_string(n) + ", bound " +
                         std::to_string(bound) + " is outside the budget (level <= " +
                         std::to_string(budget.max_level) + ", bound <= " +
                         std::to_string(budget.max_bound) + ")");
  }
  const CycloData& d = cyclo_data(n);
  // Distinct partial images of sum_{t < s} c_t zeta^t, for s = 0..n.
  std::unordered_set<std::vector<std::int64_t>, VecHash> images;
  images.insert(std::vector<std::int64_t>(d.phi, 0));
  for (int t = 0; t < n; ++t) {
    std::unordered_set<std::vector<std::int64_t>, VecHash> next;
    next.reserve(images.size() * (2 * bound + 1));
    const Poly& row = d.reduce[t];
    for (const auto& v : images) {
      for (int c = -bound; c <= bound; ++c) {
        auto w = v;
        for (int k = 0; k < d.phi; ++k) w[k] += c * row[k];
        next.insert(std::move(w));
      }
      if (next.size() > budget.max_images) {
        throw BudgetExceeded("unit enumeration exceeded " + std::to_string(budget.max_images) +
                                 " distinct partial images",
                             next.size());
      }
    }
    images = std::move(next);
  }
  std::vector<CycNum> out;
  for (const auto& v : images) {
    if (!is_unit_modulus(d, v)) continue;
    std::vector<Rational> coeffs;
    coeffs.reserve(v.size());
    for (auto x : v) coeffs.emplace_back(static_cast<long>(x));
    out.push_back(CycNum::from_canonical(n, std::move(coeffs)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<CycNum> unit_elements_in_box(int n, int bound, std::size_t max_tuples) {
  if (n < 1 || bound < 0) throw InvalidArgument("level must be positive and bound non-negative");
  check_cap(n);
  const CycloData& d = cyclo_data(n);
  double tuples = 1;
  for (int t = 0; t < d.phi; ++t) tuples *= 2.0 * bound + 1;
  if (tuples > static_cast<double>(max_tuples)) {
    throw BudgetExceeded("box scan at level " + std::to_string(n) + " needs " +
                         std::to_string(tuples) + " tuples");
  }
  std::vector<CycNum> out;
  std::vector<std::int64_t> v(d.phi, -bound);
  while (true) {
    if (is_unit_modulus(d, v)) {
      std::vector<Rational> coeffs;
      for (auto x : v) coeffs.emplace_back(static_cast<long>(x));
      out.push_back(CycNum::from_canonical(n, std::move(coeffs)));
    }
    int pos = d.phi - 1;
    while (pos >= 0 && v[pos] == bound) v[pos--] = -bound;
    if (pos < 0) break;
    ++v[pos];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace rotcolor
