#include "qgraph/qalg/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgraph {

namespace {

Integer vector_content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Ordinary-polynomial long division of integer coefficient vectors (ascending order) by a divisor
// with leading coefficient +-1. Returns false if the remainder is nonzero.
bool exact_div_monic(std::vector<Integer> a, const std::vector<Integer>& b, std::vector<Integer>& quo) {
  const std::size_t n = a.size(), m = b.size();
  if (n < m) return false;
  const bool neg = b.back() < 0;
  quo.assign(n - m + 1, 0);
  for (std::size_t i = n; i-- >= m;) {
    if (a[i] == 0) {
      if (i == m - 1) break;
      continue;
    }
    Integer t = neg ? Integer(-a[i]) : a[i];
    const std::size_t k = i - (m - 1);
    quo[k] = t;
    for (std::size_t j = 0; j < m; ++j) a[k + j] -= t * b[j];
    if (i == m - 1) break;
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (a[i] != 0) return false;
  return true;
}

// Pseudo-remainder of a by b (both ascending integer vectors, b nonzero).
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t m = b.size();
  const Integer& lb = b.back();
  while (a.size() >= m) {
    Integer la = a.back();
    const std::size_t k = a.size() - m;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < m; ++j) a[k + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coef_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    coef_.push_back(c.get_num());
    den_ = c.get_den();
    normalize();
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_integers(int low, std::vector<Integer> coeffs, Integer den) {
  if (den == 0) throw std::domain_error("LaurentPoly: zero denominator");
  LaurentPoly p;
  p.low_ = low;
  p.coef_ = std::move(coeffs);
  p.den_ = std::move(den);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coef_.size() && coef_[first] == 0) ++first;
  if (first == coef_.size()) {
    coef_.clear();
    low_ = 0;
    den_ = 1;
    return;
  }
  while (coef_.back() == 0) coef_.pop_back();
  if (first > 0) {
    coef_.erase(coef_.begin(), coef_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : coef_) c = -c;
  }
  if (den_ != 1) {
    Integer g = vector_content(coef_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      for (auto& c : coef_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

Rational LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  Rational r(coef_[static_cast<std::size_t>(exponent - low_)], den_);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::leading_coefficient() const { return coefficient(high_exponent()); }
Rational LaurentPoly::trailing_coefficient() const { return coefficient(low_); }

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    Rational r(coef_[i], den_);
    r.canonicalize();
    out.emplace_back(low_ + static_cast<int>(i), std::move(r));
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_exponent(), o.high_exponent());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  Integer den = den_;
  Integer fa = 1, fb = 1;
  if (den_ != o.den_) {
    mpz_lcm(den.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    fa = den / den_;
    fb = den / o.den_;
  }
  for (std::size_t i = 0; i < coef_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coef_[i] * fa;
  for (std::size_t i = 0; i < o.coef_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coef_[i] * fb;
  low_ = lo;
  coef_ = std::move(out);
  den_ = std::move(den);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j)
      mpz_addmul(r.coef_[i + j].get_mpz_t(), a.coef_[i].get_mpz_t(), b.coef_[j].get_mpz_t());
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0 || is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& x : r.coef_) x *= c.get_num();
  r.den_ *= c.get_den();
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r = *this;
  if (r.is_zero()) return r;
  std::reverse(r.coef_.begin(), r.coef_.end());
  r.low_ = -high_exponent();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly{};
  if (d.coef_.size() > coef_.size()) return std::nullopt;
  const int low = low_ - d.low_;
  std::vector<Integer> q;
  if (abs(d.coef_.back()) == 1) {
    if (!exact_div_monic(coef_, d.coef_, q)) return std::nullopt;
    // this = (A/da) v^la, d = (B/db) v^lb, A = Q B  =>  this/d = Q db/da
    return from_integers(low, std::move(q), den_).scaled(Rational(d.den_));
  }
  // General case: lc^k * A = Q * B + R with k = deg A - deg B + 1.
  const std::size_t k = coef_.size() - d.coef_.size() + 1;
  Integer lc = d.coef_.back();
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), k);
  std::vector<Integer> a = coef_;
  for (auto& x : a) x *= scale;
  const std::size_t n = a.size(), m = d.coef_.size();
  q.assign(n - m + 1, 0);
  for (std::size_t i = n; i-- >= m;) {
    if (a[i] != 0) {
      Integer t;
      if (!mpz_divisible_p(a[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.get_mpz_t(), a[i].get_mpz_t(), lc.get_mpz_t());
      const std::size_t s = i - (m - 1);
      q[s] = t;
      for (std::size_t j = 0; j < m; ++j) a[s + j] -= t * d.coef_[j];
    }
    if (i == m - 1) break;
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (a[i] != 0) return std::nullopt;
  Integer den = den_ * scale;
  return from_integers(low, std::move(q), std::move(den)).scaled(Rational(d.den_));
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = vector_content(coef_);
  if (coef_.back() < 0) g = -g;
  std::vector<Integer> c = coef_;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return from_integers(0, std::move(c));
}

Rational LaurentPoly::content() const {
  if (is_zero()) return 0;
  Integer g = vector_content(coef_);
  if (coef_.back() < 0) g = -g;
  Rational r(g, den_);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::evaluate(const Rational& v) const {
  if (is_zero()) return 0;
  if (v == 0) {
    if (low_ < 0) throw std::domain_error("LaurentPoly: evaluation at v = 0 with negative exponent");
    return coefficient(0);
  }
  Rational acc = 0;
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * v + Rational(coef_[i]);
  Rational base = 1, pv = low_ >= 0 ? v : Rational(1 / v);
  for (int k = 0; k < std::abs(low_); ++k) base *= pv;
  Rational r = acc * base / den_;
  r.canonicalize();
  return r;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  std::vector<Integer> x = a.primitive_part().integer_coefficients();
  std::vector<Integer> y = b.primitive_part().integer_coefficients();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly(1);
    auto r = pseudo_rem(x, y);
    x = std::move(y);
    if (!r.empty()) {
      Integer g = vector_content(r);
      for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    y = std::move(r);
  }
  return LaurentPoly::from_integers(0, std::move(x)).primitive_part();
}

LaurentPoly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  if (n == 0) return {};
  std::vector<Integer> c(static_cast<std::size_t>(2 * n - 1), 0);
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return LaurentPoly::from_integers(static_cast<int>(1 - n), std::move(c));
}

LaurentPoly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly r(1);
  for (long k = 2; k <= n; ++k) r *= q_int(k);
  return r;
}

}  // namespace qgraph
