#include "qgraph/qalg/laurent_rat.hpp"

#include <stdexcept>

namespace qgraph {

namespace {

// Denominator factors are stored normalized: 1 - v in place of Phi_1 = v - 1.
LaurentPoly den_factor(int d) { return d == 1 ? LaurentPoly(1) - LaurentPoly::monomial(1) : cyclotomic(d); }

LaurentPoly expand_den(const std::map<int, int>& exps) {
  LaurentPoly r(1);
  for (const auto& [d, e] : exps) r *= den_factor(d).pow(static_cast<unsigned>(e));
  return r;
}

// Removes common factors between num and the cyclotomic denominator exps (all exponents > 0).
void cancel(LaurentPoly& num, std::map<int, int>& exps) {
  if (num.is_zero()) {
    exps.clear();
    return;
  }
  for (auto it = exps.begin(); it != exps.end();) {
    const LaurentPoly f = den_factor(it->first);
    while (it->second > 0) {
      if (num.term_span() < f.term_span()) break;
      auto q = num.divide_exact(f);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? exps.erase(it) : std::next(it);
  }
}

}  // namespace

LaurentRat::LaurentRat(Raw, LaurentPoly num, LaurentPoly den, std::optional<std::map<int, int>> cyc)
    : num_(std::move(num)), den_(std::move(den)), den_cyclo_(std::move(cyc)) {
  normalize_unit();
}

LaurentRat::LaurentRat(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("LaurentRat: zero denominator");
  if (num.is_zero()) return;
  LaurentPoly g = gcd(num, den);
  num_ = *num.divide_exact(g);
  den_ = *den.divide_exact(g);
  den_cyclo_.reset();
  normalize_unit();
}

LaurentRat::LaurentRat(const QProduct& p) {
  if (p.scalar() == 0) return;
  std::map<int, int> neg;
  for (const auto& [d, e] : p.exponents())
    if (e < 0) neg[d] = -e;
  num_ = p.numerator();
  den_ = p.denominator();
  den_cyclo_ = std::move(neg);
  normalize_unit();
}

void LaurentRat::normalize_unit() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    den_cyclo_ = std::map<int, int>{};
    return;
  }
  const int low = den_.low_exponent();
  const Rational t = den_.trailing_coefficient();
  if (low != 0 || t != 1) {
    const Rational inv = 1 / t;
    num_ = num_.scaled(inv).shifted(-low);
    den_ = den_.scaled(inv).shifted(-low);
  }
  if (den_ == LaurentPoly(1)) den_cyclo_ = std::map<int, int>{};
}

LaurentRat LaurentRat::sum(std::span<const QProduct> terms, std::span<const int> signs) {
  if (!signs.empty() && signs.size() != terms.size())
    throw std::invalid_argument("LaurentRat::sum: sign count mismatch");
  if (terms.empty()) return {};
  std::map<int, int> common;
  int vmin = terms[0].vpow();
  bool first = true;
  for (const auto& t : terms) {
    vmin = std::min(vmin, t.vpow());
    if (first) {
      common = t.exponents();
      first = false;
      continue;
    }
    for (auto it = common.begin(); it != common.end();) {
      auto f = t.exponents().find(it->first);
      int e = f == t.exponents().end() ? 0 : f->second;
      if (e < it->second) it->second = e;
      it = it->second == 0 ? common.erase(it) : std::next(it);
    }
    for (const auto& [d, e] : t.exponents())
      if (e < 0 && !common.count(d)) common[d] = e;
  }
  LaurentPoly s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::map<int, int> ex = terms[i].exponents();
    for (const auto& [d, e] : common) ex[d] -= e;
    LaurentPoly term = LaurentPoly(terms[i].scalar()).shifted(terms[i].vpow() - vmin);
    for (const auto& [d, e] : ex)
      if (e > 0) term *= cyclotomic(d).pow(static_cast<unsigned>(e));
    if (!signs.empty() && signs[i] < 0) term = -term;
    s += term;
  }
  if (s.is_zero()) return {};
  std::map<int, int> den;
  LaurentPoly pos(1);
  for (const auto& [d, e] : common) {
    if (e > 0)
      pos *= cyclotomic(d).pow(static_cast<unsigned>(e));
    else
      den[d] = -e;
  }
  // Phi_1 = -(1 - v): fold the sign into the numerator so the stored factors stay normalized.
  if (auto it = den.find(1); it != den.end() && it->second % 2) s = -s;
  cancel(s, den);
  LaurentPoly d = expand_den(den);
  return LaurentRat(Raw{}, (s * pos).shifted(vmin), std::move(d), std::move(den));
}

LaurentRat LaurentRat::operator-() const {
  LaurentRat r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentRat operator+(const LaurentRat& a, const LaurentRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_cyclo_ && b.den_cyclo_) {
    std::map<int, int> l = *a.den_cyclo_;
    for (const auto& [d, e] : *b.den_cyclo_) l[d] = std::max(l[d], e);
    std::map<int, int> fa, fb;
    for (const auto& [d, e] : l) {
      auto ia = a.den_cyclo_->find(d), ib = b.den_cyclo_->find(d);
      int ea = e - (ia == a.den_cyclo_->end() ? 0 : ia->second);
      int eb = e - (ib == b.den_cyclo_->end() ? 0 : ib->second);
      if (ea) fa[d] = ea;
      if (eb) fb[d] = eb;
    }
    LaurentPoly num = a.num_ * expand_den(fa) + b.num_ * expand_den(fb);
    cancel(num, l);
    if (num.is_zero()) return {};
    LaurentPoly d = expand_den(l);
    return LaurentRat(LaurentRat::Raw{}, std::move(num), std::move(d), std::move(l));
  }
  return LaurentRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRat operator-(const LaurentRat& a, const LaurentRat& b) { return a + (-b); }

LaurentRat operator*(const LaurentRat& a, const LaurentRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_cyclo_ && b.den_cyclo_) {
    std::map<int, int> e = *a.den_cyclo_;
    for (const auto& [d, k] : *b.den_cyclo_) e[d] += k;
    LaurentPoly num = a.num_ * b.num_;
    cancel(num, e);
    LaurentPoly d = expand_den(e);
    return LaurentRat(LaurentRat::Raw{}, std::move(num), std::move(d), std::move(e));
  }
  return LaurentRat(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRat operator/(const LaurentRat& a, const LaurentRat& b) {
  if (b.is_zero()) throw std::domain_error("LaurentRat: division by zero");
  if (a.is_zero()) return {};
  if (b.num_.is_monomial() && a.den_cyclo_ && b.den_cyclo_) {
    const LaurentPoly inv = LaurentPoly::monomial(-b.num_.low_exponent(), 1 / b.num_.trailing_coefficient());
    LaurentRat binv(LaurentRat::Raw{}, b.den_ * inv, LaurentPoly(1), std::map<int, int>{});
    return a * binv;
  }
  return LaurentRat(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentRat LaurentRat::inverted() const {
  if (is_zero()) return {};
  if (den_cyclo_) {
    // Phi_d(1/v) = v^-phi(d) Phi_d(v) for d >= 2 and (1 - 1/v) = -v^-1 (1 - v).
    LaurentRat r(Raw{}, num_.inverted(), den_.inverted(), den_cyclo_);
    return r;
  }
  return LaurentRat(num_.inverted(), den_.inverted());
}

Rational LaurentRat::evaluate(const Rational& v) const {
  Rational d = den_.evaluate(v);
  if (d == 0) throw std::domain_error("LaurentRat: pole at evaluation point");
  Rational r = num_.evaluate(v) / d;
  r.canonicalize();
  return r;
}

std::optional<LaurentPoly> LaurentRat::unit_ratio(const LaurentRat& other) const {
  if (is_zero() || other.is_zero()) return std::nullopt;
  LaurentRat r = *this / other;
  if (!r.is_laurent_poly() || !r.num().is_monomial()) return std::nullopt;
  return r.num();
}

LaurentRat field_ops(const LaurentRat& a, const LaurentRat& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw std::invalid_argument("field_ops: unknown operation");
}

}  // namespace qgraph
