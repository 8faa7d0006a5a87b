#pragma once

#include "qgraph/qalg/laurent_poly.hpp"

#include <map>

namespace qgraph {

/// Cyclotomic polynomial Phi_d(v), d >= 1.
LaurentPoly cyclotomic(int d);

/// Nonzero product  c * v^k * prod_d Phi_d(v)^e_d  with rational c and signed exponents.
///
/// Products of q-integers and q-factorials factor completely into cyclotomic polynomials in v,
/// which makes multiplication and exact cancellation cheap.
class QProduct {
 public:
  QProduct() = default;
  explicit QProduct(Rational c) : scalar_(std::move(c)) {}

  /// [n] as v^(1-n) prod_{d | 2n, d >= 3} Phi_d(v). Throws std::domain_error for n == 0 and
  /// std::invalid_argument for n < 0.
  static QProduct q_int(long n);
  /// [n]! with Phi_d exponent floor(n / (d / gcd(d, 2))).
  static QProduct q_factorial(long n);
  /// 1 - v^k for k != 0.
  static QProduct one_minus_vpow(long k);

  const Rational& scalar() const { return scalar_; }
  int vpow() const { return vpow_; }
  const std::map<int, int>& exponents() const { return exps_; }

  QProduct& operator*=(const QProduct& o);
  QProduct& operator/=(const QProduct& o);
  friend QProduct operator*(QProduct a, const QProduct& b) { return a *= b; }
  friend QProduct operator/(QProduct a, const QProduct& b) { return a /= b; }
  QProduct& negate() {
    scalar_ = -scalar_;
    return *this;
  }
  QProduct& scale(const Rational& c);
  QProduct& shift(int k) {
    vpow_ += k;
    return *this;
  }

  bool is_polynomial() const;
  /// Expanded product over the positive exponents (times c v^k when include_unit).
  LaurentPoly numerator(bool include_unit = true) const;
  /// Expanded product over the negative exponents.
  LaurentPoly denominator() const;

 private:
  Rational scalar_ = 1;
  int vpow_ = 0;
  std::map<int, int> exps_;
};

}  // namespace qgraph
