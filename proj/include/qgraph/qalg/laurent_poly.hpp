#pragma once

#include "qgraph/qalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qgraph {

/// Univariate Laurent polynomial in v = q^(1/2) with rational coefficients.
///
/// Stored densely as den^-1 * sum_i coef[i] v^(low + i) with integer coefficients,
/// den > 0 and gcd(content, den) = 1. The first and last stored coefficients are nonzero,
/// so equal polynomials have equal representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(int exponent, const Rational& c = 1);
  static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& terms);
  static LaurentPoly from_integers(int low, std::vector<Integer> coeffs, Integer den = 1);

  bool is_zero() const { return coef_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coef_.size() == 1); }
  bool is_monomial() const { return coef_.size() == 1; }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  std::size_t term_span() const { return coef_.size(); }

  Rational coefficient(int exponent) const;
  Rational leading_coefficient() const;
  Rational trailing_coefficient() const;
  /// Nonzero terms ascending by exponent.
  std::vector<std::pair<int, Rational>> terms() const;

  const std::vector<Integer>& integer_coefficients() const { return coef_; }
  const Integer& denominator() const { return den_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.den_ == b.den_ && a.coef_ == b.coef_;
  }

  LaurentPoly scaled(const Rational& c) const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitution v -> 1/v.
  LaurentPoly inverted() const;
  LaurentPoly pow(unsigned e) const;

  /// Quotient if `d` divides *this in Q[v, 1/v], otherwise nullopt. Throws on d == 0.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  /// Primitive integer polynomial with positive leading coefficient, shifted to low exponent 0.
  LaurentPoly primitive_part() const;
  /// Rational content c with *this = c * v^low * primitive_part().
  Rational content() const;

  Rational evaluate(const Rational& v) const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coef_;
  Integer den_ = 1;
};

/// gcd in Q[v, 1/v], normalized to low exponent 0, integer primitive, positive leading coefficient.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// [n] = sum_{k=0}^{n-1} v^(n-1-2k). Throws std::invalid_argument for n < 0.
LaurentPoly q_int(long n);
/// [n]! = [n][n-1]...[1], [0]! = 1. Throws std::invalid_argument for n < 0.
LaurentPoly q_factorial(long n);

}  // namespace qgraph
