#pragma once

#include "qgraph/qalg/cyclotomic.hpp"

#include <optional>
#include <span>

namespace qgraph {

/// Exact element of Q(v), v = q^(1/2), in canonical form num/den with gcd(num, den) = 1 and
/// den having lowest exponent 0 with coefficient 1.
///
/// When the denominator is known to be a product of cyclotomic polynomials the factorization is
/// carried along and arithmetic reduces by trial division instead of a polynomial gcd.
class LaurentRat {
 public:
  LaurentRat() = default;
  LaurentRat(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  LaurentRat(const LaurentPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  LaurentRat(const LaurentPoly& num, const LaurentPoly& den);
  LaurentRat(const QProduct& p);  // NOLINT(google-explicit-constructor)

  /// Exact sum of products, sharing a common cyclotomic denominator.
  static LaurentRat sum(std::span<const QProduct> terms, std::span<const int> signs = {});

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_poly() const { return den_ == LaurentPoly(1); }

  LaurentRat operator-() const;
  friend LaurentRat operator+(const LaurentRat& a, const LaurentRat& b);
  friend LaurentRat operator-(const LaurentRat& a, const LaurentRat& b);
  friend LaurentRat operator*(const LaurentRat& a, const LaurentRat& b);
  /// Throws std::domain_error on division by zero.
  friend LaurentRat operator/(const LaurentRat& a, const LaurentRat& b);
  LaurentRat& operator+=(const LaurentRat& o) { return *this = *this + o; }
  LaurentRat& operator-=(const LaurentRat& o) { return *this = *this - o; }
  LaurentRat& operator*=(const LaurentRat& o) { return *this = *this * o; }
  LaurentRat& operator/=(const LaurentRat& o) { return *this = *this / o; }
  friend bool operator==(const LaurentRat& a, const LaurentRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  LaurentRat inverted() const;  ///< v -> 1/v
  Rational evaluate(const Rational& v) const;

  /// If *this = u * other for a unit u = c v^k, returns u.
  std::optional<LaurentPoly> unit_ratio(const LaurentRat& other) const;

 private:
  struct Raw {};
  LaurentRat(Raw, LaurentPoly num, LaurentPoly den, std::optional<std::map<int, int>> cyc);
  void normalize_unit();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
  std::optional<std::map<int, int>> den_cyclo_ = std::map<int, int>{};
};

enum class FieldOp { add, sub, mul, div };
LaurentRat field_ops(const LaurentRat& a, const LaurentRat& b, FieldOp op);

}  // namespace qgraph
