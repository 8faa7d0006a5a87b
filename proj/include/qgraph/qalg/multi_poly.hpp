#pragma once

#include "qgraph/qalg/laurent_poly.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgraph {

/// Sparse multivariate Laurent polynomial over Q.
///
/// Variables are named; the reserved name "v" stands for q^(1/2), so q itself is v^2. The
/// variable list is kept sorted and restricted to variables that actually occur, which makes
/// structural equality coincide with mathematical equality.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;
  static constexpr const char* kV = "v";

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Rational& c);

  static MultiPoly var(const std::string& name, int power = 1);
  /// q^power = v^(2 power).
  static MultiPoly q(int power = 1) { return var(kV, 2 * power); }
  static MultiPoly monomial(const Rational& c, const std::map<std::string, int>& powers);
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return vars_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool depends_on(const std::string& name) const;
  /// Constant value; throws std::logic_error if not constant.
  Rational constant_value() const;

  int degree(const std::string& name) const;
  int min_degree(const std::string& name) const;
  /// Coefficients in `name`: exponent -> coefficient free of `name`.
  std::map<int, MultiPoly> coefficients(const std::string& name) const;
  /// Leading term under lex order on the sorted variable list.
  std::pair<std::map<std::string, int>, Rational> leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(unsigned e) const;

  /// Simultaneous substitution. The key "q" binds q = v^2 and requires only even powers of v.
  /// Variables occurring with negative exponent must be bound to nonzero monomials.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
  /// Simultaneous renaming of variables.
  MultiPoly rename(const std::map<std::string, std::string>& names) const;

  /// Quotient if d divides *this in the Laurent ring, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  /// Univariate image when every variable maps to v^k (v itself maps to v).
  LaurentPoly to_laurent(const std::map<std::string, int>& vpowers) const;

  /// Numeric value. "v" may be given directly or through "q" (even powers only).
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& point) const;

  /// Human-readable form; v^k is printed as q^(k/2).
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Unit monomial u with p1 = u * p2, if one exists.
std::optional<MultiPoly> compare_up_to_unit(const MultiPoly& p1, const MultiPoly& p2);

/// Sylvester resultant in `name` after clearing negative powers of `name`.
/// Throws std::invalid_argument if either input has degree < 1 in `name`.
MultiPoly resultant(const MultiPoly& p1, const MultiPoly& p2, const std::string& name);

}  // namespace qgraph
