#include "qgraph/qalg/format.hpp"
#include "qgraph/qalg/numeric.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qgraph;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> low(-4, 4), len(0, span), coef(-9, 9), den(1, 4);
  std::vector<std::pair<int, Rational>> terms;
  const int l = low(rng), n = len(rng);
  for (int i = 0; i < n; ++i) terms.emplace_back(l + i, Rational(coef(rng), den(rng)));
  return LaurentPoly::from_terms(terms);
}

// Term-by-term evaluation, independent of the dense representation.
Rational naive_eval(const LaurentPoly& p, const Rational& v) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational m = 1;
    for (int k = 0; k < std::abs(e); ++k) m *= v;
    s += e < 0 ? Rational(c / m) : Rational(c * m);
  }
  return s;
}

Rational naive_qint(long n, const Rational& v) {
  Rational vn = 1, vinv = 1;
  for (long k = 0; k < n; ++k) vn *= v;
  for (long k = 0; k < n; ++k) vinv /= v;
  return Rational((vn - vinv) / (v - 1 / v));
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("laurent ring axioms on random instances") {
  std::mt19937_64 rng(2024);
  const Rational pts[] = {Rational(3, 2), Rational(-2, 5), Rational(7)};
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == LaurentPoly());
    REQUIRE(a * LaurentPoly(1) == a);
    for (const auto& v : pts) {
      REQUIRE((a * b).evaluate(v) == naive_eval(a, v) * naive_eval(b, v));
      REQUIRE((a - c).evaluate(v) == naive_eval(a, v) - naive_eval(c, v));
    }
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q);
      REQUIRE(*q == a);
    }
    REQUIRE(a.inverted().inverted() == a);
  }
}

TEST_CASE("canonical form") {
  auto p = LaurentPoly::from_terms({{3, 0}, {-1, Rational(2, 4)}, {-1, Rational(1, 2)}});
  CHECK(p == LaurentPoly::monomial(-1));
  CHECK(p.is_monomial());
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::from_integers(2, {0, 2, 4}, 6) == LaurentPoly::from_terms({{3, Rational(1, 3)}, {4, Rational(2, 3)}}));
}

TEST_CASE("gcd") {
  const LaurentPoly x = LaurentPoly::monomial(1);
  const LaurentPoly a = (x - 1) * (x + 2) * x.pow(3), b = (x - 1) * (x * x + 1);
  CHECK(gcd(a, b) == x - 1);
  CHECK(gcd(a.scaled(Rational(3, 7)), b.shifted(-5)) == x - 1);
  CHECK(gcd(x + 1, x - 1) == LaurentPoly(1));
  CHECK(!(x * x + 1).divide_exact(x - 1));
}

TEST_CASE("q-integers and factorials") {
  CHECK(q_int(0).is_zero());
  CHECK(to_text(q_int(2)) == "q^(1/2) + q^(-1/2)");
  CHECK(q_int(3) == LaurentPoly::from_terms({{-2, 1}, {0, 1}, {2, 1}}));
  CHECK_THROWS_AS(q_int(-1), std::invalid_argument);
  for (long n = 1; n <= 12; ++n) {
    CHECK(q_int(n).evaluate(1) == n);
    CHECK(q_int(n).evaluate(Rational(5, 3)) == naive_qint(n, Rational(5, 3)));
    CHECK(q_int(n).inverted() == q_int(n));
    CHECK(QProduct::q_int(n).numerator() == q_int(n));
    CHECK(QProduct::q_factorial(n).numerator() == q_factorial(n));
  }
  CHECK(q_factorial(0) == LaurentPoly(1));
  CHECK(q_factorial(5).evaluate(1) == 120);
}

TEST_CASE("cyclotomic polynomials") {
  const LaurentPoly x = LaurentPoly::monomial(1);
  CHECK(cyclotomic(1) == x - 1);
  CHECK(cyclotomic(4) == x * x + 1);
  CHECK(cyclotomic(6) == x * x - x + 1);
  for (int n = 1; n <= 24; ++n) {
    LaurentPoly prod(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == x.pow(static_cast<unsigned>(n)) - 1);
  }
}

TEST_CASE("qproduct arithmetic") {
  QProduct a = QProduct::q_factorial(6) / QProduct::q_factorial(4);
  CHECK(a.is_polynomial());
  CHECK(a.numerator() == q_int(6) * q_int(5));
  QProduct b = QProduct::q_int(2) / QProduct::q_int(4);
  CHECK_FALSE(b.is_polynomial());
  CHECK(LaurentRat(b) == LaurentRat(q_int(2), q_int(4)));
  CHECK(QProduct::one_minus_vpow(3).numerator() == LaurentPoly(1) - LaurentPoly::monomial(3));
  CHECK_THROWS_AS(QProduct::q_int(0), std::domain_error);
}

TEST_CASE("laurent rational field operations") {
  std::mt19937_64 rng(99);
  const Rational v = Rational(4, 3);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly n1 = random_poly(rng), d1 = random_poly(rng), n2 = random_poly(rng), d2 = random_poly(rng);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    if (naive_eval(d1, v) == 0 || naive_eval(d2, v) == 0 || naive_eval(n2, v) == 0) continue;
    const LaurentRat a(n1, d1), b(n2, d2);
    const Rational av = naive_eval(n1, v) / naive_eval(d1, v), bv = naive_eval(n2, v) / naive_eval(d2, v);
    CHECK(field_ops(a, b, FieldOp::add).evaluate(v) == av + bv);
    CHECK(field_ops(a, b, FieldOp::sub).evaluate(v) == av - bv);
    CHECK(field_ops(a, b, FieldOp::mul).evaluate(v) == av * bv);
    CHECK(field_ops(a, b, FieldOp::div).evaluate(v) == av / bv);
    CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(LaurentRat(q_int(2), LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(LaurentRat(1) / LaurentRat(0), std::domain_error);
}

TEST_CASE("cyclotomic sum matches generic arithmetic") {
  std::vector<QProduct> terms{QProduct::q_factorial(3) / QProduct::q_factorial(5),
                              QProduct::q_int(4) / (QProduct::q_int(2) * QProduct::q_int(3)),
                              QProduct::q_factorial(2).negate()};
  LaurentRat generic;
  for (const auto& t : terms) generic += LaurentRat(t.numerator(), t.denominator());
  CHECK(LaurentRat::sum(terms) == generic);
  std::vector<int> signs{1, -1, 1};
  CHECK(LaurentRat::sum(terms, signs) == LaurentRat(terms[0]) - LaurentRat(terms[1]) + LaurentRat(terms[2]));
}

TEST_CASE("unit ratio") {
  const LaurentRat a(q_int(3)), b = a * LaurentRat(LaurentPoly::monomial(-3, -2));
  auto u = b.unit_ratio(a);
  REQUIRE(u);
  CHECK(*u == LaurentPoly::monomial(-3, -2));
  CHECK_FALSE(LaurentRat(q_int(2)).unit_ratio(a));
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_poly(rng);
    CHECK(laurent_poly_from_json(to_json(p)) == p);
    const LaurentPoly d = random_poly(rng);
    if (d.is_zero()) continue;
    const LaurentRat r(p, d);
    CHECK(laurent_rat_from_json(to_json(r)) == r);
  }
  const MultiPoly m = MultiPoly::var("x_a") * MultiPoly::q(2) - MultiPoly::var("y_a", -1) * MultiPoly(Rational(3, 5));
  CHECK(multi_poly_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(laurent_poly_from_json(nlohmann::json{{"terms", "oops"}}), std::invalid_argument);
}

TEST_CASE("numeric evaluation") {
  const LaurentPoly p = q_factorial(4);
  const std::complex<double> v0(0.9, 0.3);
  std::complex<double> naive = 1;
  for (int n = 1; n <= 4; ++n) naive *= (std::pow(v0, n) - std::pow(v0, -n)) / (v0 - 1.0 / v0);
  CHECK(std::abs(eval_numeric(p, v0) - naive) < 1e-12);
  CHECK(std::abs(eval_numeric(p, v0, 200) - naive) < 1e-12);
  const LaurentRat r(q_int(3), q_int(2));
  CHECK(std::abs(eval_numeric(r, 2.0) - 5.25 / 2.5) < 1e-12);
  CHECK_THROWS_AS(eval_numeric(LaurentRat(LaurentPoly(1), q_int(2)), std::complex<double>(0, 1)), PoleError);
  CHECK_THROWS_AS(eval_numeric(LaurentPoly::monomial(-1), 0.0), PoleError);
}

TEST_CASE("log magnitude of huge products") {
  const QProduct f = QProduct::q_factorial(400);
  const double v0 = std::exp(-1.0 / 64);
  double direct = 0;
  for (int n = 1; n <= 400; ++n) direct += std::log(std::abs(std::sinh(n / 64.0) / std::sinh(1 / 64.0)));
  CHECK(log_abs_numeric(f, v0) == doctest::Approx(direct).epsilon(1e-12));
  std::vector<QProduct> terms{QProduct::q_factorial(300), QProduct::q_factorial(300)};
  std::vector<int> signs{1, -1};
  CHECK(std::isinf(log_abs_sum_numeric(terms, signs, v0)));
}

TEST_CASE("multivariate polynomials") {
  const MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
  const MultiPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree("x") == 2);
  CHECK(p.divide_exact(x + y).value() == x - y);
  CHECK_FALSE((x * x + 1).divide_exact(x + y));
  CHECK(p.substitute({{"y", MultiPoly(2)}}) == x * x - 4);
  CHECK(MultiPoly::q(1).substitute({{"q", MultiPoly(3)}}) == MultiPoly(3));
  CHECK(p.rename({{"x", "z"}}) == MultiPoly::var("z").pow(2) - y * y);
  auto u = compare_up_to_unit(p * MultiPoly::var("x", -2) * MultiPoly(-3), p);
  REQUIRE(u);
  CHECK(*u == MultiPoly::var("x", -2) * MultiPoly(-3));
  CHECK(std::abs(p.evaluate({{"x", 2.0}, {"y", 1.0}}) - 3.0) < 1e-15);
}

TEST_CASE("resultant") {
  const MultiPoly x = MultiPoly::var("x"), a = MultiPoly::var("a"), b = MultiPoly::var("b");
  CHECK(resultant(x * x - a, x - b, "x") == b * b - a);
  // Res(x^2 + p x + r, x^2 + s x + t) from the Sylvester determinant.
  const MultiPoly p = MultiPoly::var("p"), r = MultiPoly::var("r"), s = MultiPoly::var("s"), t = MultiPoly::var("t");
  const MultiPoly expect = (r - t).pow(2) + (p - s) * (p * t - r * s);
  CHECK(resultant(x * x + p * x + r, x * x + s * x + t, "x") == expect);
  CHECK_THROWS_AS(resultant(a, x - b, "x"), std::invalid_argument);
}
