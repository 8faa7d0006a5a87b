#include "qgraph/invariants/invariants.hpp"
#include "qgraph/qalg/format.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qgraph;

namespace {

// Independent rational evaluation of the triangle-sum 6j formula at a rational point v.
Rational qi(long n, const Rational& v) {
  Rational a = 1, b = 1;
  for (long k = 0; k < n; ++k) a *= v, b /= v;
  return Rational((a - b) / (v - 1 / v));
}
Rational qf(long n, const Rational& v) {
  Rational r = 1;
  for (long k = 1; k <= n; ++k) r *= qi(k, v);
  return r;
}
Rational naive_primed(const TetColoring& c, const Rational& v) {
  const auto& j = c.j;
  const long t[4] = {(j[0] + j[1] + j[2]) / 2, (j[3] + j[4] + j[2]) / 2, (j[0] + j[4] + j[5]) / 2, (j[1] + j[3] + j[5]) / 2};
  const long q[3] = {(j[0] + j[1] + j[3] + j[4]) / 2, (j[0] + j[3] + j[2] + j[5]) / 2, (j[1] + j[4] + j[2] + j[5]) / 2};
  Rational s = 0;
  for (long m = *std::max_element(t, t + 4); m <= *std::min_element(q, q + 3); ++m) {
    Rational den = 1;
    for (long x : t) den *= qf(m - x, v);
    for (long x : q) den *= qf(x - m, v);
    s += (m % 2 ? -1 : 1) * qf(m + 1, v) / den;
  }
  return s;
}
Rational naive_delta(long a, long b, long c, const Rational& v) {
  return qf((-a + b + c) / 2, v) * qf((a - b + c) / 2, v) * qf((a + b - c) / 2, v);
}
Rational naive_full(const TetColoring& c, const Rational& v) {
  const auto& j = c.j;
  Rational pre = naive_delta(j[0], j[1], j[2], v) * naive_delta(j[3], j[4], j[2], v) *
                 naive_delta(j[0], j[4], j[5], v) * naive_delta(j[1], j[3], j[5], v);
  for (long x : j) pre /= qf(x, v);
  return pre * naive_primed(c, v);
}

LaurentPoly from_v(std::initializer_list<std::pair<int, long>> t) {
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [e, c] : t) terms.emplace_back(e, Rational(c));
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK(is_admissible(2, 2, 2));
  CHECK(is_admissible(1, 1, 0));
  CHECK_FALSE(is_admissible(1, 1, 1));
  CHECK_FALSE(is_admissible(4, 1, 1));
  CHECK_FALSE(is_admissible(-2, 2, 0));
  CHECK(is_admissible(TetColoring{{2, 2, 2, 2, 2, 2}}));
  CHECK_FALSE(is_admissible(TetColoring{{2, 2, 2, 2, 2, 1}}));
  CHECK(genus_of_graph(3) == 2);
  CHECK(genus_of_graph(6) == 3);
  CHECK_THROWS_AS(genus_of_graph(4), std::invalid_argument);
}

TEST_CASE("theta golden values") {
  CHECK(theta_invariant({0, 0, 0}) == LaurentRat(1));
  CHECK(theta_invariant({1, 1, 0}) == LaurentRat(-q_int(2)));
  const LaurentRat t222 = theta_invariant({2, 2, 2});
  CHECK(t222 == LaurentRat(-(q_int(4) * q_int(3)), q_int(2) * q_int(2)));
  CHECK(t222.evaluate(1) == -3);
  CHECK(theta_invariant({1, 1, 1}).is_zero());
  CHECK_FALSE(theta_product({1, 2, 4}));
}

TEST_CASE("theta with a zero edge is a loop value") {
  for (long a = 0; a <= 12; ++a) {
    const LaurentRat expect = LaurentRat(q_int(a + 1)) * LaurentRat(a % 2 ? -1 : 1);
    CHECK(theta_invariant({a, a, 0}) == expect);
  }
}

TEST_CASE("theta is symmetric and palindromic") {
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b)
      for (long c = 0; c <= 8; ++c) {
        if (!is_admissible(a, b, c)) continue;
        const LaurentRat t = theta_invariant({a, b, c});
        CHECK(t == theta_invariant({b, c, a}));
        CHECK(t == theta_invariant({b, a, c}));
        CHECK(t.inverted() == t);
      }
}

TEST_CASE("theta recursion factor") {
  CHECK(theta_recursion_factor({2, 2, 2}) * theta_invariant({2, 2, 2}) == theta_invariant({4, 2, 2}));
  CHECK_THROWS_AS(theta_recursion_factor({2, 2, 0}), std::domain_error);
}

TEST_CASE("tet golden values") {
  CHECK(tet_full(TetColoring{}) == LaurentRat(1));
  CHECK(tet_primed(TetColoring{}) == LaurentRat(1));
  const TetColoring c222{{2, 2, 2, 2, 2, 2}};
  CHECK(tet_primed(c222) == LaurentRat(from_v({{-10, 1}, {-8, 4}, {-6, 8}, {-4, 12}, {-2, 15}, {0, 16},
                                                {2, 15}, {4, 12}, {6, 8}, {8, 4}, {10, 1}})));
  CHECK(tet_full(c222) == LaurentRat(from_v({{-4, 1}, {0, 2}, {4, 2}, {8, 1}}), from_v({{0, 1}, {2, 2}, {4, 1}})));
  CHECK(tet_full(c222).evaluate(Rational(3, 2)) == Rational(786961, 219024));
  CHECK(tet_primed(TetColoring{{1, 1, 2, 1, 1, 2}}) == LaurentRat(from_v({{-3, 1}, {-1, 2}, {1, 2}, {3, 1}})));
  CHECK(tet_full(TetColoring{{1, 1, 2, 1, 1, 2}}).evaluate(Rational(3, 2)) == Rational(133, 78));
  CHECK(tet_primed(TetColoring{{3, 1, 2, 1, 3, 4}}).is_zero());
  CHECK(tet_full(TetColoring{{2, 2, 2, 2, 2, 1}}).is_zero());
}

TEST_CASE("tet agrees with an independent rational evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(0, 6);
  int tested = 0;
  const Rational pts[] = {Rational(3, 2), Rational(2, 7)};
  while (tested < 60) {
    TetColoring c;
    for (auto& x : c.j) x = d(rng);
    if (!is_admissible(c)) continue;
    ++tested;
    const LaurentRat p = tet_primed(c), f = tet_full(c);
    for (const auto& v : pts) {
      CHECK(p.evaluate(v) == naive_primed(c, v));
      CHECK(f.evaluate(v) == naive_full(c, v));
    }
  }
}

TEST_CASE("sum bounds") {
  const auto b = tet_sum_bounds(TetColoring{{2, 2, 2, 2, 2, 2}});
  CHECK(b.m_min == 3);
  CHECK(b.m_max == 4);
  CHECK(tet_sum_terms(TetColoring{{2, 2, 2, 2, 2, 2}}).terms.size() == 2);
}

TEST_CASE("tetrahedral symmetry") {
  CHECK(tet_symmetry_group().size() == 24);
  const TetColoring c{{2, 4, 4, 2, 2, 2}};
  CHECK(tet_symmetry_orbit(c).size() == 5);
  CHECK(tet_symmetry_orbit(c).front() == c);
  const LaurentRat v = tet_full(c);
  for (const auto& p : tet_symmetry_group()) CHECK(tet_full(apply_permutation(p, c)) == v);
}

TEST_CASE("printed convention breaks symmetry") {
  long broken = 0;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long e = 0; e <= 3; ++e) {
        const TetColoring c{{a, b, e, a, b, e}};
        if (!is_admissible(c)) continue;
        for (const auto& img : tet_symmetry_orbit(c))
          if (tet_full(img, Convention::printed) != tet_full(c, Convention::printed)) {
            ++broken;
            break;
          }
      }
  CHECK(broken > 0);
}

TEST_CASE("reduction to theta") {
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c) {
        if (!is_admissible(a, b, c)) continue;
        const auto r = theta_reduction_check(a, b, c);
        CHECK(r.equal);
        REQUIRE(r.unit);
        CHECK(*r.unit == LaurentPoly(1));
      }
}

TEST_CASE("hypergeometric form") {
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long e = 0; e <= 4; ++e)
        for (long f = 0; f <= 4; ++f) {
          const TetColoring c{{a, b, e, b, a, f}};
          if (!is_admissible(c)) continue;
          CHECK(tet_hypergeom(c) == tet_primed(c));
        }
  CHECK(tet_hypergeom(TetColoring{{3, 3, 4, 3, 3, 2}}) == tet_primed(TetColoring{{3, 3, 4, 3, 3, 2}}));
}
