#include "qgraph/invariants/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qgraph {

namespace {

using Triple = std::array<long, 3>;

std::array<Triple, 4> vertex_triples(const TetColoring& c) {
  return {{{c.j1(), c.j2(), c.j12()}, {c.j3(), c.j4(), c.j12()}, {c.j1(), c.j4(), c.j23()}, {c.j2(), c.j3(), c.j23()}}};
}

std::array<long, 3> quad_sums(const TetColoring& c) {
  return {(c.j1() + c.j2() + c.j3() + c.j4()) / 2, (c.j1() + c.j3() + c.j12() + c.j23()) / 2,
          (c.j2() + c.j4() + c.j12() + c.j23()) / 2};
}

std::array<long, 4> lower_offsets(const TetColoring& c, Convention conv) {
  if (conv == Convention::triangle_sum) {
    std::array<long, 4> t{};
    auto tr = vertex_triples(c);
    for (std::size_t i = 0; i < 4; ++i) t[i] = (tr[i][0] + tr[i][1] + tr[i][2]) / 2;
    return t;
  }
  return {(c.j1() - c.j2() - c.j12()) / 2, (c.j3() - c.j4() - c.j12()) / 2, (c.j1() - c.j4() - c.j23()) / 2,
          (c.j2() - c.j3() - c.j23()) / 2};
}

QProduct fact(long n) { return QProduct::q_factorial(n); }

QProduct delta(long a, long b, long c) { return fact((-a + b + c) / 2) * fact((a - b + c) / 2) * fact((a + b - c) / 2); }

// (q^e; q)_k as a product of (1 - v^(2(e+i))), nullopt if a factor vanishes.
std::optional<QProduct> pochhammer(long e, long k) {
  QProduct p;
  for (long i = 0; i < k; ++i) {
    if (e + i == 0) return std::nullopt;
    p *= QProduct::one_minus_vpow(2 * (e + i));
  }
  return p;
}

std::vector<std::array<int, 6>> generate_group() {
  const std::array<std::array<int, 6>, 4> gens{{
      {1, 0, 2, 4, 3, 5},
      {2, 1, 0, 5, 4, 3},
      {3, 1, 5, 0, 4, 2},
      {3, 4, 2, 0, 1, 5},
  }};
  std::vector<std::array<int, 6>> group{{0, 1, 2, 3, 4, 5}};
  std::set<std::array<int, 6>> seen(group.begin(), group.end());
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& g : gens) {
      std::array<int, 6> h{};
      for (std::size_t k = 0; k < 6; ++k) h[k] = group[i][static_cast<std::size_t>(g[k])];
      if (seen.insert(h).second) group.push_back(h);
    }
  return group;
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::triangle_sum ? "triangle-sum" : "printed"; }

bool is_admissible(long a, long b, long c) {
  return a >= 0 && b >= 0 && c >= 0 && std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0;
}

bool is_admissible(const ThetaColoring& col) { return is_admissible(col.a, col.b, col.c); }

bool is_admissible(const TetColoring& col) {
  for (const auto& t : vertex_triples(col))
    if (!is_admissible(t[0], t[1], t[2])) return false;
  return true;
}

long genus_of_graph(long E) {
  if (E < 3 || E % 3) throw std::invalid_argument("genus_of_graph: edge count must be a positive multiple of 3");
  return E / 3 + 1;
}

std::optional<QProduct> theta_product(const ThetaColoring& col) {
  if (!is_admissible(col)) return std::nullopt;
  const long s = (col.a + col.b + col.c) / 2;
  QProduct p = fact(s + 1) * fact(s - col.a) * fact(s - col.b) * fact(s - col.c);
  p /= fact(col.a) * fact(col.b) * fact(col.c);
  if (s % 2) p.negate();
  return p;
}

LaurentRat theta_invariant(const ThetaColoring& col) {
  auto p = theta_product(col);
  return p ? LaurentRat(*p) : LaurentRat{};
}

LaurentRat theta_recursion_factor(const ThetaColoring& col) {
  const long a = col.a, b = col.b, c = col.c;
  if (!is_admissible(col) || !is_admissible(a + 2, b, c))
    throw std::domain_error("theta_recursion_factor: (a,b,c) and (a+2,b,c) must both be admissible");
  if (-a + b + c == 0) throw std::domain_error("theta_recursion_factor: [(-a+b+c)/2] = [0] = 0");
  QProduct num = QProduct::q_int((a + b + c) / 2 + 2) * QProduct::q_int((a - b + c) / 2 + 1) *
                 QProduct::q_int((a + b - c) / 2 + 1);
  QProduct den = QProduct::q_int((-a + b + c) / 2) * QProduct::q_int(a + 1) * QProduct::q_int(a + 2);
  return LaurentRat((num / den).negate());
}

SumBounds tet_sum_bounds(const TetColoring& col, Convention conv) {
  auto lo = lower_offsets(col, conv);
  auto hi = quad_sums(col);
  SumBounds b{*std::max_element(lo.begin(), lo.end()), *std::min_element(hi.begin(), hi.end())};
  if (conv == Convention::printed) b.m_min = std::max(b.m_min, 0L);
  return b;
}

TetSum tet_sum_terms(const TetColoring& col, Convention conv) {
  TetSum s;
  if (!is_admissible(col)) return s;
  s.bounds = tet_sum_bounds(col, conv);
  const auto lo = lower_offsets(col, conv);
  const auto hi = quad_sums(col);
  for (long m = s.bounds.m_min; m <= s.bounds.m_max; ++m) {
    QProduct den;
    for (long t : lo) den *= fact(m - t);
    for (long u : hi) den *= fact(u - m);
    s.terms.push_back(fact(m + 1) / den);
    s.signs.push_back(m % 2 ? -1 : 1);
  }
  return s;
}

LaurentRat tet_primed(const TetColoring& col, Convention conv) {
  TetSum s = tet_sum_terms(col, conv);
  return LaurentRat::sum(s.terms, s.signs);
}

std::optional<QProduct> tet_prefactor(const TetColoring& col) {
  if (!is_admissible(col)) return std::nullopt;
  QProduct p;
  for (const auto& t : vertex_triples(col)) p *= delta(t[0], t[1], t[2]);
  for (long k : col.j) p /= fact(k);
  return p;
}

LaurentRat tet_full(const TetColoring& col, Convention conv) {
  auto pre = tet_prefactor(col);
  if (!pre) return {};
  return LaurentRat(*pre) * tet_primed(col, conv);
}

LaurentRat tet_hypergeom(const TetColoring& input, HypergeomParams params) {
  if (!is_admissible(input)) return {};
  TetColoring col = input;
  if (params == HypergeomParams::corrected) {
    for (const auto& g : tet_symmetry_group()) {
      TetColoring c = apply_permutation(g, input);
      auto q = quad_sums(c);
      if (q[0] <= q[1] && q[0] <= q[2]) {
        col = c;
        break;
      }
    }
  }
  const long j1 = col.j1(), j2 = col.j2(), j12 = col.j12(), j3 = col.j3(), j4 = col.j4(), j23 = col.j23();
  const bool fixed = params == HypergeomParams::corrected;
  const long Q1 = (j1 + j2 + j3 + j4) / 2;
  const long n4 = fixed ? (j2 + j3 - j23) / 2 : (j2 + j3 - j12) / 2;
  const long p6 = fixed ? (j12 + j23 - j1 - j3) / 2 : (j12 + j23 - j1 - j2) / 2;
  const std::array<long, 6> lower{(j1 + j2 - j12) / 2, (j1 + j4 - j23) / 2, (j3 + j4 - j12) / 2, n4,
                                  (j12 + j23 - j2 - j4) / 2, p6};
  for (long n : lower)
    if (n < 0) throw std::domain_error("tet_hypergeom: negative factorial argument in prefactor");
  QProduct pre = fact(Q1 + 1);
  for (long n : lower) pre /= fact(n);
  if (Q1 % 2) pre.negate();
  // Numerator parameters q^(-N_i); the series terminates at min N_i over the nonnegative ones.
  const std::array<long, 4> a_exp{-lower[0], -lower[1], -lower[2], -n4};
  const std::array<long, 3> b_exp{-Q1 - 1, lower[4] + 1, p6 + 1};
  long kmax = -1;
  for (long e : a_exp)
    if (e <= 0) kmax = kmax < 0 ? -e : std::min(kmax, -e);
  if (kmax < 0) throw std::domain_error("tet_hypergeom: non-terminating series");
  std::vector<QProduct> terms;
  for (long k = 0; k <= kmax; ++k) {
    QProduct t = pre;
    bool zero = false;
    for (long e : a_exp) {
      auto p = pochhammer(e, k);
      if (!p) {
        zero = true;
        break;
      }
      t *= *p;
    }
    if (zero) continue;
    for (long e : b_exp) {
      auto p = pochhammer(e, k);
      if (!p) throw std::domain_error("tet_hypergeom: vanishing denominator Pochhammer symbol");
      t /= *p;
    }
    t /= *pochhammer(1, k);
    t.shift(static_cast<int>(2 * k));
    terms.push_back(std::move(t));
  }
  return LaurentRat::sum(terms);
}

std::vector<TetColoring> tet_symmetry_orbit(const TetColoring& c) {
  const long j1 = c.j1(), j2 = c.j2(), j12 = c.j12(), j3 = c.j3(), j4 = c.j4(), j23 = c.j23();
  return {c,
          TetColoring{{j2, j1, j12, j4, j3, j23}},
          TetColoring{{j12, j2, j1, j23, j4, j3}},
          TetColoring{{j3, j2, j23, j1, j4, j12}},
          TetColoring{{j3, j4, j12, j1, j2, j23}}};
}

const std::vector<std::array<int, 6>>& tet_symmetry_group() {
  static const std::vector<std::array<int, 6>> group = generate_group();
  return group;
}

TetColoring apply_permutation(const std::array<int, 6>& perm, const TetColoring& col) {
  TetColoring out;
  for (std::size_t k = 0; k < 6; ++k) out.j[k] = col.j[static_cast<std::size_t>(perm[k])];
  return out;
}

ReductionResult theta_reduction_check(long a, long b, long c) {
  if (!is_admissible(a, b, c)) throw std::invalid_argument("theta_reduction_check: inadmissible coloring");
  ReductionResult r;
  r.tet = tet_full(TetColoring{{a, b, c, b, a, 0}});
  r.theta = theta_invariant({a, b, c});
  r.unit = r.tet.unit_ratio(r.theta);
  r.equal = r.unit.has_value();
  return r;
}

}  // namespace qgraph
