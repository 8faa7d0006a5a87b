#include "qgraph/apoly/apoly.hpp"

#include <stdexcept>

namespace qgraph {

namespace {

MultiPoly X(const std::string& e) { return MultiPoly::var(x_name(e)); }
MultiPoly Q(int k) { return MultiPoly::q(k); }
const MultiPoly kOne(1);

MultiPoly normal_order(const MultiPoly& printed, const std::string& edge, int l) {
  if (l == 0) return printed;
  return printed.substitute({{x_name(edge), Q(l) * X(edge)}});
}

// Theta operator for edge e with other edges o1, o2, as displayed (A_c with (1 - x_c^2) restored).
std::vector<MultiPoly> theta_printed(const std::string& e, const std::string& o1, const std::string& o2) {
  const MultiPoly xe = X(e), x1 = X(o1), x2 = X(o2);
  const MultiPoly b0 = xe * (Q(1) * xe * x1 - x2) * (Q(1) * xe * x2 - x1) * (kOne - Q(2) * xe * x1 * x2);
  const MultiPoly b1 = MultiPoly::var(MultiPoly::kV, -3) * x1 * x2 * (kOne - xe * xe) * (Q(1) - xe * xe) *
                       (xe - Q(1) * x1 * x2);
  return {b0, b1};
}

std::array<std::string, 2> theta_others(const std::string& edge) {
  if (edge == "a") return {"b", "c"};
  if (edge == "b") return {"a", "c"};
  if (edge == "c") return {"a", "b"};
  throw std::invalid_argument("theta edge must be a, b or c, got '" + edge + "'");
}

std::vector<MultiPoly> tet_printed_edge1(Variant variant) {
  const MultiPoly x1 = X("1"), x2 = X("2"), x12 = X("12"), x3 = X("3"), x4 = X("4"), x23 = X("23");
  const bool fix = variant == Variant::corrected;
  const MultiPoly x1s = x1 * x1;
  const MultiPoly b2 = Q(fix ? -3 : 3) * x3 * (Q(2) - x1s) * (x1 * x4 - x23) * (x4 - x1 * x23) * (x1 * x2 - x12) *
                       (x2 - x1 * x12);
  const MultiPoly s1 = Q(fix ? -1 : 2) * x4 * x12 * (kOne - x1s) * (kOne - Q(1) * x1s) * (kOne - Q(2) * x1s) *
                       (x3 - x2 * x23) * (kOne - Q(1) * x3 * x2 * x23);
  const MultiPoly s2 = Q(fix ? 0 : 3) * x3 * (kOne - x1s) * (x23 - Q(1) * x1 * x4) * (x1 - x4 * x23) *
                       (x1 - x2 * x12) * (x2 - Q(1) * x1 * x12);
  const MultiPoly s3 = Q(fix ? -1 : 1) * x3 * (kOne - Q(2) * x1s) * (x4 - x1 * x23) * (kOne - Q(1) * x1 * x4 * x23) *
                       (x12 - x1 * x2) * (kOne - Q(1) * x1 * x2 * x12);
  const MultiPoly b1 = -((fix ? -s1 : s1) + s2 + s3);
  const MultiPoly b0 = x3 * (kOne - Q(4) * x1s) * (x1 - x4 * x23) * (kOne - Q(2) * x1 * x4 * x23) * (x1 - x2 * x12) *
                       (kOne - Q(2) * x1 * x2 * x12);
  return {b0, b1, b2};
}

MultiPoly tet_classical_edge1(Variant variant) {
  const MultiPoly x1 = X("1"), x2 = X("2"), x12 = X("12"), x3 = X("3"), x4 = X("4"), x23 = X("23");
  const MultiPoly y = MultiPoly::var(y_name("1"));
  const MultiPoly x1s = x1 * x1;
  const MultiPoly c2 = x3 * (x1 * x4 - x23) * (x4 - x1 * x23) * (x1 * x2 - x12) * (x2 - x1 * x12);
  const MultiPoly s1 = x4 * x12 * (kOne - x1s).pow(2) * (x3 - x2 * x23) * (kOne - x3 * x2 * x23);
  const MultiPoly s2 = x3 * (x23 - x1 * x4) * (x1 - x4 * x23) * (x1 - x2 * x12) * (x2 - x1 * x12);
  const MultiPoly s3 = x3 * (x4 - x1 * x23) * (kOne - x1 * x4 * x23) * (x12 - x1 * x2) * (kOne - x1 * x2 * x12);
  const MultiPoly c1 = -((variant == Variant::corrected ? -s1 : s1) + s2 + s3);
  const MultiPoly c0 = x3 * (x1 - x4 * x23) * (x1 - x2 * x12) * (kOne - x1 * x4 * x23) * (kOne - x1 * x2 * x12);
  return c2 * y * y + c1 * y + c0;
}

std::map<std::string, std::string> swap_pairs(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::map<std::string, std::string> m;
  for (const auto& [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

// [n] for any integer n, with [-n] = -[n].
QProduct bracket(long n) {
  if (n == 0) return QProduct(Rational(0));
  QProduct p = QProduct::q_int(std::abs(n));
  if (n < 0) p.negate();
  return p;
}

LaurentRat bracket_product(std::initializer_list<long> args) {
  QProduct p;
  for (long n : args) {
    if (n == 0) return {};
    p *= bracket(n);
  }
  return LaurentRat(p);
}

TetColoring shift_j1(const TetColoring& c, long d) {
  TetColoring s = c;
  s.j[0] += d;
  return s;
}

std::vector<long> to_vector(const TetColoring& c) { return {c.j.begin(), c.j.end()}; }

}  // namespace

std::string to_string(Graph g) { return g == Graph::theta ? "theta" : "tet"; }

Graph parse_graph(const std::string& name) {
  if (name == "theta") return Graph::theta;
  if (name == "tet") return Graph::tet;
  throw std::invalid_argument("graph must be 'theta' or 'tet', got '" + name + "'");
}

const std::vector<std::string>& edge_labels(Graph g) {
  static const std::vector<std::string> theta{"a", "b", "c"};
  static const std::vector<std::string> tet{"1", "2", "12", "3", "4", "23"};
  return g == Graph::theta ? theta : tet;
}

std::size_t edge_index(Graph g, const std::string& edge) {
  const auto& labels = edge_labels(g);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == edge) return i;
  throw std::invalid_argument("unknown " + to_string(g) + " edge '" + edge + "'");
}

std::string x_name(const std::string& edge) { return "x_" + edge; }
std::string y_name(const std::string& edge) { return "y_" + edge; }

ClassicalAPoly theta_classical_A(const std::string& edge) {
  const auto [o1, o2] = theta_others(edge);
  const MultiPoly xe = X(edge), x1 = X(o1), x2 = X(o2);
  MultiPoly p = xe * (xe * x1 - x2) * (xe * x2 - x1) * (kOne - xe * x1 * x2) +
                x1 * x2 * (kOne - xe * xe).pow(2) * (xe - x1 * x2) * MultiPoly::var(y_name(edge));
  return {Graph::theta, edge, p};
}

OperatorPoly theta_quantum_A(const std::string& edge, Ordering ordering) {
  const auto [o1, o2] = theta_others(edge);
  auto coeffs = theta_printed(edge, o1, o2);
  if (ordering == Ordering::normal)
    for (std::size_t l = 0; l < coeffs.size(); ++l) coeffs[l] = normal_order(coeffs[l], edge, static_cast<int>(l));
  return {Graph::theta, edge, coeffs};
}

std::map<std::string, std::string> tet_edge_relabeling(const std::string& edge) {
  if (edge == "1") return {};
  std::map<std::string, std::string> m;
  if (edge == "2")
    m = swap_pairs({{"1", "2"}, {"3", "4"}});
  else if (edge == "3")
    m = swap_pairs({{"1", "3"}, {"12", "23"}});
  else if (edge == "4")
    m = swap_pairs({{"1", "4"}, {"2", "3"}});
  else if (edge == "12")
    m = swap_pairs({{"1", "12"}, {"3", "23"}});
  else if (edge == "23")
    m = swap_pairs({{"1", "23"}, {"3", "12"}});
  else
    throw std::invalid_argument("tet edge must be one of 1, 2, 12, 3, 4, 23, got '" + edge + "'");
  std::map<std::string, std::string> names;
  for (const auto& [a, b] : m) names[x_name(a)] = x_name(b);
  names[y_name("1")] = y_name(edge);
  return names;
}

TetColoring relabel_coloring(const std::string& edge, const TetColoring& col) {
  TetColoring out = col;
  for (const auto& [from, to] : tet_edge_relabeling(edge)) {
    if (from.rfind("x_", 0) != 0) continue;
    out.j[edge_index(Graph::tet, from.substr(2))] = col.j[edge_index(Graph::tet, to.substr(2))];
  }
  return out;
}

ClassicalAPoly tet_classical_A(const std::string& edge, Variant variant) {
  return {Graph::tet, edge, tet_classical_edge1(variant).rename(tet_edge_relabeling(edge))};
}

OperatorPoly tet_quantum_A(const std::string& edge, Variant variant, Ordering ordering) {
  auto coeffs = tet_printed_edge1(variant);
  if (ordering == Ordering::normal)
    for (std::size_t l = 0; l < coeffs.size(); ++l) coeffs[l] = normal_order(coeffs[l], "1", static_cast<int>(l));
  const auto names = tet_edge_relabeling(edge);
  for (auto& c : coeffs) c = c.rename(names);
  return {Graph::tet, edge, coeffs};
}

ClassicalAPoly classical_limit(const OperatorPoly& op) {
  MultiPoly p;
  const MultiPoly y = MultiPoly::var(y_name(op.edge));
  for (std::size_t l = 0; l < op.coeffs.size(); ++l)
    p += op.coeffs[l].substitute({{MultiPoly::kV, MultiPoly(1)}}) * y.pow(static_cast<unsigned>(l));
  return {op.graph, op.edge, p};
}

const LaurentRat& FamilyCache::value(const std::vector<long>& colors) {
  auto it = memo_.find(colors);
  if (it != memo_.end()) return it->second;
  LaurentRat v;
  if (graph_ == Graph::theta) {
    if (colors.size() != 3) throw std::invalid_argument("theta family needs 3 colors");
    v = theta_invariant({colors[0], colors[1], colors[2]});
  } else {
    if (colors.size() != 6) throw std::invalid_argument("tet family needs 6 colors");
    TetColoring c;
    std::copy(colors.begin(), colors.end(), c.j.begin());
    v = tet_primed(c);
  }
  return memo_.emplace(colors, std::move(v)).first->second;
}

LaurentRat apply_operator(const OperatorPoly& op, const std::vector<long>& colors, FamilyCache& cache) {
  if (cache.graph() != op.graph) throw std::invalid_argument("apply_operator: family does not match operator graph");
  const auto& labels = edge_labels(op.graph);
  if (colors.size() != labels.size()) throw std::invalid_argument("apply_operator: wrong number of colors");
  const std::size_t k = edge_index(op.graph, op.edge);
  std::map<std::string, int> vpowers;
  for (std::size_t i = 0; i < labels.size(); ++i) vpowers[x_name(labels[i])] = static_cast<int>(colors[i]);
  LaurentRat sum;
  std::vector<long> shifted = colors;
  for (std::size_t l = 0; l < op.coeffs.size(); ++l) {
    shifted[k] = colors[k] + 2 * static_cast<long>(l);
    const LaurentRat& j = cache.value(shifted);
    if (j.is_zero() || op.coeffs[l].is_zero()) continue;
    sum += LaurentRat(op.coeffs[l].to_laurent(vpowers)) * j;
  }
  return sum;
}

LaurentRat apply_operator(const OperatorPoly& op, const std::vector<long>& colors) {
  FamilyCache cache(op.graph);
  return apply_operator(op, colors, cache);
}

RecursionCoeffs tet_recursion_coeffs(const TetColoring& col, std::array<int, 3> signs, bool check_shifts) {
  if (check_shifts && !(is_admissible(col) && is_admissible(shift_j1(col, 2)) && is_admissible(shift_j1(col, -2))))
    throw std::domain_error("tet_recursion_coeffs: colorings with j1-2, j1, j1+2 must be admissible");
  const long j1 = col.j1(), j2 = col.j2(), j12 = col.j12(), j3 = col.j3(), j4 = col.j4(), j23 = col.j23();
  RecursionCoeffs r;
  r.alpha = bracket_product({j1, (j1 + j4 - j23) / 2 + 1, (j1 + j23 - j4) / 2 + 1, (j1 + j2 - j12) / 2 + 1,
                             (j1 + j12 - j2) / 2 + 1});
  const LaurentRat t1 = bracket_product({j1 + 2, (j1 + j23 - j4) / 2, (j1 + j4 + j23) / 2 + 1, (j1 + j2 - j12) / 2,
                                         (j1 + j2 + j12) / 2 + 1});
  const LaurentRat t2 = bracket_product({j1, (j1 + j4 - j23) / 2 + 1, (j23 + j4 - j1) / 2, (j2 + j12 - j1) / 2,
                                         (j1 + j12 - j2) / 2 + 1});
  const LaurentRat t3 = bracket_product({j1, j1 + 1, j1 + 2, (j3 + j2 + j23) / 2 + 1, (j2 + j23 - j3) / 2});
  r.beta = LaurentRat(signs[0]) * t1 + LaurentRat(signs[1]) * t2 + LaurentRat(signs[2]) * t3;
  r.gamma = bracket_product({j1 + 2, (j1 + j4 + j23) / 2 + 1, (j23 + j4 - j1) / 2 + 1, (j2 + j12 + j1) / 2 + 1,
                             (j2 + j12 - j1) / 2 + 1});
  return r;
}

LaurentRat tet_recursion_residual(const TetColoring& col, FamilyCache& cache, std::array<int, 3> signs) {
  const RecursionCoeffs r = tet_recursion_coeffs(col, signs);
  return r.alpha * cache.value(to_vector(shift_j1(col, 2))) - r.beta * cache.value(to_vector(col)) +
         r.gamma * cache.value(to_vector(shift_j1(col, -2)));
}

SaddleEquations saddle_equations() {
  const MultiPoly x1 = X("1"), x2 = X("2"), x12 = X("12"), x3 = X("3"), x4 = X("4"), x23 = X("23");
  const MultiPoly z = MultiPoly::var("z"), y = MultiPoly::var(y_name("1"));
  const MultiPoly n = (z - kOne) * (z - x1 * x2 * x3 * x4) * (z - x1 * x3 * x12 * x23) * (z - x2 * x4 * x12 * x23);
  const MultiPoly d = (z - x1 * x2 * x12) * (z - x1 * x4 * x23) * (z - x2 * x3 * x23) * (z - x3 * x4 * x12);
  SaddleEquations eq;
  const MultiPoly diff = n - d;
  auto coeffs = n.coefficients("z");
  auto dcoeffs = d.coefficients("z");
  eq.quartic_coefficient = coeffs[4] - dcoeffs[4];
  eq.stationary = diff;
  eq.twist = y * (z - x1 * x2 * x3 * x4) * (z - x1 * x3 * x12 * x23) - x3 * (z - x1 * x4 * x23) * (z - x1 * x2 * x12);
  return eq;
}

Elimination eliminate_saddle(Variant variant) {
  const SaddleEquations eq = saddle_equations();
  Elimination e;
  e.resultant = resultant(eq.stationary, eq.twist, "z");
  e.degree_y1 = e.resultant.degree(y_name("1"));
  auto q = e.resultant.divide_exact(tet_classical_A("1", variant).poly);
  e.divides = q.has_value();
  if (q) e.quotient = std::move(*q);
  return e;
}

}  // namespace qgraph
