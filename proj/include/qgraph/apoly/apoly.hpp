#pragma once

#include "qgraph/invariants/invariants.hpp"
#include "qgraph/qalg/multi_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgraph {

enum class Graph { theta, tet };
std::string to_string(Graph g);
/// Throws std::invalid_argument for names other than "theta" and "tet".
Graph parse_graph(const std::string& name);

/// Edge labels: {a, b, c} for theta, {1, 2, 12, 3, 4, 23} for tet (color order).
const std::vector<std::string>& edge_labels(Graph g);
/// Position of an edge in the color tuple. Throws std::invalid_argument for unknown labels.
std::size_t edge_index(Graph g, const std::string& edge);
std::string x_name(const std::string& edge);  ///< "x_" + edge
std::string y_name(const std::string& edge);  ///< "y_" + edge

/// A_j = sum_l b_l(x, q) y_j^l. Each b_l is evaluated at the unshifted colors and multiplies the
/// invariant at the l-times-shifted coloring.
struct OperatorPoly {
  Graph graph = Graph::theta;
  std::string edge;
  std::vector<MultiPoly> coeffs;
};

struct ClassicalAPoly {
  Graph graph = Graph::theta;
  std::string edge;
  MultiPoly poly;
};

/// Operator coefficients as displayed, read with y acting first, or normal ordered so that the
/// coefficients act on the unshifted colors: b_l(x) = printed_l(x_j -> q^l x_j).
enum class Ordering { normal, printed };

/// `corrected`: repaired q-powers and sign in the tet operator, and the matching sign in the
/// classical tet polynomial. `printed`: the displayed formulas.
enum class Variant { corrected, printed };

ClassicalAPoly theta_classical_A(const std::string& edge);
OperatorPoly theta_quantum_A(const std::string& edge, Ordering ordering = Ordering::normal);

ClassicalAPoly tet_classical_A(const std::string& edge, Variant variant = Variant::corrected);
OperatorPoly tet_quantum_A(const std::string& edge, Variant variant = Variant::corrected,
                           Ordering ordering = Ordering::normal);

/// Variable swaps carrying the edge-1 tet polynomials to edge k (identity for "1").
std::map<std::string, std::string> tet_edge_relabeling(const std::string& edge);
/// Coloring with positions exchanged according to tet_edge_relabeling(edge).
TetColoring relabel_coloring(const std::string& edge, const TetColoring& col);

/// q = 1, y_j commuting.
ClassicalAPoly classical_limit(const OperatorPoly& op);

/// Memoized invariant family: theta_invariant or tet_primed. Not thread safe; use one per worker.
class FamilyCache {
 public:
  explicit FamilyCache(Graph g) : graph_(g) {}
  Graph graph() const { return graph_; }
  const LaurentRat& value(const std::vector<long>& colors);

 private:
  Graph graph_;
  std::map<std::vector<long>, LaurentRat> memo_;
};

/// sum_l b_l(x_i = v^(n_i), q = v^2) J(colors + 2 l e_edge); inadmissible colorings contribute 0.
LaurentRat apply_operator(const OperatorPoly& op, const std::vector<long>& colors, FamilyCache& cache);
LaurentRat apply_operator(const OperatorPoly& op, const std::vector<long>& colors);

struct RecursionCoeffs {
  LaurentRat alpha, beta, gamma;
};
/// alpha, beta, gamma with beta's three summands weighted by `signs` (displayed: +1, +1, -1).
/// Brackets of negative argument use [-n] = -[n]. With `check_shifts`, throws std::domain_error
/// unless the colorings with j1 - 2, j1, j1 + 2 are all admissible.
RecursionCoeffs tet_recursion_coeffs(const TetColoring& col, std::array<int, 3> signs = {1, 1, -1},
                                     bool check_shifts = true);
/// alpha J'(j1+2) - beta J'(j1) + gamma J'(j1-2).
LaurentRat tet_recursion_residual(const TetColoring& col, FamilyCache& cache, std::array<int, 3> signs = {1, 1, -1});

/// The two saddle relations with denominators cleared, as polynomials in z.
struct SaddleEquations {
  MultiPoly stationary;  ///< N(z) - D(z), where the saddle condition reads N/D = 1
  MultiPoly twist;       ///< y_1 (z - x1x2x3x4)(z - x1x3x12x23) - x3 (z - x1x4x23)(z - x1x2x12)
  MultiPoly quartic_coefficient;
};
SaddleEquations saddle_equations();

struct Elimination {
  MultiPoly resultant;
  bool divides = false;
  MultiPoly quotient;
  int degree_y1 = 0;
};
/// z-resultant of the saddle relations and its exact division by tet_classical_A(1, variant).
Elimination eliminate_saddle(Variant variant = Variant::corrected);

}  // namespace qgraph
