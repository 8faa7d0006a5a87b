#pragma once

#include "qgraph/qalg/laurent_rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qgraph {

/// Colors (a, b, c) of the three theta edges; color n is the spin-n/2 representation.
struct ThetaColoring {
  long a = 0, b = 0, c = 0;
  friend bool operator==(const ThetaColoring&, const ThetaColoring&) = default;
};

/// Tetrahedron colors in the order (j1, j2, j12, j3, j4, j23).
struct TetColoring {
  std::array<long, 6> j{};
  long j1() const { return j[0]; }
  long j2() const { return j[1]; }
  long j12() const { return j[2]; }
  long j3() const { return j[3]; }
  long j4() const { return j[4]; }
  long j23() const { return j[5]; }
  friend bool operator==(const TetColoring&, const TetColoring&) = default;
  friend auto operator<=>(const TetColoring&, const TetColoring&) = default;
};

/// Range of the summation index m; empty when m_min > m_max.
struct SumBounds {
  long m_min = 0, m_max = -1;
  bool empty() const { return m_min > m_max; }
};

/// Lower factorials of the 6j summand.
///   triangle_sum: [m - (j_a + j_b + j_c)/2]! over the four vertex triples (adopted).
///   printed:      [m - (j1 - j2 - j12)/2]!, [m - (j3 - j4 - j12)/2]!, [m - (j1 - j4 - j23)/2]!,
///                 [m - (j2 - j3 - j23)/2]!, with m >= 0.
enum class Convention { triangle_sum, printed };
std::string to_string(Convention c);

/// Parameters of the 4phi3 form. `corrected` uses (j2 + j3 - j23)/2 and (j12 + j23 - j1 - j3)/2 in the
/// slots where the printed form has j12 and j1 + j2.
enum class HypergeomParams { corrected, printed };

bool is_admissible(long a, long b, long c);
bool is_admissible(const ThetaColoring& col);
/// All four vertex triples admissible.
bool is_admissible(const TetColoring& col);

/// E/3 + 1 for a trivalent graph with E edges. Throws std::invalid_argument unless E >= 3, 3 | E.
long genus_of_graph(long E);

LaurentRat theta_invariant(const ThetaColoring& col);
/// Nonzero theta value as a cyclotomic product; nullopt if inadmissible.
std::optional<QProduct> theta_product(const ThetaColoring& col);

/// J(a+2, b, c) / J(a, b, c). Throws std::domain_error when (a, b, c) or (a+2, b, c) is
/// inadmissible or the factor [(-a+b+c)/2] vanishes.
LaurentRat theta_recursion_factor(const ThetaColoring& col);

/// Summands of the 6j sum as signed cyclotomic products.
struct TetSum {
  SumBounds bounds;
  std::vector<QProduct> terms;
  std::vector<int> signs;
};
SumBounds tet_sum_bounds(const TetColoring& col, Convention conv = Convention::triangle_sum);
TetSum tet_sum_terms(const TetColoring& col, Convention conv = Convention::triangle_sum);

LaurentRat tet_primed(const TetColoring& col, Convention conv = Convention::triangle_sum);
/// Delta(j1,j2,j12) Delta(j3,j4,j12) Delta(j1,j4,j23) Delta(j2,j3,j23) / ([j1]! ... [j23]!).
std::optional<QProduct> tet_prefactor(const TetColoring& col);
LaurentRat tet_full(const TetColoring& col, Convention conv = Convention::triangle_sum);

/// Prefactor times terminating 4phi3; equals tet_primed (unit 1). With `corrected` parameters the coloring is first moved by a
/// tetrahedral symmetry so that (j1+j2+j3+j4)/2 is the smallest quadrilateral sum, which keeps all
/// denominator Pochhammer symbols nonzero. The printed parameters are evaluated literally and throw
/// std::domain_error where a factorial argument is negative or a Pochhammer symbol vanishes.
LaurentRat tet_hypergeom(const TetColoring& col, HypergeomParams params = HypergeomParams::corrected);

/// Identity followed by the four displayed relabelings.
std::vector<TetColoring> tet_symmetry_orbit(const TetColoring& col);
/// Permutations of the six positions generated by the displayed relabelings (24 elements,
/// identity first).
const std::vector<std::array<int, 6>>& tet_symmetry_group();
TetColoring apply_permutation(const std::array<int, 6>& perm, const TetColoring& col);

struct ReductionResult {
  bool equal = false;
  std::optional<LaurentPoly> unit;  ///< tet_full / theta when it is a unit c v^k
  LaurentRat tet, theta;
};
/// Compares tet_full(a, b, c, b, a, 0) with theta_invariant(a, b, c).
ReductionResult theta_reduction_check(long a, long b, long c);

}  // namespace qgraph
