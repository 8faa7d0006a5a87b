#pragma once

#include "qgraph/apoly/apoly.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

using cplx = std::complex<double>;
using ThetaX = std::array<cplx, 3>;  ///< (x_a, x_b, x_c)
using TetX = std::array<cplx, 6>;    ///< (x_1, x_2, x_12, x_3, x_4, x_23)

/// Raised when a point lies within the guard distance of a singular locus:
/// |u - 1| < 1e-8 or |u| < 1e-12 for some potential argument u.
class SingularLocusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Holonomy eigenvalues keyed by edge label, with hbar (q = e^hbar).
struct HolonomyPoint {
  std::map<std::string, cplx> x;
  cplx hbar = 0.0;
};

/// Twist variables keyed by edge label.
struct TwistPoint {
  std::map<std::string, cplx> y;
};

ThetaX theta_coords(const HolonomyPoint& p);
TetX tet_coords(const HolonomyPoint& p);
HolonomyPoint make_point(Graph g, const std::vector<cplx>& x, cplx hbar = 0.0);

/// Li2 on the principal branch. On the real cut u > 1 the real part is returned.
cplx dilog(cplx u);

/// -(log u)^2 / 4 - Li2(u). Throws std::domain_error for u = 0.
cplx g_potential(cplx u);
/// u g'(u) = -log(u)/2 + log(1 - u), principal logarithms.
cplx g_log_derivative(cplx u);

cplx w_theta(const ThetaX& x);
cplx w_theta(const HolonomyPoint& p);

/// Arguments of the theta potential: x_a x_b x_c, x_b x_c / x_a, x_a x_c / x_b, x_a x_b / x_c, x_a^2, x_b^2, x_c^2.
std::array<cplx, 7> theta_arguments(const ThetaX& x);

/// log y_j = x_j dW/dx_j, evaluated analytically. Throws SingularLocusError near singular loci.
std::array<cplx, 3> log_y_theta(const ThetaX& x);
TwistPoint grad_log_y_theta(const HolonomyPoint& p);

/// |A_j(y_j(x), x)| for j = a, b, c.
std::map<std::string, double> check_residual_theta(const HolonomyPoint& p);

/// Tet potential as displayed, in the summation variable z.
cplx w_tet(const TetX& x, cplx z);
/// z dW/dz, analytic.
cplx w_tet_z_derivative(const TetX& x, cplx z);
/// log y_k = x_k dW/dx_k at fixed z, for all six edges in color order.
std::array<cplx, 6> log_y_tet(const TetX& x, cplx z);

struct SaddleRecord {
  std::vector<cplx> z_roots;
  std::vector<cplx> y1;              ///< per root; NaN where the y_1 relation has a pole
  std::vector<double> residuals;     ///< |A_1(y_1, x)| per root
  std::vector<double> stationarity;  ///< |z dW/dz| per root on principal branches (inf at z = 0)
  std::array<cplx, 4> cubic{};       ///< coefficients c0..c3 of the saddle polynomial
  std::size_t chosen = 0;
  double residual = 0.0;
  cplx y1_chosen;
};

/// Roots of the saddle cubic by companion-matrix eigenvalues. The chosen root minimizes the A_1
/// residual; ties go to the smallest |Im z| and then to the root that is a true stationary point.
/// Throws std::domain_error when the cubic degenerates.
SaddleRecord saddle_solve_tet(const TetX& x);
SaddleRecord saddle_solve_tet(const HolonomyPoint& p);

/// Saddle root of the cubic at x nearest to z_ref (continuation for finite differences).
cplx saddle_track_tet(const TetX& x, cplx z_ref);

/// log y_k of all six edges from the chosen saddle.
std::array<cplx, 6> saddle_log_y_tet(const TetX& x);

/// max_{i<j} |d log y_i / d log x_j - d log y_j / d log x_i| by central differences.
double lagrangian_residual(Graph g, const HolonomyPoint& p, double step);

/// Growth tables --------------------------------------------------------------------------------

struct GrowthRow {
  double hbar = 0.0;
  std::vector<long> colors;
  bool admissible = true;
  std::string diagnostic;
  double hbar_log_j = 0.0;  ///< hbar log|J|
  double re_w = 0.0;        ///< Re W at x_eff = e^(hbar n / 2) plus the normalization constant
  double error = 0.0;       ///< hbar log|J| - re_w - kappa hbar log|hbar|
};

struct GrowthOptions {
  double kappa = 0.0;          ///< coefficient of the subtracted hbar log|hbar| term
  int precision_bits = 256;
};

struct GrowthTable {
  std::string graph;
  std::vector<double> x;
  double constant = 0.0;  ///< normalization added to Re W (pi^2/6 for theta, -pi^2 for tet)
  double kappa = 0.0;
  std::vector<GrowthRow> rows;
  std::vector<double> ratios;  ///< error(hbar_i) / error(hbar_{i+1})
  std::optional<double> richardson_relative;  ///< |2 E_last - E_prev| / |Re W(x) + c|
};

/// Default kappa: -3/2 for theta, 0 for tet.
double default_kappa(Graph g);

/// Nearest even integer to 2 log(x) / hbar.
long growth_color(double x, double hbar);

GrowthTable growth_check_theta(const std::array<double, 3>& x, const std::vector<double>& hbars,
                               const GrowthOptions& opt = {-1.5, 256});
GrowthTable growth_check_tet(const std::array<double, 6>& x, const std::vector<double>& hbars,
                             const GrowthOptions& opt = {0.0, 1024});
/// hbar log|[n]! (v - 1/v)^n| against g(q^n) + pi^2/6, n = round(log(x) / hbar), kappa = -1/2.
GrowthTable growth_check_factorial(double x, const std::vector<double>& hbars, const GrowthOptions& opt = {-0.5, 256});

/// hbar log|term| of the largest-magnitude summand of the tet sum at the given colors.
double tet_max_term(const TetColoring& col, double hbar, int precision_bits = 256);
/// Extremum of Re w_tet(x, z) over real z in (lo, hi) matching the largest summand for hbar < 0:
/// the minimum, located by a grid scan refined with golden-section search. Returns {z, Re w}.
std::pair<double, double> min_re_w_tet_real(const TetX& x, double lo, double hi);
/// Real summation window (max quadrilateral product, min triple product) for real x.
std::pair<double, double> tet_real_window(const TetX& x);

}  // namespace qgraph
