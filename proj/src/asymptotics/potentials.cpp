#include "qgraph/asymptotics/asymptotics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qgraph {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kPiI(0.0, kPi);

// Tet vertex triples and quadrilaterals as position sets in color order (1, 2, 12, 3, 4, 23).
constexpr std::array<std::array<int, 3>, 4> kTriples{{{0, 1, 2}, {3, 4, 2}, {0, 4, 5}, {1, 3, 5}}};
constexpr std::array<std::array<int, 4>, 3> kQuads{{{0, 1, 3, 4}, {0, 3, 2, 5}, {1, 4, 2, 5}}};

void guard(cplx u) {
  if (std::abs(u) < 1e-12 || std::abs(u - 1.0) < 1e-8)
    throw SingularLocusError("point within guard distance of a singular locus (argument " + std::to_string(u.real()) +
                             (u.imag() == 0.0 ? "" : " + " + std::to_string(u.imag()) + "i") + ")");
}

std::array<cplx, 4> triples(const TetX& x) {
  std::array<cplx, 4> t{};
  for (std::size_t i = 0; i < 4; ++i) t[i] = x[kTriples[i][0]] * x[kTriples[i][1]] * x[kTriples[i][2]];
  return t;
}

std::array<cplx, 3> quads(const TetX& x) {
  std::array<cplx, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) p[i] = x[kQuads[i][0]] * x[kQuads[i][1]] * x[kQuads[i][2]] * x[kQuads[i][3]];
  return p;
}

template <std::size_t N>
bool contains(const std::array<int, N>& s, int k) {
  return std::find(s.begin(), s.end(), k) != s.end();
}

std::vector<cplx> poly_from_roots(std::initializer_list<cplx> roots) {
  std::vector<cplx> p{1.0};
  for (cplx r : roots) {
    std::vector<cplx> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = std::move(q);
  }
  return p;
}

std::vector<cplx> cubic_roots(const std::array<cplx, 4>& c) {
  double scale = 0;
  for (cplx a : c) scale = std::max(scale, std::abs(a));
  if (std::abs(c[3]) <= 1e-14 * scale) throw std::domain_error("saddle cubic degenerates: leading coefficient ~ 0");
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(1, 0) = 1.0;
  m(2, 1) = 1.0;
  for (int i = 0; i < 3; ++i) m(i, 2) = -c[static_cast<std::size_t>(i)] / c[3];
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m, false);
  std::vector<cplx> roots(3);
  for (int i = 0; i < 3; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::array<cplx, 4> saddle_cubic(const TetX& x) {
  const auto t = triples(x);
  const auto p = quads(x);
  const auto n = poly_from_roots({1.0, p[0], p[1], p[2]});
  const auto d = poly_from_roots({t[0], t[1], t[2], t[3]});
  return {n[0] - d[0], n[1] - d[1], n[2] - d[2], n[3] - d[3]};
}

cplx reduce_branch(cplx d) {
  double im = std::remainder(d.imag(), 2 * kPi);
  return {d.real(), im};
}

}  // namespace

ThetaX theta_coords(const HolonomyPoint& p) {
  ThetaX x{};
  for (std::size_t i = 0; i < 3; ++i) x[i] = p.x.at(edge_labels(Graph::theta)[i]);
  return x;
}

TetX tet_coords(const HolonomyPoint& p) {
  TetX x{};
  for (std::size_t i = 0; i < 6; ++i) x[i] = p.x.at(edge_labels(Graph::tet)[i]);
  return x;
}

HolonomyPoint make_point(Graph g, const std::vector<cplx>& x, cplx hbar) {
  const auto& labels = edge_labels(g);
  if (x.size() != labels.size()) throw std::invalid_argument("make_point: wrong number of coordinates");
  HolonomyPoint p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) throw std::invalid_argument("make_point: holonomy eigenvalues must be nonzero");
    p.x[labels[i]] = x[i];
  }
  p.hbar = hbar;
  return p;
}

std::array<cplx, 7> theta_arguments(const ThetaX& x) {
  const cplx a = x[0], b = x[1], c = x[2];
  return {a * b * c, b * c / a, a * c / b, a * b / c, a * a, b * b, c * c};
}

cplx w_theta(const ThetaX& x) {
  const auto u = theta_arguments(x);
  for (cplx v : u)
    if (v == 0.0) throw std::domain_error("w_theta: singular argument");
  return kPiI * std::log(u[0]) + g_potential(u[0]) + g_potential(u[1]) + g_potential(u[2]) + g_potential(u[3]) -
         g_potential(u[4]) - g_potential(u[5]) - g_potential(u[6]);
}

cplx w_theta(const HolonomyPoint& p) { return w_theta(theta_coords(p)); }

std::array<cplx, 3> log_y_theta(const ThetaX& x) {
  const auto u = theta_arguments(x);
  for (cplx v : u) guard(v);
  std::array<cplx, 7> h{};
  for (std::size_t i = 0; i < 7; ++i) h[i] = g_log_derivative(u[i]);
  return {kPiI + h[0] - h[1] + h[2] + h[3] - 2.0 * h[4], kPiI + h[0] + h[1] - h[2] + h[3] - 2.0 * h[5],
          kPiI + h[0] + h[1] + h[2] - h[3] - 2.0 * h[6]};
}

TwistPoint grad_log_y_theta(const HolonomyPoint& p) {
  const auto ly = log_y_theta(theta_coords(p));
  TwistPoint t;
  for (std::size_t i = 0; i < 3; ++i) t.y[edge_labels(Graph::theta)[i]] = std::exp(ly[i]);
  return t;
}

std::map<std::string, double> check_residual_theta(const HolonomyPoint& p) {
  static const std::array<ClassicalAPoly, 3> polys{theta_classical_A("a"), theta_classical_A("b"), theta_classical_A("c")};
  const ThetaX x = theta_coords(p);
  const auto y = grad_log_y_theta(p);
  std::map<std::string, cplx> point{{"x_a", x[0]}, {"x_b", x[1]}, {"x_c", x[2]}};
  for (const auto& [k, v] : y.y) point[y_name(k)] = v;
  std::map<std::string, double> out;
  for (const auto& a : polys) out[a.edge] = std::abs(a.poly.evaluate(point));
  return out;
}

cplx w_tet(const TetX& x, cplx z) {
  if (z == 0.0) throw std::domain_error("w_tet: z = 0");
  cplx w = kPiI * std::log(z) + g_potential(z);
  for (cplx t : triples(x)) w -= g_potential(z / t);
  for (cplx p : quads(x)) w -= g_potential(p / z);
  return w;
}

cplx w_tet_z_derivative(const TetX& x, cplx z) {
  cplx d = kPiI + g_log_derivative(z);
  for (cplx t : triples(x)) d -= g_log_derivative(z / t);
  for (cplx p : quads(x)) d += g_log_derivative(p / z);
  return d;
}

std::array<cplx, 6> log_y_tet(const TetX& x, cplx z) {
  const auto t = triples(x);
  const auto p = quads(x);
  std::array<cplx, 4> ht{};
  std::array<cplx, 3> hp{};
  for (std::size_t i = 0; i < 4; ++i) {
    guard(z / t[i]);
    ht[i] = g_log_derivative(z / t[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    guard(p[i] / z);
    hp[i] = g_log_derivative(p[i] / z);
  }
  std::array<cplx, 6> ly{};
  for (int k = 0; k < 6; ++k) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      if (contains(kTriples[i], k)) s += ht[i];
    for (std::size_t i = 0; i < 3; ++i)
      if (contains(kQuads[i], k)) s -= hp[i];
    ly[static_cast<std::size_t>(k)] = s;
  }
  return ly;
}

SaddleRecord saddle_solve_tet(const TetX& x) {
  static const MultiPoly a1 = tet_classical_A("1").poly;
  SaddleRecord rec;
  rec.cubic = saddle_cubic(x);
  rec.z_roots = cubic_roots(rec.cubic);
  const auto t = triples(x);
  const auto p = quads(x);
  std::map<std::string, cplx> point;
  for (std::size_t i = 0; i < 6; ++i) point[x_name(edge_labels(Graph::tet)[i])] = x[i];
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (cplx z : rec.z_roots) {
    const cplx den = (z - p[0]) * (z - p[1]);
    const cplx y = den == 0.0 ? cplx(nan, nan) : x[3] * (z - t[2]) * (z - t[0]) / den;
    rec.y1.push_back(y);
    point[y_name("1")] = y;
    rec.residuals.push_back(den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(a1.evaluate(point)));
    double st = std::numeric_limits<double>::infinity();
    if (std::abs(z) > 1e-12) {
      try {
        st = std::abs(w_tet_z_derivative(x, z));
      } catch (const std::exception&) {
      }
    }
    rec.stationarity.push_back(std::isfinite(st) ? st : std::numeric_limits<double>::infinity());
  }
  auto better = [&](std::size_t i, std::size_t j) {
    const double ri = rec.residuals[i], rj = rec.residuals[j];
    if (std::abs(ri - rj) > 1e-10 * std::max(1.0, std::min(ri, rj))) return ri < rj;
    const double ii = std::abs(rec.z_roots[i].imag()), ij = std::abs(rec.z_roots[j].imag());
    if (std::abs(ii - ij) > 1e-10 * std::max(1.0, std::abs(rec.z_roots[i]))) return ii < ij;
    return rec.stationarity[i] < rec.stationarity[j];
  };
  for (std::size_t i = 1; i < rec.z_roots.size(); ++i)
    if (better(i, rec.chosen)) rec.chosen = i;
  rec.residual = rec.residuals[rec.chosen];
  rec.y1_chosen = rec.y1[rec.chosen];
  return rec;
}

SaddleRecord saddle_solve_tet(const HolonomyPoint& p) { return saddle_solve_tet(tet_coords(p)); }

cplx saddle_track_tet(const TetX& x, cplx z_ref) {
  const auto roots = cubic_roots(saddle_cubic(x));
  return *std::min_element(roots.begin(), roots.end(),
                           [&](cplx a, cplx b) { return std::abs(a - z_ref) < std::abs(b - z_ref); });
}

std::array<cplx, 6> saddle_log_y_tet(const TetX& x) {
  const auto rec = saddle_solve_tet(x);
  return log_y_tet(x, rec.z_roots[rec.chosen]);
}

double lagrangian_residual(Graph g, const HolonomyPoint& p, double step) {
  if (!(step > 0)) throw std::invalid_argument("lagrangian_residual: step must be positive");
  std::vector<std::vector<cplx>> jac;
  if (g == Graph::theta) {
    const ThetaX x = theta_coords(p);
    log_y_theta(x);
    jac.assign(3, std::vector<cplx>(3));
    for (std::size_t j = 0; j < 3; ++j) {
      ThetaX xp = x, xm = x;
      xp[j] *= std::exp(step);
      xm[j] *= std::exp(-step);
      const auto lp = log_y_theta(xp), lm = log_y_theta(xm);
      for (std::size_t i = 0; i < 3; ++i) jac[i][j] = reduce_branch(lp[i] - lm[i]) / (2 * step);
    }
  } else {
    const TetX x = tet_coords(p);
    const auto rec = saddle_solve_tet(x);
    const cplx z0 = rec.z_roots[rec.chosen];
    log_y_tet(x, z0);
    jac.assign(6, std::vector<cplx>(6));
    for (std::size_t j = 0; j < 6; ++j) {
      TetX xp = x, xm = x;
      xp[j] *= std::exp(step);
      xm[j] *= std::exp(-step);
      const auto lp = log_y_tet(xp, saddle_track_tet(xp, z0));
      const auto lm = log_y_tet(xm, saddle_track_tet(xm, z0));
      for (std::size_t i = 0; i < 6; ++i) jac[i][j] = reduce_branch(lp[i] - lm[i]) / (2 * step);
    }
  }
  double worst = 0;
  for (std::size_t i = 0; i < jac.size(); ++i)
    for (std::size_t j = i + 1; j < jac.size(); ++j) worst = std::max(worst, std::abs(jac[i][j] - jac[j][i]));
  return worst;
}

}  // namespace qgraph
