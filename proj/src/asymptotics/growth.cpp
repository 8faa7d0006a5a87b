#include "qgraph/asymptotics/asymptotics.hpp"
#include "qgraph/qalg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qgraph {

namespace {

constexpr double kPi = std::numbers::pi;

void check_hbars(const std::vector<double>& hbars) {
  if (hbars.empty()) throw std::invalid_argument("growth check: empty hbar list");
  for (double h : hbars)
    if (!(h < 0) || !std::isfinite(h)) throw std::invalid_argument("growth check: hbar must be negative and finite");
}

void check_x(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("growth check: x must be positive");
}

void finish(GrowthTable& t, double reference) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto usable = [](const GrowthRow& r) { return r.admissible && r.diagnostic.empty(); };
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[i + 1];
    t.ratios.push_back(usable(a) && usable(b) && b.error != 0.0 ? a.error / b.error : nan);
  }
  if (t.rows.size() >= 2) {
    const auto& prev = t.rows[t.rows.size() - 2];
    const auto& last = t.rows.back();
    if (usable(prev) && usable(last) && reference != 0.0 && std::abs(prev.hbar - 2 * last.hbar) < 1e-12 * std::abs(prev.hbar))
      t.richardson_relative = std::abs(2 * last.error - prev.error) / std::abs(reference);
  }
}

double model_term(double kappa, double hbar) { return kappa * hbar * std::log(std::abs(hbar)); }

}  // namespace

double default_kappa(Graph g) { return g == Graph::theta ? -1.5 : 0.0; }

long growth_color(double x, double hbar) {
  check_x(x);
  if (hbar == 0.0) throw std::invalid_argument("growth_color: hbar = 0");
  return 2 * std::lround(std::log(x) / hbar);
}

GrowthTable growth_check_theta(const std::array<double, 3>& x, const std::vector<double>& hbars,
                               const GrowthOptions& opt) {
  check_hbars(hbars);
  for (double v : x) check_x(v);
  GrowthTable t;
  t.graph = "theta";
  t.x.assign(x.begin(), x.end());
  t.constant = kPi * kPi / 6;
  t.kappa = opt.kappa;
  for (double h : hbars) {
    GrowthRow r;
    r.hbar = h;
    ThetaColoring col{growth_color(x[0], h), growth_color(x[1], h), growth_color(x[2], h)};
    r.colors = {col.a, col.b, col.c};
    ThetaX xe{};
    for (std::size_t i = 0; i < 3; ++i) xe[i] = std::exp(h * static_cast<double>(r.colors[i]) / 2);
    r.admissible = is_admissible(col);
    if (!r.admissible) {
      r.diagnostic = "inadmissible rounded colors";
    } else {
      if (col.a == 0 && col.b == 0 && col.c == 0) r.diagnostic = "trivial coloring, J = 1";
      const auto prod = theta_product(col);
      r.hbar_log_j = h * log_abs_numeric(*prod, std::exp(h / 2), opt.precision_bits);
      try {
        r.re_w = w_theta(xe).real() + t.constant;
        r.error = r.hbar_log_j - r.re_w - model_term(opt.kappa, h);
      } catch (const std::exception& e) {
        r.diagnostic = e.what();
      }
    }
    t.rows.push_back(std::move(r));
  }
  ThetaX xn{x[0], x[1], x[2]};
  finish(t, w_theta(xn).real() + t.constant);
  return t;
}

GrowthTable growth_check_tet(const std::array<double, 6>& x, const std::vector<double>& hbars,
                             const GrowthOptions& opt) {
  check_hbars(hbars);
  for (double v : x) check_x(v);
  GrowthTable t;
  t.graph = "tet";
  t.x.assign(x.begin(), x.end());
  t.constant = -kPi * kPi;
  t.kappa = opt.kappa;
  for (double h : hbars) {
    GrowthRow r;
    r.hbar = h;
    TetColoring col;
    TetX xe{};
    for (std::size_t i = 0; i < 6; ++i) {
      col.j[i] = growth_color(x[i], h);
      xe[i] = std::exp(h * static_cast<double>(col.j[i]) / 2);
    }
    r.colors.assign(col.j.begin(), col.j.end());
    r.admissible = is_admissible(col);
    if (!r.admissible) {
      r.diagnostic = "inadmissible rounded colors";
    } else {
      if (std::all_of(col.j.begin(), col.j.end(), [](long c) { return c == 0; }))
        r.diagnostic = "trivial coloring, J = 1";
      const auto sum = tet_sum_terms(col);
      r.hbar_log_j = h * log_abs_sum_numeric(sum.terms, sum.signs, std::exp(h / 2), opt.precision_bits);
      try {
        const auto rec = saddle_solve_tet(xe);
        r.re_w = w_tet(xe, rec.z_roots[rec.chosen]).real() + t.constant;
        r.error = r.hbar_log_j - r.re_w - model_term(opt.kappa, h);
      } catch (const std::exception& e) {
        r.diagnostic = e.what();
      }
    }
    t.rows.push_back(std::move(r));
  }
  TetX xn{};
  for (std::size_t i = 0; i < 6; ++i) xn[i] = x[i];
  const auto rec = saddle_solve_tet(xn);
  finish(t, w_tet(xn, rec.z_roots[rec.chosen]).real() + t.constant);
  return t;
}

GrowthTable growth_check_factorial(double x, const std::vector<double>& hbars, const GrowthOptions& opt) {
  check_hbars(hbars);
  check_x(x);
  GrowthTable t;
  t.graph = "factorial";
  t.x = {x};
  t.constant = kPi * kPi / 6;
  t.kappa = opt.kappa;
  for (double h : hbars) {
    GrowthRow r;
    r.hbar = h;
    const long n = std::lround(std::log(x) / h);
    r.colors = {n};
    if (n < 0) {
      r.admissible = false;
      r.diagnostic = "negative factorial argument";
    } else {
      if (n == 0) r.diagnostic = "trivial factorial, [0]! = 1";
      const double v0 = std::exp(h / 2);
      const double lf = log_abs_numeric(QProduct::q_factorial(n), v0, opt.precision_bits);
      r.hbar_log_j = h * (lf + static_cast<double>(n) * std::log(std::abs(v0 - 1 / v0)));
      r.re_w = g_potential(std::exp(h * static_cast<double>(n))).real() + t.constant;
      r.error = r.hbar_log_j - r.re_w - model_term(opt.kappa, h);
    }
    t.rows.push_back(std::move(r));
  }
  finish(t, g_potential(x).real() + t.constant);
  return t;
}

double tet_max_term(const TetColoring& col, double hbar, int precision_bits) {
  const auto sum = tet_sum_terms(col);
  if (sum.terms.empty()) throw std::domain_error("tet_max_term: empty sum");
  const double v0 = std::exp(hbar / 2);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& term : sum.terms) best = std::max(best, log_abs_numeric(term, v0, precision_bits));
  return hbar * best;
}

std::pair<double, double> tet_real_window(const TetX& x) {
  auto re = [](cplx c) { return c.real(); };
  const double t[4] = {re(x[0] * x[1] * x[2]), re(x[3] * x[4] * x[2]), re(x[0] * x[4] * x[5]), re(x[1] * x[3] * x[5])};
  const double p[3] = {re(x[0] * x[1] * x[3] * x[4]), re(x[0] * x[3] * x[2] * x[5]), re(x[1] * x[4] * x[2] * x[5])};
  return {*std::max_element(p, p + 3), *std::min_element(t, t + 4)};
}

std::pair<double, double> min_re_w_tet_real(const TetX& x, double lo, double hi) {
  if (!(lo < hi) || !(lo > 0)) throw std::invalid_argument("min_re_w_tet_real: need 0 < lo < hi");
  auto f = [&](double z) { return w_tet(x, cplx(z, 0.0)).real(); };
  const int grid = 400;
  double zbest = 0, fbest = std::numeric_limits<double>::infinity();
  int ibest = 1;
  for (int i = 1; i < grid; ++i) {
    const double z = lo + (hi - lo) * i / grid;
    const double v = f(z);
    if (v < fbest) {
      fbest = v;
      zbest = z;
      ibest = i;
    }
  }
  double a = lo + (hi - lo) * (ibest - 1) / grid, b = lo + (hi - lo) * (ibest + 1) / grid;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  zbest = (a + b) / 2;
  return {zbest, f(zbest)};
}

}  // namespace qgraph
