#include "qgraph/asymptotics/sweeps.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qgraph;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("dilogarithm against reference values") {
  struct Case {
    cplx z, li2;
  };
  const Case cases[] = {
      {{0.3, 0.4}, {0.26659686674274041589, 0.46136289181910899428}},
      {{-2.5, 0}, {-1.698895841995014173, 0}},
      {{0.9, 0}, {1.299714723004958782, 0}},
      {{2, 1}, {1.1866885370000578311, 2.4077407693457720017}},
      {{-0.5, 3}, {-1.1983400447853276898, 1.8761242417549910556}},
      {{0.5, -0.8}, {0.30849812213721003932, -0.95389769195035849769}},
      {{0.99, 0}, {1.5886254480763752857, 0}},
      {{-1, 0.001}, {-0.82246712999769687808, 0.00069314715784422064163}},
  };
  for (const auto& c : cases) CHECK(near(dilog(c.z), c.li2, 1e-13));
  CHECK(dilog(1.0).real() == doctest::Approx(kPi2 / 6).epsilon(1e-15));
  CHECK(dilog(-1.0).real() == doctest::Approx(-kPi2 / 12).epsilon(1e-15));
  CHECK(dilog(0.0) == cplx(0.0));
  CHECK(dilog(std::numbers::e).real() == doctest::Approx(2.3811138463475566039).epsilon(1e-14));
  CHECK(dilog(std::numbers::e).imag() == 0.0);
}

TEST_CASE("potential building block") {
  CHECK(near(g_potential(1.0), -kPi2 / 6, 1e-15));
  CHECK_THROWS_AS(g_potential(0.0), std::domain_error);
  const cplx u(0.3, 0.2), h = 1e-6;
  const cplx fd = (g_potential(u * std::exp(h)) - g_potential(u * std::exp(-h))) / (2.0 * h);
  CHECK(near(g_log_derivative(u), fd, 1e-8));
}

TEST_CASE("theta potential reference values") {
  CHECK(near(w_theta(ThetaX{0.5, 0.5, 0.5}), {-1.0729035222567931026, -6.5327582709108063915}, 1e-12));
  CHECK(near(w_theta(ThetaX{0.3, 0.6, 0.45}), {-1.3659454903629851188, -7.8957840563535839468}, 1e-12));
  CHECK(w_theta(ThetaX{1.0, 1.0, 1.0}).real() == doctest::Approx(-kPi2 / 6).epsilon(1e-14));
  CHECK(near(w_theta(make_point(Graph::theta, {0.5, 0.5, 0.5})), w_theta(ThetaX{0.5, 0.5, 0.5}), 0));
  CHECK(theta_arguments(ThetaX{0.5, 0.5, 0.5})[0] == cplx(0.125));
}

TEST_CASE("tet potential reference values") {
  const TetX x{0.3, 0.5, 0.6, 0.4, 0.7, 0.55};
  CHECK(near(w_tet(x, {0.05, 0.02}), {2.2064410457709254152, -11.603222544012502528}, 1e-11));
  TetX ones;
  ones.fill(1.0);
  CHECK(w_tet(ones, 1.0).real() == doctest::Approx(kPi2).epsilon(1e-14));
  const cplx z(0.05, 0.02), h = 1e-6;
  const cplx fd = (w_tet(x, z * std::exp(h)) - w_tet(x, z * std::exp(-h))) / (2.0 * h);
  CHECK(near(w_tet_z_derivative(x, z), fd, 1e-7));
}

TEST_CASE("gradient of the theta potential") {
  const ThetaX x{0.3, 0.6, 0.45};
  const auto ly = log_y_theta(x);
  const double h = 1e-6;
  for (int j = 0; j < 3; ++j) {
    ThetaX up = x, dn = x;
    up[j] *= std::exp(h);
    dn[j] *= std::exp(-h);
    const double fd = (w_theta(up) - w_theta(dn)).real() / (2 * h);
    CHECK(ly[j].real() == doctest::Approx(fd).epsilon(1e-7));
  }
  CHECK(std::exp(log_y_theta(ThetaX{0.5, 0.5, 0.5})[0]).real() == doctest::Approx(-7.0 / 9.0).epsilon(1e-13));
  const auto y = grad_log_y_theta(make_point(Graph::theta, {0.5, 0.5, 0.5}));
  CHECK(y.y.size() == 3);
  CHECK_THROWS_AS(log_y_theta(ThetaX{1.0, 0.5, 0.5}), SingularLocusError);
}

TEST_CASE("theta twist variables lie on the classical variety") {
  for (const auto& [edge, r] : check_residual_theta(make_point(Graph::theta, {0.3, 0.6, 0.45}))) CHECK(r < 1e-12);
  NumericOptions opt;
  opt.samples = 40;
  const auto rep = residual_sweep(Graph::theta, opt);
  CHECK(rep.passed());
  CHECK(rep.worst < 1e-9);
}

TEST_CASE("symmetric saddle cubic") {
  const double t = 0.5;
  TetX x;
  x.fill(t);
  const auto rec = saddle_solve_tet(x);
  REQUIRE(rec.z_roots.size() == 3);
  const double t3 = t * t * t, t4 = t3 * t;
  for (const cplx z : rec.z_roots) {
    const cplx f = (z - 1.0) * std::pow(z - t4, 3) - std::pow(z - t3, 4);
    CHECK(std::abs(f) < 1e-14);
  }
  const cplx z0 = rec.z_roots[rec.chosen];
  CHECK(near(z0, {0.0767045, -0.0123832}, 1e-6));
  CHECK(near(w_tet(x, z0), {5.08367, -7.98283}, 1e-5));
  CHECK(rec.residual < 1e-10);
  CHECK(std::abs(w_tet_z_derivative(x, z0)) < 1e-10);
  CHECK(near(saddle_track_tet(x, z0 + cplx(1e-3, 0)), z0, 1e-12));
}

TEST_CASE("twist variable does not depend on the logarithm branch") {
  const TetX x{0.3, 0.5, 0.6, 0.4, 0.7, 0.55};
  const auto rec = saddle_solve_tet(x);
  const cplx y1 = std::exp(saddle_log_y_tet(x)[0]);
  CHECK(near(y1, rec.y1_chosen, 1e-9 * std::abs(y1)));
  CHECK(rec.residual < 1e-8);
}

TEST_CASE("tet residual sweep") {
  NumericOptions opt;
  opt.samples = 20;
  opt.tolerance = 1e-8;
  CHECK(residual_sweep(Graph::tet, opt).passed());
  const auto rep = saddle_report(TetX{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}, 1e-8);
  CHECK(rep.passed());
  CHECK(rep.rows.size() == 3);
}

TEST_CASE("lagrangian symmetry") {
  NumericOptions opt;
  opt.samples = 10;
  opt.tolerance = 1e-6;
  CHECK(lagrangian_sweep(Graph::theta, opt).passed());
  opt.samples = 4;
  opt.tolerance = 1e-5;
  CHECK(lagrangian_sweep(Graph::tet, opt).passed());
}

TEST_CASE("gradient sweep") {
  NumericOptions opt;
  opt.samples = 20;
  opt.tolerance = 1e-8;
  opt.step = 1e-6;
  CHECK(gradient_sweep(opt).passed());
}

TEST_CASE("sweeps are deterministic and worker independent") {
  NumericOptions opt;
  opt.samples = 12;
  const auto a = residual_sweep(Graph::theta, opt);
  opt.workers = 3;
  const auto b = residual_sweep(Graph::theta, opt);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_csv().rfind("#", 0) == 0);
  CHECK(sample_point(opt, 3, 5) == sample_point(opt, 3, 5));
  CHECK(sample_point(opt, 3, 5) != sample_point(opt, 3, 6));
}

TEST_CASE("growth colors") {
  CHECK(growth_color(0.5, -1.0 / 64) == 88);
  CHECK(growth_color(1.0, -1.0 / 64) == 0);
  CHECK(default_kappa(Graph::theta) == -1.5);
  CHECK(default_kappa(Graph::tet) == 0.0);
}

TEST_CASE("q-factorial growth halves its error") {
  const auto t = growth_check_factorial(0.5, {-1.0 / 64, -1.0 / 128, -1.0 / 256});
  REQUIRE(t.ratios.size() == 2);
  for (double r : t.ratios) CHECK(r == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("theta growth") {
  const auto t = growth_check_theta({0.5, 0.5, 0.5}, {-1.0 / 32, -1.0 / 64, -1.0 / 128});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[2].colors == std::vector<long>{178, 178, 178});
  for (double r : t.ratios) CHECK((r > 1.6 && r < 2.4));
  REQUIRE(t.richardson_relative);
  CHECK(*t.richardson_relative < 0.01);
  CHECK(to_json(t)["rows"].size() == 3);
  const auto trivial = growth_check_theta({1.0, 1.0, 1.0}, {-1.0 / 32});
  CHECK(trivial.rows[0].diagnostic.find("trivial") != std::string::npos);
}

TEST_CASE("largest tet summand against the real minimum of the potential") {
  TetX x;
  x.fill(0.5);
  const auto [lo, hi] = tet_real_window(x);
  CHECK(lo == doctest::Approx(0.0625));
  CHECK(hi == doctest::Approx(0.125));
  const auto [z, w] = min_re_w_tet_real(x, lo, hi);
  CHECK((z > lo && z < hi));
  TetColoring c;
  c.j.fill(178);
  CHECK(std::abs(tet_max_term(c, -1.0 / 128) - (w - kPi2)) < 0.1);
}
