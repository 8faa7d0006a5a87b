// Acceptance suite: one PASS/FAIL line per criterion.
//   qgraph_acceptance [all | N ...]
#include "qgraph/apoly/verify.hpp"
#include "qgraph/asymptotics/sweeps.hpp"

#ifdef QGRAPH_HAVE_CLI
#include "cli.hpp"
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qgraph;

namespace {

// Pinned tolerances and budgets.
constexpr double kGradientResidual = 1e-9;
constexpr double kFrozenTwist = 1e-12;
constexpr double kFrozenTarget = -14.0 / 9.0;
constexpr double kLagrangianTheta = 1e-6;
constexpr double kLagrangianTet = 1e-5;
constexpr double kEliminateNumeric = 1e-6;
constexpr double kRatioMin = 1.6, kRatioMax = 2.4;
constexpr double kRichardson = 0.01;
const std::vector<double> kHbars{-1.0 / 32, -1.0 / 64, -1.0 / 128};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string summary(const VerifyReport& r) {
  return r.check + (r.edge.empty() ? "" : "[" + r.edge + "]") + " tested=" + std::to_string(r.tested) +
         " failures=" + std::to_string(r.failure_count);
}

Outcome from_reports(const std::vector<VerifyReport>& reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    o.pass = o.pass && r.passed();
    o.detail += (o.detail.empty() ? "" : "; ") + summary(r);
  }
  return o;
}

VerifyOptions grid(long max, Graph g, const std::string& edge = "all") {
  VerifyOptions o;
  o.grid_max = max;
  o.graph = g;
  o.edge = edge;
  return o;
}

Outcome c1() {
  bool ok = theta_invariant({0, 0, 0}) == LaurentRat(1);
  ok = ok && theta_invariant({1, 1, 0}) == LaurentRat(-q_int(2));
  const LaurentRat t = theta_invariant({2, 2, 2});
  ok = ok && t == LaurentRat(-(q_int(4) * q_int(3)), q_int(2) * q_int(2)) && t.evaluate(1) == -3;
  ok = ok && tet_full(TetColoring{}) == LaurentRat(1);
  return {ok, "theta(0,0,0), theta(1,1,0), theta(2,2,2), tet(0^6)"};
}

Outcome c2() { return from_reports({verify_theta_recursion(grid(20, Graph::theta))}); }
Outcome c3() { return from_reports({verify_annihilation(grid(20, Graph::theta))}); }

Outcome c4() {
  auto r = verify_classical_limit(grid(0, Graph::theta));
  Outcome o = from_reports({r});
  if (r.tested != 3) o.pass = false;
  return o;
}

Outcome c5() { return from_reports({verify_symmetry(grid(8, Graph::tet))}); }

Outcome c6() {
  return from_reports({verify_recursum(grid(8, Graph::tet)), verify_annihilation(grid(8, Graph::tet, "1"))});
}

Outcome c7() {
  auto r = verify_classical_limit(grid(0, Graph::tet));
  Outcome o = from_reports({r});
  if (r.tested != 6) o.pass = false;
  return o;
}

Outcome c8() { return from_reports({verify_reduction(grid(10, Graph::theta))}); }

Outcome c9() {
  VerifyOptions o = grid(4, Graph::tet);
  o.samples = 200;
  o.sample_max = 8;
  return from_reports({verify_hypergeom(o)});
}

Outcome c10() {
  const auto r = verify_eliminate(grid(0, Graph::tet));
  Outcome o = from_reports({r});
  const double worst = r.info.value("numeric_worst", 1.0);
  o.pass = o.pass && r.info.value("divides", false) && worst <= kEliminateNumeric;
  o.detail += " numeric_worst=" + fmt("%.2e", worst);
  return o;
}

Outcome c11() {
  NumericOptions opt;
  opt.samples = 100;
  opt.tolerance = kGradientResidual;
  const auto sweep = residual_sweep(Graph::theta, opt);
  const double y = std::exp(log_y_theta(ThetaX{0.5, 0.5, 0.5})[0]).real();
  const bool frozen = std::abs(y - kFrozenTarget) <= kFrozenTwist;
  return {sweep.passed() && frozen, "residual worst=" + fmt("%.2e", sweep.worst) + (sweep.passed() ? " ok" : " FAIL") +
                                        "; y_a(1/2,1/2,1/2)=" + fmt("%.15f", y) + " target=" +
                                        fmt("%.15f", kFrozenTarget) + (frozen ? " ok" : " FAIL")};
}

Outcome c12() {
  NumericOptions opt;
  opt.samples = 50;
  opt.tolerance = kLagrangianTheta;
  const auto theta = lagrangian_sweep(Graph::theta, opt);
  opt.samples = 20;
  opt.tolerance = kLagrangianTet;
  const auto tet = lagrangian_sweep(Graph::tet, opt);
  return {theta.passed() && tet.passed() && theta.skipped == 0 && tet.skipped == 0,
          "theta worst=" + fmt("%.2e", theta.worst) + " tet worst=" + fmt("%.2e", tet.worst)};
}

Outcome growth(const GrowthTable& t) {
  Outcome o{t.ratios.size() == 2 && t.richardson_relative.has_value(), t.graph + ":"};
  if (!o.pass) return {false, t.graph + ": incomplete table"};
  const double r = t.ratios.back();
  o.pass = r >= kRatioMin && r <= kRatioMax && *t.richardson_relative <= kRichardson;
  o.detail += " ratio(-1/64 -> -1/128)=" + fmt("%.3f", r) + " richardson=" + fmt("%.2e", *t.richardson_relative);
  return o;
}

Outcome c13() {
  const auto a = growth(growth_check_theta({0.5, 0.5, 0.5}, kHbars));
  const auto b = growth(growth_check_tet({0.5, 0.5, 0.5, 0.5, 0.5, 0.5}, kHbars));
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome c14() {
  VerifyOptions o = grid(8, Graph::theta, "a");
  o.negative_control = true;
  const auto r = verify_annihilation(o);
  Outcome out{!r.passed(), "sign-flipped b_0: " + summary(r)};
#ifdef QGRAPH_HAVE_CLI
  std::ostringstream sink, err;
  const int code = cli::run({"verify", "annihilation", "--graph", "theta", "--edge", "a", "--max", "8",
                             "--negative-control"},
                            sink, err);
  out.pass = out.pass && code == 1;
  out.detail += " exit=" + std::to_string(code);
#endif
  return out;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"exact golden values", c1},
      {"theta recursion, entries <= 20", c2},
      {"theta annihilation, entries <= 20", c3},
      {"theta classical limit", c4},
      {"tetrahedron symmetry, entries <= 8", c5},
      {"recursion and operator vanish, entries <= 8", c6},
      {"tet classical limit and symmetry images", c7},
      {"theta reduction, entries <= 10", c8},
      {"summation vs hypergeometric form", c9},
      {"saddle elimination", c10},
      {"gradient and variety consistency", c11},
      {"lagrangian condition", c12},
      {"growth checks", c13},
      {"negative control", c14},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "all") continue;
    try {
      which.push_back(std::stoi(a));
    } catch (const std::exception&) {
      std::cerr << "usage: qgraph_acceptance [all | N ...]\n";
      return 2;
    }
  }
  const auto& list = criteria();
  if (which.empty())
    for (int i = 1; i <= static_cast<int>(list.size()); ++i) which.push_back(i);
  int failed = 0;
  for (int n : which) {
    if (n < 1 || n > static_cast<int>(list.size())) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = list[n - 1].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << list[n - 1].first << " (" << fmt("%.1f", secs)
              << " s): " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
