#include "qgraph/apoly/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace qgraph;

namespace {

std::vector<long> vec(const TetColoring& c) { return {c.j.begin(), c.j.end()}; }

// Colorings whose shifts along `edge` stay admissible for every term of the operator.
bool interior(const OperatorPoly& op, std::vector<long> colors) {
  const std::size_t k = edge_index(op.graph, op.edge);
  for (std::size_t l = 0; l < op.coeffs.size(); ++l, colors[k] += 2) {
    const bool ok = op.graph == Graph::theta
                        ? is_admissible(colors[0], colors[1], colors[2])
                        : is_admissible(TetColoring{{colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]}});
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("edge labels") {
  CHECK(edge_labels(Graph::theta).size() == 3);
  CHECK(edge_labels(Graph::tet).size() == 6);
  CHECK(edge_index(Graph::tet, "23") == 5);
  CHECK(parse_graph("tet") == Graph::tet);
  CHECK_THROWS_AS(parse_graph("cube"), std::invalid_argument);
  CHECK_THROWS_AS(edge_index(Graph::theta, "d"), std::invalid_argument);
  CHECK_THROWS_AS(tet_edge_relabeling("5"), std::invalid_argument);
}

TEST_CASE("theta classical limits up to a unit") {
  for (const auto& e : edge_labels(Graph::theta)) {
    const auto lim = classical_limit(theta_quantum_A(e));
    const auto u = compare_up_to_unit(lim.poly, theta_classical_A(e).poly);
    REQUIRE(u);
    CHECK(u->is_monomial());
  }
}

TEST_CASE("theta operators annihilate the family") {
  FamilyCache cache(Graph::theta);
  for (const auto& e : edge_labels(Graph::theta)) {
    const auto op = theta_quantum_A(e);
    for (const auto& c : theta_grid(8))
      if (interior(op, {c.a, c.b, c.c})) CHECK(apply_operator(op, {c.a, c.b, c.c}, cache).is_zero());
  }
}

TEST_CASE("displayed ordering does not annihilate") {
  const auto op = theta_quantum_A("a", Ordering::printed);
  long nonzero = 0;
  for (const auto& c : theta_grid(6))
    if (interior(op, {c.a, c.b, c.c})) nonzero += !apply_operator(op, {c.a, c.b, c.c}).is_zero();
  CHECK(nonzero > 0);
}

TEST_CASE("sign-flipped constant term is caught") {
  VerifyOptions opt;
  opt.grid_max = 6;
  opt.edge = "a";
  opt.negative_control = true;
  const auto r = verify_annihilation(opt);
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count > 0);
  CHECK(r.failures.size() <= opt.max_failures);
}

TEST_CASE("tet recursion at the symmetric coloring") {
  FamilyCache cache(Graph::tet);
  const TetColoring c{{2, 2, 2, 2, 2, 2}};
  CHECK(tet_recursion_residual(c, cache).is_zero());
  CHECK_FALSE(tet_recursion_residual(c, cache, {1, 1, 1}).is_zero());
  CHECK_THROWS_AS(tet_recursion_coeffs(TetColoring{{0, 2, 2, 2, 2, 2}}), std::domain_error);
  CHECK(tet_recursion_coeffs(TetColoring{{0, 2, 2, 2, 0, 2}}, {1, 1, -1}, false).alpha.is_zero());
}

TEST_CASE("tet operator annihilates the primed family") {
  FamilyCache cache(Graph::tet);
  long tested = 0;
  for (const auto& e : edge_labels(Graph::tet)) {
    const auto op = tet_quantum_A(e);
    for (const auto& c : tet_grid(4)) {
      if (!interior(op, vec(c))) continue;
      CHECK(apply_operator(op, vec(c), cache).is_zero());
      ++tested;
    }
  }
  CHECK(tested > 0);
  const auto printed = tet_quantum_A("1", Variant::printed);
  long nonzero = 0;
  for (const auto& c : tet_grid(4))
    if (interior(printed, vec(c))) nonzero += !apply_operator(printed, vec(c), cache).is_zero();
  CHECK(nonzero > 0);
}

TEST_CASE("tet classical limit") {
  const MultiPoly x1 = MultiPoly::var("x_1");
  for (const auto& e : edge_labels(Graph::tet)) {
    const auto lim = classical_limit(tet_quantum_A(e));
    const MultiPoly xe = MultiPoly::var(x_name(e));
    const auto u = compare_up_to_unit(lim.poly, (MultiPoly(1) - xe * xe) * tet_classical_A(e).poly);
    REQUIRE(u);
  }
  const auto printed = classical_limit(tet_quantum_A("1", Variant::printed));
  CHECK_FALSE(compare_up_to_unit(printed.poly, (MultiPoly(1) - x1 * x1) * tet_classical_A("1").poly));
}

TEST_CASE("relabeled colorings") {
  const TetColoring c{{1, 2, 3, 4, 5, 6}};
  CHECK(relabel_coloring("1", c) == c);
  const TetColoring r = relabel_coloring("2", c);
  CHECK(r.j == std::array<long, 6>{2, 1, 3, 5, 4, 6});
}

TEST_CASE("saddle elimination") {
  const auto el = eliminate_saddle();
  CHECK(el.divides);
  CHECK(el.degree_y1 == 3);
  CHECK(el.resultant.divide_exact(tet_classical_A("1").poly));
  CHECK_FALSE(eliminate_saddle(Variant::printed).divides);
}

TEST_CASE("classical theta polynomial at the frozen point") {
  const auto a = theta_classical_A("a").poly;
  auto at = [&](double y) {
    return std::abs(a.evaluate({{"x_a", 0.5}, {"x_b", 0.5}, {"x_c", 0.5}, {"y_a", y}}));
  };
  CHECK(at(-7.0 / 9.0) < 1e-15);
  CHECK(at(-14.0 / 9.0) > 1e-3);
}

TEST_CASE("verify reports") {
  CHECK(verify_check_names().size() == 9);
  VerifyOptions opt;
  opt.grid_max = 4;
  opt.samples = 10;
  opt.sample_max = 6;
  for (const auto& name : verify_check_names()) {
    if (name == "annihilation") continue;
    const bool theta_only = name == "theta-recursion" || name == "reduction";
    opt.graph = theta_only || name == "classical-limit" ? Graph::theta : Graph::tet;
    const auto r = run_verify(name, opt);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.to_json()["check"] == name);
  }
  opt.graph = Graph::tet;
  opt.edge = "12";
  opt.grid_max = 3;
  CHECK(run_verify("annihilation", opt).passed());
  CHECK_THROWS_AS(run_verify("nonsense", opt), std::invalid_argument);
  opt.edge = "b";
  CHECK_THROWS_AS(run_verify("annihilation", opt), std::invalid_argument);
}

TEST_CASE("recursion sign scan") {
  VerifyOptions opt;
  opt.grid_max = 4;
  opt.graph = Graph::tet;
  opt.sign_scan = true;
  const auto r = verify_recursum(opt);
  CHECK(r.passed());
  CHECK(r.info.contains("sign_scan"));
}

TEST_CASE("parallel sweeps match serial ones") {
  VerifyOptions opt;
  opt.grid_max = 5;
  opt.graph = Graph::theta;
  opt.negative_control = true;
  const auto serial = verify_annihilation(opt);
  opt.workers = 3;
  const auto parallel = verify_annihilation(opt);
  CHECK(serial.to_json().dump() == parallel.to_json().dump());
}
