#include "qgraph/apoly/verify.hpp"
#include "qgraph/asymptotics/asymptotics.hpp"
#include "qgraph/qalg/format.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace qgraph {

namespace {

struct Outcome {
  bool tested = false;
  std::optional<VerifyFailure> failure;
};

std::vector<long> colors_of(const TetColoring& c) { return {c.j.begin(), c.j.end()}; }
std::vector<long> colors_of(const ThetaColoring& c) { return {c.a, c.b, c.c}; }

void add(VerifyReport& r, Outcome o, std::size_t max_failures) {
  if (!o.tested) return;
  ++r.tested;
  if (!o.failure) return;
  ++r.failure_count;
  if (r.failures.size() < max_failures) r.failures.push_back(std::move(*o.failure));
}

// Evaluates every item in parallel and reduces in item order.
template <class Item, class Eval>
void sweep(VerifyReport& r, const std::vector<Item>& items, const VerifyOptions& opt, Eval eval) {
  std::vector<Outcome> out(items.size());
  parallel_for(items.size(), opt.workers, [&](std::size_t i, unsigned w) { out[i] = eval(items[i], w); });
  for (auto& o : out) add(r, std::move(o), opt.max_failures);
}

Outcome compare(const std::vector<long>& colors, const std::string& edge, const LaurentRat& residual) {
  Outcome o{true, std::nullopt};
  if (!residual.is_zero()) o.failure = VerifyFailure{colors, edge, to_json(residual)};
  return o;
}

VerifyReport make_report(const std::string& check, Graph g, const std::string& edge, long grid_max) {
  VerifyReport r;
  r.check = check;
  r.graph = to_string(g);
  r.edge = edge;
  r.grid_max = grid_max;
  return r;
}

std::vector<std::string> edges_for(Graph g, const std::string& edge) {
  if (edge == "all" || edge.empty()) return edge_labels(g);
  edge_index(g, edge);
  return {edge};
}

bool shifts_admissible(Graph g, const std::vector<long>& colors, std::size_t k, int order) {
  std::vector<long> s = colors;
  for (int l = 0; l <= order; ++l) {
    s[k] = colors[k] + 2L * l;
    const bool ok = g == Graph::theta ? is_admissible(s[0], s[1], s[2])
                                      : is_admissible(TetColoring{{s[0], s[1], s[2], s[3], s[4], s[5]}});
    if (!ok) return false;
  }
  return true;
}

std::vector<std::vector<long>> family_grid(Graph g, long max) {
  std::vector<std::vector<long>> out;
  if (g == Graph::theta)
    for (const auto& c : theta_grid(max)) out.push_back(colors_of(c));
  else
    for (const auto& c : tet_grid(max)) out.push_back(colors_of(c));
  return out;
}

void require_graph(const VerifyOptions& opt, Graph g, const char* check) {
  if (opt.graph != g) throw std::invalid_argument(std::string(check) + " applies to the " + to_string(g) + " graph only");
}

}  // namespace

std::vector<ThetaColoring> theta_grid(long max) {
  std::vector<ThetaColoring> out;
  for (long a = 0; a <= max; ++a)
    for (long b = 0; b <= max; ++b)
      for (long c = 0; c <= max; ++c)
        if (is_admissible(a, b, c)) out.push_back({a, b, c});
  return out;
}

std::vector<TetColoring> tet_grid(long max) {
  std::vector<TetColoring> out;
  TetColoring c;
  for (c.j[0] = 0; c.j[0] <= max; ++c.j[0])
    for (c.j[1] = 0; c.j[1] <= max; ++c.j[1])
      for (c.j[2] = 0; c.j[2] <= max; ++c.j[2]) {
        if (!is_admissible(c.j[0], c.j[1], c.j[2])) continue;
        for (c.j[3] = 0; c.j[3] <= max; ++c.j[3])
          for (c.j[4] = 0; c.j[4] <= max; ++c.j[4]) {
            if (!is_admissible(c.j[3], c.j[4], c.j[2])) continue;
            for (c.j[5] = 0; c.j[5] <= max; ++c.j[5])
              if (is_admissible(c)) out.push_back(c);
          }
      }
  return out;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) {
    nlohmann::json e{{"colors", x.colors}, {"residual", x.residual}};
    if (!x.edge.empty()) e["edge"] = x.edge;
    f.push_back(std::move(e));
  }
  return {{"check", check},  {"graph", graph},          {"edge", edge}, {"grid_max", grid_max},
          {"tested", tested}, {"failure_count", failure_count}, {"failures", f}, {"info", info}};
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"theta-recursion", "annihilation", "classical-limit",
                                              "symmetry",        "reduction",    "hypergeom",
                                              "recursum",        "eliminate",    "symmetry-images"};
  return names;
}

OperatorPoly operator_under_test(Graph g, const std::string& edge, const VerifyOptions& opt) {
  const Ordering ord = opt.miscommuted ? Ordering::printed : Ordering::normal;
  OperatorPoly op = g == Graph::theta ? theta_quantum_A(edge, ord) : tet_quantum_A(edge, opt.variant, ord);
  if (opt.negative_control) op.coeffs[0] = -op.coeffs[0];
  return op;
}

VerifyReport verify_theta_recursion(const VerifyOptions& opt) {
  require_graph(opt, Graph::theta, "theta-recursion");
  auto r = make_report("theta-recursion", Graph::theta, "a", opt.grid_max);
  sweep(r, theta_grid(opt.grid_max), opt, [](const ThetaColoring& c, unsigned) {
    LaurentRat factor;
    try {
      factor = theta_recursion_factor(c);
    } catch (const std::domain_error&) {
      return Outcome{};
    }
    return compare(colors_of(c), "a", factor * theta_invariant(c) - theta_invariant({c.a + 2, c.b, c.c}));
  });
  return r;
}

VerifyReport verify_annihilation(const VerifyOptions& opt) {
  auto r = make_report("annihilation", opt.graph, opt.edge, opt.grid_max);
  const auto grid = family_grid(opt.graph, opt.grid_max);
  std::vector<FamilyCache> caches(std::max(1u, opt.workers), FamilyCache(opt.graph));
  for (const auto& e : edges_for(opt.graph, opt.edge)) {
    const OperatorPoly op = operator_under_test(opt.graph, e, opt);
    const std::size_t k = edge_index(opt.graph, e);
    const int order = static_cast<int>(op.coeffs.size()) - 1;
    sweep(r, grid, opt, [&](const std::vector<long>& col, unsigned w) {
      if (!shifts_admissible(opt.graph, col, k, order)) return Outcome{};
      return compare(col, e, apply_operator(op, col, caches[w]));
    });
  }
  r.info["ordering"] = opt.miscommuted ? "printed" : "normal";
  r.info["negative_control"] = opt.negative_control;
  if (opt.graph == Graph::tet) r.info["variant"] = opt.variant == Variant::corrected ? "corrected" : "printed";
  return r;
}

VerifyReport verify_classical_limit(const VerifyOptions& opt) {
  auto r = make_report("classical-limit", opt.graph, opt.edge, 0);
  nlohmann::json units = nlohmann::json::object();
  for (const auto& e : edges_for(opt.graph, opt.edge)) {
    const OperatorPoly op = operator_under_test(opt.graph, e, opt);
    MultiPoly target;
    if (opt.graph == Graph::theta) {
      target = theta_classical_A(e).poly;
    } else {
      const MultiPoly x = MultiPoly::var(x_name(e));
      target = (MultiPoly(1) - x * x) * tet_classical_A(e, opt.variant).poly;
    }
    const auto unit = compare_up_to_unit(classical_limit(op).poly, target);
    Outcome o{true, std::nullopt};
    if (unit)
      units[e] = unit->to_string();
    else
      o.failure = VerifyFailure{{}, e, qgraph::to_json(classical_limit(op).poly)};
    add(r, std::move(o), opt.max_failures);
  }
  r.info["units"] = units;
  return r;
}

VerifyReport verify_symmetry(const VerifyOptions& opt) {
  require_graph(opt, Graph::tet, "symmetry");
  auto r = make_report("symmetry", Graph::tet, "", opt.grid_max);
  const auto grid = tet_grid(opt.grid_max);
  std::vector<LaurentRat> values(grid.size());
  parallel_for(grid.size(), opt.workers, [&](std::size_t i, unsigned) { values[i] = tet_full(grid[i]); });
  std::map<TetColoring, std::size_t> index;
  for (std::size_t i = 0; i < grid.size(); ++i) index.emplace(grid[i], i);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Outcome o{true, std::nullopt};
    for (const auto& img : tet_symmetry_orbit(grid[i])) {
      const LaurentRat diff = values[i] - values[index.at(img)];
      if (!diff.is_zero()) {
        o.failure = VerifyFailure{colors_of(img), "", to_json(diff)};
        break;
      }
    }
    add(r, std::move(o), opt.max_failures);
  }
  return r;
}

VerifyReport verify_reduction(const VerifyOptions& opt) {
  auto r = make_report("reduction", Graph::theta, "", opt.grid_max);
  const auto grid = theta_grid(opt.grid_max);
  std::vector<ReductionResult> res(grid.size());
  parallel_for(grid.size(), opt.workers,
               [&](std::size_t i, unsigned) { res[i] = theta_reduction_check(grid[i].a, grid[i].b, grid[i].c); });
  std::optional<LaurentPoly> law;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Outcome o{true, std::nullopt};
    if (res[i].equal && !law) law = res[i].unit;
    if (!res[i].equal || !(*res[i].unit == *law))
      o.failure = VerifyFailure{colors_of(grid[i]), "", to_json(res[i].tet - res[i].theta)};
    add(r, std::move(o), opt.max_failures);
  }
  if (law) r.info["unit"] = to_text(*law);
  return r;
}

VerifyReport verify_hypergeom(const VerifyOptions& opt) {
  require_graph(opt, Graph::tet, "hypergeom");
  auto r = make_report("hypergeom", Graph::tet, "", opt.grid_max);
  auto items = tet_grid(opt.grid_max);
  const std::size_t exhaustive = items.size();
  if (opt.samples > 0 && opt.sample_max > opt.grid_max) {
    const auto pool = tet_grid(opt.sample_max);
    for (long s = 0; s < opt.samples; ++s) {
      auto rng = sample_rng(opt.seed, static_cast<std::uint64_t>(s));
      items.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    }
  }
  const HypergeomParams params = opt.variant == Variant::corrected ? HypergeomParams::corrected : HypergeomParams::printed;
  std::vector<std::optional<LaurentPoly>> units(items.size());
  std::vector<std::string> errors(items.size());
  std::vector<LaurentRat> diffs(items.size());
  parallel_for(items.size(), opt.workers, [&](std::size_t i, unsigned) {
    try {
      const LaurentRat h = tet_hypergeom(items[i], params);
      const LaurentRat s = tet_primed(items[i]);
      units[i] = h.unit_ratio(s);
      if (!units[i]) diffs[i] = h - s;
    } catch (const std::domain_error& e) {
      errors[i] = e.what();
    }
  });
  std::optional<LaurentPoly> law;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Outcome o{true, std::nullopt};
    if (units[i] && !law) law = units[i];
    if (!errors[i].empty())
      o.failure = VerifyFailure{colors_of(items[i]), "", nlohmann::json{{"error", errors[i]}}};
    else if (!units[i] || !(*units[i] == *law))
      o.failure = VerifyFailure{colors_of(items[i]), "", to_json(diffs[i])};
    add(r, std::move(o), opt.max_failures);
  }
  r.info["exhaustive"] = exhaustive;
  r.info["sampled"] = items.size() - exhaustive;
  r.info["sample_max"] = opt.sample_max;
  r.info["seed"] = opt.seed;
  r.info["params"] = params == HypergeomParams::corrected ? "corrected" : "printed";
  if (law) r.info["unit"] = to_text(*law);
  return r;
}

VerifyReport verify_recursum(const VerifyOptions& opt) {
  require_graph(opt, Graph::tet, "recursum");
  auto r = make_report("recursum", Graph::tet, "1", opt.grid_max);
  std::vector<TetColoring> interior;
  for (const auto& c : tet_grid(opt.grid_max))
    if (shifts_admissible(Graph::tet, colors_of(c), 0, 1) && c.j1() >= 2 &&
        shifts_admissible(Graph::tet, {c.j1() - 2, c.j2(), c.j12(), c.j3(), c.j4(), c.j23()}, 0, 0))
      interior.push_back(c);
  std::vector<FamilyCache> caches(std::max(1u, opt.workers), FamilyCache(Graph::tet));
  std::array<int, 3> signs = opt.beta_signs;
  if (opt.negative_control) signs[0] = -signs[0];
  sweep(r, interior, opt, [&](const TetColoring& c, unsigned w) {
    return compare(colors_of(c), "1", tet_recursion_residual(c, caches[w], signs));
  });
  r.info["beta_signs"] = signs;
  if (opt.sign_scan) {
    nlohmann::json scan = nlohmann::json::array();
    for (int mask = 0; mask < 8; ++mask) {
      const std::array<int, 3> s{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
      std::vector<char> bad(interior.size(), 0);
      parallel_for(interior.size(), opt.workers, [&](std::size_t i, unsigned w) {
        bad[i] = !tet_recursion_residual(interior[i], caches[w], s).is_zero();
      });
      scan.push_back({{"signs", s}, {"failures", std::count(bad.begin(), bad.end(), 1)}});
    }
    r.info["sign_scan"] = scan;
  }
  return r;
}

VerifyReport verify_eliminate(const VerifyOptions& opt) {
  auto r = make_report("eliminate", Graph::tet, "1", 0);
  const auto eq = saddle_equations();
  add(r, Outcome{true, eq.quartic_coefficient.is_zero()
                           ? std::nullopt
                           : std::optional<VerifyFailure>(VerifyFailure{{}, "quartic", to_json(eq.quartic_coefficient)})},
      opt.max_failures);
  const Elimination el = eliminate_saddle(opt.variant);
  add(r, Outcome{true, el.divides ? std::nullopt
                                  : std::optional<VerifyFailure>(VerifyFailure{{}, "division", nlohmann::json("cCV does not divide the resultant")})},
      opt.max_failures);
  r.info["resultant_degree_y1"] = el.degree_y1;
  r.info["divides"] = el.divides;
  if (el.divides) {
    const std::string q = el.quotient.to_string();
    r.info["quotient_degree_y1"] = el.quotient.degree(y_name("1"));
    if (q.size() <= 400) r.info["quotient"] = q;
  }
  const long points = opt.samples > 0 ? std::min<long>(opt.samples, 20) : 0;
  double worst = 0;
  for (long s = 0; s < points; ++s) {
    auto rng = sample_rng(opt.seed, static_cast<std::uint64_t>(s));
    std::uniform_real_distribution<double> u(0.1, 0.9);
    TetX x{};
    std::map<std::string, cplx> pt;
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = u(rng);
      pt[x_name(edge_labels(Graph::tet)[i])] = x[i];
    }
    Outcome o{true, std::nullopt};
    try {
      const auto rec = saddle_solve_tet(x);
      pt[y_name("1")] = rec.y1_chosen;
      const double res = std::abs(el.resultant.evaluate(pt));
      worst = std::max(worst, res);
      if (!(res <= 1e-6)) o.failure = VerifyFailure{{}, "numeric", nlohmann::json{{"sample", s}, {"residual", res}}};
    } catch (const std::domain_error&) {
      o.tested = false;
    }
    add(r, std::move(o), opt.max_failures);
  }
  r.info["numeric_points"] = points;
  r.info["numeric_worst"] = worst;
  r.info["numeric_tolerance"] = 1e-6;
  return r;
}

VerifyReport verify_symmetry_images(const VerifyOptions& opt) {
  require_graph(opt, Graph::tet, "symmetry-images");
  auto r = make_report("symmetry-images", Graph::tet, opt.edge, opt.grid_max);
  const auto grid = family_grid(Graph::tet, opt.grid_max);
  std::vector<FamilyCache> caches(std::max(1u, opt.workers), FamilyCache(Graph::tet));
  const OperatorPoly base = operator_under_test(Graph::tet, "1", opt);
  for (const auto& e : edges_for(Graph::tet, opt.edge)) {
    if (e == "1") continue;
    const OperatorPoly op = operator_under_test(Graph::tet, e, opt);
    const std::size_t k = edge_index(Graph::tet, e);
    sweep(r, grid, opt, [&](const std::vector<long>& col, unsigned w) {
      if (!shifts_admissible(Graph::tet, col, k, 2)) return Outcome{};
      const TetColoring img = relabel_coloring(e, TetColoring{{col[0], col[1], col[2], col[3], col[4], col[5]}});
      return compare(col, e, apply_operator(op, col, caches[w]) - apply_operator(base, colors_of(img), caches[w]));
    });
  }
  return r;
}

VerifyReport run_verify(const std::string& check, const VerifyOptions& opt) {
  if (check == "theta-recursion") return verify_theta_recursion(opt);
  if (check == "annihilation") return verify_annihilation(opt);
  if (check == "classical-limit") return verify_classical_limit(opt);
  if (check == "symmetry") return verify_symmetry(opt);
  if (check == "reduction") return verify_reduction(opt);
  if (check == "hypergeom") return verify_hypergeom(opt);
  if (check == "recursum") return verify_recursum(opt);
  if (check == "eliminate") return verify_eliminate(opt);
  if (check == "symmetry-images") return verify_symmetry_images(opt);
  throw std::invalid_argument("unknown check '" + check + "'");
}

}  // namespace qgraph
