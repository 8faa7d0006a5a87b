#include "qgraph/apoly/verify.hpp"
#include "qgraph/asymptotics/sweeps.hpp"
#include "qgraph/cli/run_config.hpp"
#include "qgraph/qalg/format.hpp"
#include "qgraph/qalg/numeric.hpp"

#ifdef QGRAPH_HAVE_CLI
#include "cli.hpp"
#endif

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qgraph;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string invariant_json(Graph g, const std::vector<long>& colors, bool primed, const std::string& convention) {
  if (colors.size() != edge_labels(g).size())
    throw py::value_error(to_string(g) + " needs " + std::to_string(edge_labels(g).size()) + " colors");
  LaurentRat v;
  bool admissible = false;
  if (g == Graph::theta) {
    const ThetaColoring c{colors[0], colors[1], colors[2]};
    admissible = is_admissible(c);
    v = theta_invariant(c);
  } else {
    TetColoring c;
    std::copy(colors.begin(), colors.end(), c.j.begin());
    admissible = is_admissible(c);
    Convention conv = Convention::triangle_sum;
    if (convention == "printed")
      conv = Convention::printed;
    else if (convention != "triangle-sum")
      throw py::value_error("convention must be triangle-sum or printed");
    v = primed ? tet_primed(c, conv) : tet_full(c, conv);
  }
  nlohmann::json j{{"graph", to_string(g)}, {"colors", colors}, {"admissible", admissible},
                   {"text", to_text(v)},    {"value", to_json(v)}};
  return j.dump();
}

LaurentRat invariant_value(Graph g, const std::vector<long>& colors, bool primed) {
  if (g == Graph::theta) return theta_invariant({colors.at(0), colors.at(1), colors.at(2)});
  TetColoring c;
  if (colors.size() != 6) throw py::value_error("tet needs 6 colors");
  std::copy(colors.begin(), colors.end(), c.j.begin());
  return primed ? tet_primed(c) : tet_full(c);
}

VerifyOptions verify_options(const py::dict& kw) {
  VerifyOptions o;
  for (const auto& [key, value] : kw) {
    const std::string k = py::cast<std::string>(key);
    if (k == "grid_max") o.grid_max = py::cast<long>(value);
    else if (k == "graph") o.graph = parse_graph(py::cast<std::string>(value));
    else if (k == "edge") o.edge = py::cast<std::string>(value);
    else if (k == "negative_control") o.negative_control = py::cast<bool>(value);
    else if (k == "miscommuted") o.miscommuted = py::cast<bool>(value);
    else if (k == "variant") {
      const auto s = py::cast<std::string>(value);
      if (s != "corrected" && s != "printed") throw py::value_error("variant must be corrected or printed");
      o.variant = s == "printed" ? Variant::printed : Variant::corrected;
    } else if (k == "samples") o.samples = py::cast<long>(value);
    else if (k == "sample_max") o.sample_max = py::cast<long>(value);
    else if (k == "seed") o.seed = py::cast<std::uint64_t>(value);
    else if (k == "workers") o.workers = py::cast<unsigned>(value);
    else if (k == "sign_scan") o.sign_scan = py::cast<bool>(value);
    else throw py::value_error("unknown verify option '" + k + "'");
  }
  return o;
}

NumericOptions numeric_options(long samples, std::uint64_t seed, double tolerance, double step) {
  NumericOptions o;
  o.samples = samples;
  o.seed = seed;
  o.tolerance = tolerance;
  o.step = step;
  return o;
}

TetX tet_x(const std::vector<cplx>& x) {
  if (x.size() != 6) throw py::value_error("tet needs 6 x values");
  TetX t;
  std::copy(x.begin(), x.end(), t.begin());
  return t;
}

ThetaX theta_x(const std::vector<cplx>& x) {
  if (x.size() != 3) throw py::value_error("theta needs 3 x values");
  return {x[0], x[1], x[2]};
}

}  // namespace

PYBIND11_MODULE(_qgraph, m) {
  m.doc() = "Exact quantum invariants of the theta and tetrahedron graphs, their q-difference operators and asymptotics";

  m.def("version", &version);

  m.def(
      "invariant_json",
      [](const std::string& graph, const std::vector<long>& colors, bool primed, const std::string& convention) {
        return invariant_json(parse_graph(graph), colors, primed, convention);
      },
      py::arg("graph"), py::arg("colors"), py::arg("primed") = false, py::arg("convention") = "triangle-sum");
  m.def(
      "invariant_eval",
      [](const std::string& graph, const std::vector<long>& colors, cplx v, bool primed) {
        return eval_numeric(invariant_value(parse_graph(graph), colors, primed), v, 256);
      },
      py::arg("graph"), py::arg("colors"), py::arg("v"), py::arg("primed") = false);
  m.def("is_admissible", py::overload_cast<long, long, long>(&is_admissible));

  m.def("verify_checks", &verify_check_names);
  m.def(
      "verify_json",
      [](const std::string& check, const py::kwargs& kw) {
        const auto opt = verify_options(kw);
        py::gil_scoped_release release;
        return run_verify(check, opt).to_json().dump();
      },
      py::arg("check"));

  m.def("dilog", &dilog);
  m.def("w_theta", [](const std::vector<cplx>& x) { return w_theta(theta_x(x)); });
  m.def("w_tet", [](const std::vector<cplx>& x, cplx z) { return w_tet(tet_x(x), z); });
  m.def("log_y_theta", [](const std::vector<cplx>& x) {
    const auto a = log_y_theta(theta_x(x));
    return std::vector<cplx>(a.begin(), a.end());
  });

  m.def(
      "saddle_json", [](const std::vector<cplx>& x, double tol) { return saddle_report(tet_x(x), tol).to_json().dump(); },
      py::arg("x"), py::arg("tol") = 1e-8);
  m.def(
      "sweep_json",
      [](const std::string& kind, const std::string& graph, long samples, std::uint64_t seed, double tol,
         double step) {
        const auto o = numeric_options(samples, seed, tol, step);
        py::gil_scoped_release release;
        if (kind == "residual") return residual_sweep(parse_graph(graph), o).to_json().dump();
        if (kind == "lagrangian") return lagrangian_sweep(parse_graph(graph), o).to_json().dump();
        if (kind == "gradient") return gradient_sweep(o).to_json().dump();
        throw std::invalid_argument("sweep must be residual, lagrangian or gradient");
      },
      py::arg("kind"), py::arg("graph") = "theta", py::arg("samples") = 20, py::arg("seed") = 7,
      py::arg("tol") = 1e-9, py::arg("step") = 1e-5);
  m.def(
      "growth_json",
      [](const std::string& graph, const std::vector<double>& x, const std::vector<double>& hbars) {
        py::gil_scoped_release release;
        if (graph == "theta") {
          if (x.size() != 3) throw std::invalid_argument("theta needs 3 x values");
          return to_json(growth_check_theta({x[0], x[1], x[2]}, hbars)).dump();
        }
        if (graph == "tet") {
          if (x.size() != 6) throw std::invalid_argument("tet needs 6 x values");
          std::array<double, 6> t;
          std::copy(x.begin(), x.end(), t.begin());
          return to_json(growth_check_tet(t, hbars)).dump();
        }
        if (graph == "factorial") {
          if (x.size() != 1) throw std::invalid_argument("factorial needs 1 x value");
          return to_json(growth_check_factorial(x[0], hbars)).dump();
        }
        throw std::invalid_argument("graph must be theta, tet or factorial");
      },
      py::arg("graph"), py::arg("x"), py::arg("hbars"));

#ifdef QGRAPH_HAVE_CLI
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
#endif

  py::register_exception<SingularLocusError>(m, "SingularLocusError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
}
