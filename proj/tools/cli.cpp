#include "cli.hpp"

#include "qgraph/apoly/verify.hpp"
#include "qgraph/asymptotics/sweeps.hpp"
#include "qgraph/cli/run_config.hpp"
#include "qgraph/qalg/format.hpp"
#include "qgraph/qalg/numeric.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

namespace qgraph::cli {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// Decimal or p/q.
double parse_real(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const double d = parse_real(s.substr(slash + 1));
    if (d == 0) throw UsageError("zero denominator in '" + s + "'");
    return parse_real(s.substr(0, slash)) / d;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

std::vector<long> parse_colors(const std::string& s, std::size_t count) {
  std::vector<long> c;
  for (const auto& t : split(s)) c.push_back(parse_long(t));
  if (c.size() != count)
    throw UsageError("expected " + std::to_string(count) + " colors, got " + std::to_string(c.size()));
  for (long v : c)
    if (v < 0) throw UsageError("colors must be nonnegative");
  return c;
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> v;
  for (const auto& t : split(s)) v.push_back(parse_real(t));
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

struct Context {
  RunConfig cfg;
  std::optional<OutputFormat> format;
  std::ostream* out = nullptr;

  OutputFormat format_or(OutputFormat fallback) const { return format ? *format : fallback; }

  nlohmann::json meta() const {
    return {{"tool", "qgraph"},
            {"version", version()},
            {"convention", to_string(Convention::triangle_sum)},
            {"config_hash", cfg.hash()},
            {"config", cfg.to_json()}};
  }

  std::string csv_header() const {
    return "# qgraph " + version() + " convention=" + to_string(Convention::triangle_sum) +
           " config_hash=" + cfg.hash() + " seed=" + std::to_string(cfg.seed) + "\n";
  }

  void emit_json(nlohmann::json j) const {
    j["meta"] = meta();
    *out << j.dump(2) << "\n";
  }
};

// Invariant queries -------------------------------------------------------------------------------

struct InvariantArgs {
  std::string colors;
  bool primed = false;
  std::string convention = "triangle-sum";
  std::optional<std::string> eval;
};

int cmd_invariant(Graph g, const InvariantArgs& a, const Context& ctx) {
  const auto colors = parse_colors(a.colors, edge_labels(g).size());
  Convention conv = Convention::triangle_sum;
  if (a.convention == "printed")
    conv = Convention::printed;
  else if (a.convention != "triangle-sum")
    throw UsageError("unknown convention '" + a.convention + "'");
  LaurentRat value;
  bool admissible = false;
  if (g == Graph::theta) {
    const ThetaColoring c{colors[0], colors[1], colors[2]};
    admissible = is_admissible(c);
    value = theta_invariant(c);
  } else {
    TetColoring c;
    std::copy(colors.begin(), colors.end(), c.j.begin());
    admissible = is_admissible(c);
    value = a.primed ? tet_primed(c, conv) : tet_full(c, conv);
  }
  std::optional<std::complex<double>> num;
  double v0 = 0;
  if (a.eval) {
    v0 = parse_real(*a.eval);
    try {
      num = eval_numeric(value, v0, 256);
    } catch (const PoleError& e) {
      throw UsageError(std::string("cannot evaluate: ") + e.what());
    }
  }
  switch (ctx.format_or(OutputFormat::text)) {
    case OutputFormat::text:
      *ctx.out << to_text(value) << "\n";
      if (!admissible) *ctx.out << "admissible: false\n";
      if (num) *ctx.out << "at v = " << short_fmt(v0) << ": " << short_fmt(num->real()) << (num->imag() ? " + " + short_fmt(num->imag()) + "i" : "") << "\n";
      break;
    case OutputFormat::csv:
      *ctx.out << ctx.csv_header() << "graph,colors,admissible,value" << (num ? ",v,re,im" : "") << "\n";
      *ctx.out << to_string(g) << ",";
      for (std::size_t i = 0; i < colors.size(); ++i) *ctx.out << (i ? ":" : "") << colors[i];
      *ctx.out << "," << (admissible ? "true" : "false") << ",\"" << to_text(value) << "\"";
      if (num) *ctx.out << "," << fmt(v0) << "," << fmt(num->real()) << "," << fmt(num->imag());
      *ctx.out << "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j{{"graph", to_string(g)},         {"colors", colors},   {"value", to_json(value)},
                       {"text", to_text(value)},        {"admissible", admissible},
                       {"convention", to_string(conv)}};
      if (g == Graph::tet) j["primed"] = a.primed;
      if (num) j["eval"] = {{"v", v0}, {"re", num->real()}, {"im", num->imag()}};
      ctx.emit_json(j);
      break;
    }
  }
  return 0;
}

// Exact verification sweeps -----------------------------------------------------------------------

struct VerifyArgs {
  std::string check;
  std::optional<long> max;
  std::string graph;
  std::string edge = "all";
  bool negative_control = false;
  bool miscommuted = false;
  std::string variant = "corrected";
  long samples = 200;
  long sample_max = 8;
  bool sign_scan = false;
};

Graph default_graph(const std::string& check) {
  static const std::vector<std::string> tet_checks{"symmetry", "hypergeom", "recursum", "eliminate", "symmetry-images"};
  return std::find(tet_checks.begin(), tet_checks.end(), check) != tet_checks.end() ? Graph::tet : Graph::theta;
}

int cmd_verify(const VerifyArgs& a, Context& ctx) {
  const auto& names = verify_check_names();
  if (std::find(names.begin(), names.end(), a.check) == names.end()) throw UsageError("unknown check '" + a.check + "'");
  VerifyOptions o;
  if (a.max) ctx.cfg.grid_max = *a.max;
  ctx.cfg.validate();
  o.grid_max = ctx.cfg.grid_max;
  try {
    o.graph = a.graph.empty() ? default_graph(a.check) : parse_graph(a.graph);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  o.edge = a.edge;
  o.negative_control = a.negative_control;
  o.miscommuted = a.miscommuted;
  if (a.variant == "printed")
    o.variant = Variant::printed;
  else if (a.variant != "corrected")
    throw UsageError("unknown variant '" + a.variant + "'");
  o.samples = a.samples;
  o.sample_max = a.sample_max;
  o.sign_scan = a.sign_scan;
  o.seed = ctx.cfg.seed;
  o.workers = ctx.cfg.parallelism;
  VerifyReport r;
  try {
    r = run_verify(a.check, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (ctx.format_or(OutputFormat::json)) {
    case OutputFormat::json:
      ctx.emit_json(r.to_json());
      break;
    case OutputFormat::text:
      *ctx.out << "check " << r.check << " graph " << r.graph << (r.edge.empty() ? "" : " edge " + r.edge)
               << " grid_max " << r.grid_max << ": tested " << r.tested << ", failures " << r.failure_count << "\n";
      for (const auto& [k, v] : r.info.items()) {
        if (v.is_object()) {
          for (const auto& [kk, vv] : v.items())
            *ctx.out << "  " << k << "[" << kk << "] = " << (vv.is_string() ? vv.get<std::string>() : vv.dump()) << "\n";
        } else {
          *ctx.out << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
      }
      for (const auto& f : r.failures) *ctx.out << "  FAIL " << nlohmann::json(f.colors).dump() << " " << f.edge << "\n";
      *ctx.out << (r.passed() ? "PASS" : "FAIL") << "\n";
      break;
    case OutputFormat::csv:
      *ctx.out << ctx.csv_header() << "# check=" << r.check << " graph=" << r.graph << " tested=" << r.tested
               << " failures=" << r.failure_count << "\ncolors,edge,residual\n";
      for (const auto& f : r.failures) {
        std::string cols;
        for (std::size_t i = 0; i < f.colors.size(); ++i) cols += (i ? ":" : "") + std::to_string(f.colors[i]);
        std::string res = f.residual.dump();
        std::string quoted;
        for (char c : res) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        *ctx.out << cols << "," << f.edge << ",\"" << quoted << "\"\n";
      }
      break;
  }
  return r.passed() ? 0 : 1;
}

// Numeric checks ----------------------------------------------------------------------------------

struct GrowthArgs {
  std::string graph;
  std::string x;
  std::string hbar = "-1/32,-1/64,-1/128";
  std::optional<double> kappa;
};

int cmd_asymptotics(const GrowthArgs& a, const Context& ctx) {
  const auto x = parse_reals(a.x);
  const auto hbars = parse_reals(a.hbar);
  GrowthTable t;
  try {
    if (a.graph == "theta") {
      if (x.size() != 3) throw UsageError("theta needs 3 x values");
      t = growth_check_theta({x[0], x[1], x[2]}, hbars, {a.kappa.value_or(-1.5), ctx.cfg.precision});
    } else if (a.graph == "tet") {
      if (x.size() != 6) throw UsageError("tet needs 6 x values");
      t = growth_check_tet({x[0], x[1], x[2], x[3], x[4], x[5]}, hbars,
                           {a.kappa.value_or(0.0), std::max(ctx.cfg.precision, 1024)});
    } else if (a.graph == "factorial") {
      if (x.size() != 1) throw UsageError("factorial needs 1 x value");
      t = growth_check_factorial(x[0], hbars, {a.kappa.value_or(-0.5), ctx.cfg.precision});
    } else {
      throw UsageError("asymptotics graph must be theta, tet or factorial");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double lo = ctx.cfg.tolerance("growth_ratio_min"), hi = ctx.cfg.tolerance("growth_ratio_max");
  const double rtol = ctx.cfg.tolerance("richardson");
  bool ok = true;
  for (double q : t.ratios)
    if (std::isfinite(q) && !(q >= lo && q <= hi)) ok = false;
  if (t.richardson_relative && !(*t.richardson_relative <= rtol)) ok = false;
  switch (ctx.format_or(OutputFormat::json)) {
    case OutputFormat::json: {
      auto j = to_json(t);
      j["ratio_range"] = {lo, hi};
      j["richardson_tolerance"] = rtol;
      j["passed"] = ok;
      ctx.emit_json(j);
      break;
    }
    case OutputFormat::csv:
      *ctx.out << ctx.csv_header() << "# ratio_range=" << fmt(lo) << ":" << fmt(hi) << " richardson_tolerance=" << fmt(rtol)
               << "\n" << to_csv(t);
      break;
    case OutputFormat::text:
      *ctx.out << "hbar  colors  hbar*log|J|  ReW+c  error\n";
      for (const auto& r : t.rows) {
        *ctx.out << short_fmt(r.hbar) << "  ";
        for (std::size_t i = 0; i < r.colors.size(); ++i) *ctx.out << (i ? "," : "") << r.colors[i];
        *ctx.out << "  " << short_fmt(r.hbar_log_j) << "  " << short_fmt(r.re_w) << "  " << short_fmt(r.error);
        if (!r.diagnostic.empty()) *ctx.out << "  (" << r.diagnostic << ")";
        *ctx.out << "\n";
      }
      for (double q : t.ratios) *ctx.out << "ratio " << short_fmt(q) << "\n";
      if (t.richardson_relative) *ctx.out << "richardson relative " << short_fmt(*t.richardson_relative) << "\n";
      *ctx.out << (ok ? "PASS" : "FAIL") << "\n";
      break;
  }
  return ok ? 0 : 1;
}

int emit_numeric(const NumericReport& r, const Context& ctx) {
  switch (ctx.format_or(OutputFormat::json)) {
    case OutputFormat::json:
      ctx.emit_json(r.to_json());
      break;
    case OutputFormat::csv:
      *ctx.out << ctx.csv_header() << r.to_csv();
      break;
    case OutputFormat::text:
      *ctx.out << r.check << " " << r.graph << ": " << r.rows.size() << " rows, worst " << short_fmt(r.worst) << ", tolerance "
               << short_fmt(r.options.tolerance) << ", failures " << r.failures << ", skipped " << r.skipped << "\n";
      for (const auto& row : r.rows) {
        if (r.check == "saddle") {
          *ctx.out << "  z = " << short_fmt(row.x[0]) << (row.x[1] < 0 ? " - " : " + ") << short_fmt(std::abs(row.x[1]))
                   << "i  residual " << short_fmt(row.value) << "  " << row.status << (row.detail.empty() ? "" : "  ")
                   << row.detail << "\n";
        } else if (row.status != "pass") {
          *ctx.out << "  " << row.index << " " << row.status << " " << row.detail << "\n";
        }
      }
      *ctx.out << (r.passed() ? "PASS" : "FAIL") << "\n";
      break;
  }
  return r.passed() ? 0 : 1;
}

struct SweepArgs {
  std::string graph = "theta";
  std::optional<long> samples;
  std::optional<double> tol;
  double step = 1e-5;
};

NumericOptions sweep_options(const SweepArgs& a, const Context& ctx, long default_samples, const std::string& tol_name) {
  NumericOptions o;
  o.seed = ctx.cfg.seed;
  o.samples = a.samples.value_or(default_samples);
  if (o.samples < 0) throw UsageError("samples must be nonnegative");
  o.tolerance = a.tol.value_or(ctx.cfg.tolerance(tol_name));
  if (!(o.tolerance > 0)) throw UsageError("tolerance must be positive");
  if (!(a.step > 0)) throw UsageError("step must be positive");
  o.step = a.step;
  o.workers = ctx.cfg.parallelism;
  return o;
}

Graph sweep_graph(const std::string& s) {
  try {
    return parse_graph(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric checks for quantum invariants of the theta and tetrahedron graphs", "qgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  std::string config_path, format;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> seed;
  std::optional<int> precision;
  app.add_option("--config", config_path, "JSON configuration file (applied after $QGRAPH_CONFIG)");
  app.add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--workers", workers, "worker threads for sweeps");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--precision", precision, "MPFR bits for growth tables");

  InvariantArgs theta_args, tet_args;
  auto* theta = app.add_subcommand("theta", "theta graph invariant");
  theta->add_option("-c,--colors", theta_args.colors, "a,b,c")->required();
  theta->add_option("--eval", theta_args.eval, "numeric value at v = q^(1/2)");
  auto* tet = app.add_subcommand("tet", "tetrahedron invariant");
  tet->add_option("-c,--colors", tet_args.colors, "j1,j2,j12,j3,j4,j23")->required();
  tet->add_flag("--primed", tet_args.primed, "summation only, prefactor stripped");
  tet->add_option("--convention", tet_args.convention, "triangle-sum or printed");
  tet->add_option("--eval", tet_args.eval, "numeric value at v = q^(1/2)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "exact verification sweep");
  verify->add_option("check", va.check, "theta-recursion, annihilation, classical-limit, symmetry, reduction, "
                                        "hypergeom, recursum, eliminate, symmetry-images")
      ->required();
  verify->add_option("--max", va.max, "largest color in the grid");
  verify->add_option("--graph", va.graph, "theta or tet");
  verify->add_option("--edge", va.edge, "edge label or all");
  verify->add_flag("--negative-control", va.negative_control, "negate b_0 of the operator under test");
  verify->add_flag("--miscommuted", va.miscommuted, "evaluate displayed coefficients at unshifted colors");
  verify->add_option("--variant", va.variant, "corrected or printed");
  verify->add_option("--samples", va.samples, "sampled colorings (hypergeom) or numeric points (eliminate)");
  verify->add_option("--sample-max", va.sample_max, "largest color for sampled colorings");
  verify->add_flag("--sign-scan", va.sign_scan, "recursum: test all 8 sign patterns of beta");

  GrowthArgs ga;
  auto* asym = app.add_subcommand("asymptotics", "growth of hbar log|J| against Re W");
  asym->add_option("graph", ga.graph, "theta, tet or factorial")->required();
  asym->add_option("--x", ga.x, "holonomy eigenvalues")->required();
  asym->add_option("--hbar", ga.hbar, "negative hbar values, decimals or p/q");
  asym->add_option("--kappa", ga.kappa, "coefficient of the subtracted hbar log|hbar| term");

  std::string saddle_x;
  std::optional<double> saddle_tol;
  auto* saddle = app.add_subcommand("saddle", "roots of the tetrahedron saddle cubic");
  saddle->add_option("--x", saddle_x, "x_1,x_2,x_12,x_3,x_4,x_23")->required();
  saddle->add_option("--tol", saddle_tol, "residual tolerance for the chosen root");

  SweepArgs lag_args, res_args, grad_args;
  lag_args.step = 1e-5;
  grad_args.step = 1e-6;
  auto* lag = app.add_subcommand("lagrangian", "Jacobian symmetry of d log y / d log x");
  lag->add_option("--graph", lag_args.graph, "theta or tet");
  lag->add_option("--samples", lag_args.samples, "random points");
  lag->add_option("--step", lag_args.step, "finite-difference step");
  lag->add_option("--tol", lag_args.tol, "tolerance");
  auto* res = app.add_subcommand("residual", "A-polynomial residual at y from the potential");
  res->add_option("--graph", res_args.graph, "theta or tet");
  res->add_option("--samples", res_args.samples, "random points");
  res->add_option("--tol", res_args.tol, "tolerance");
  auto* grad = app.add_subcommand("gradient", "analytic log y against finite differences of W (theta)");
  grad->add_option("--samples", grad_args.samples, "random points");
  grad->add_option("--step", grad_args.step, "finite-difference step");
  grad->add_option("--tol", grad_args.tol, "tolerance");

  // Options given after a subcommand name are accepted too.
  for (auto* sub : {theta, tet, verify, asym, saddle, lag, res, grad}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx;
    ctx.out = &out;
    ctx.cfg = load_run_config(config_path);
    if (!format.empty()) {
      ctx.format = parse_output_format(format);
      ctx.cfg.output_format = *ctx.format;
    }
    if (workers) ctx.cfg.parallelism = *workers;
    if (seed) ctx.cfg.seed = *seed;
    if (precision) ctx.cfg.precision = *precision;
    ctx.cfg.validate();

    if (*theta) return cmd_invariant(Graph::theta, theta_args, ctx);
    if (*tet) return cmd_invariant(Graph::tet, tet_args, ctx);
    if (*verify) return cmd_verify(va, ctx);
    if (*asym) return cmd_asymptotics(ga, ctx);
    if (*saddle) {
      const auto x = parse_reals(saddle_x);
      if (x.size() != 6) throw UsageError("saddle needs 6 x values");
      TetX t{};
      std::copy(x.begin(), x.end(), t.begin());
      for (auto v : t)
        if (v == 0.0) throw UsageError("x values must be nonzero");
      NumericReport r;
      try {
        r = saddle_report(t, saddle_tol.value_or(ctx.cfg.tolerance("saddle")));
      } catch (const std::domain_error& e) {
        err << "saddle: " << e.what() << "\n";
        return 1;
      }
      return emit_numeric(r, ctx);
    }
    if (*lag) {
      const Graph g = sweep_graph(lag_args.graph);
      const auto o = sweep_options(lag_args, ctx, g == Graph::theta ? 50 : 20,
                                   g == Graph::theta ? "lagrangian_theta" : "lagrangian_tet");
      return emit_numeric(lagrangian_sweep(g, o), ctx);
    }
    if (*res) {
      const Graph g = sweep_graph(res_args.graph);
      const auto o = sweep_options(res_args, ctx, g == Graph::theta ? 100 : 20,
                                   g == Graph::theta ? "residual_theta" : "residual_tet");
      return emit_numeric(residual_sweep(g, o), ctx);
    }
    if (*grad) return emit_numeric(gradient_sweep(sweep_options(grad_args, ctx, 20, "gradient")), ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qgraph::cli
