#include "qgraph/asymptotics/sweeps.hpp"
#include "qgraph/util/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qgraph {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void finish(NumericReport& r) {
  for (const auto& row : r.rows) {
    if (row.status == "skipped") {
      ++r.skipped;
      continue;
    }
    if (row.status == "fail") ++r.failures;
    if (std::isfinite(row.value)) r.worst = std::max(r.worst, row.value);
    else r.worst = row.value;
  }
}

template <class Eval>
NumericReport run(const std::string& check, Graph g, const NumericOptions& opt, Eval eval) {
  if (opt.samples < 0) throw std::invalid_argument("samples must be nonnegative");
  if (!(opt.lo > 0) || !(opt.lo < opt.hi)) throw std::invalid_argument("sampling box must satisfy 0 < lo < hi");
  NumericReport r;
  r.check = check;
  r.graph = to_string(g);
  r.options = opt;
  r.rows.resize(static_cast<std::size_t>(opt.samples));
  const std::size_t dim = edge_labels(g).size();
  parallel_for(r.rows.size(), opt.workers, [&](std::size_t i, unsigned) {
    NumericRow& row = r.rows[i];
    row.index = static_cast<long>(i);
    row.x = sample_point(opt, dim, i);
    try {
      row.value = eval(row.x);
      row.status = row.value <= opt.tolerance ? "pass" : "fail";
    } catch (const SingularLocusError& e) {
      row.status = "skipped";
      row.detail = e.what();
    } catch (const std::domain_error& e) {
      row.status = "skipped";
      row.detail = e.what();
    }
  });
  finish(r);
  return r;
}

std::vector<cplx> to_complex(const std::vector<double>& x) { return {x.begin(), x.end()}; }

}  // namespace

std::vector<double> sample_point(const NumericOptions& opt, std::size_t dim, std::uint64_t index) {
  auto rng = sample_rng(opt.seed, index);
  std::uniform_real_distribution<double> u(opt.lo, opt.hi);
  std::vector<double> x(dim);
  for (auto& v : x) v = u(rng);
  return x;
}

nlohmann::json NumericReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j{{"index", row.index}, {"x", row.x}, {"status", row.status}};
    j["value"] = std::isfinite(row.value) ? nlohmann::json(row.value) : nlohmann::json(nullptr);
    if (!row.detail.empty()) j["detail"] = row.detail;
    rs.push_back(std::move(j));
  }
  return {{"check", check},
          {"graph", graph},
          {"seed", options.seed},
          {"samples", options.samples},
          {"box", {options.lo, options.hi}},
          {"step", options.step},
          {"tolerance", options.tolerance},
          {"worst", worst},
          {"failures", failures},
          {"skipped", skipped},
          {"rows", rs}};
}

std::string NumericReport::to_csv() const {
  std::ostringstream os;
  os << "# check=" << check << " graph=" << graph << " seed=" << options.seed << " samples=" << options.samples
     << " box=" << num(options.lo) << ":" << num(options.hi) << " step=" << num(options.step)
     << " tolerance=" << num(options.tolerance) << "\n";
  os << "index";
  const std::size_t dim = rows.empty() ? 0 : rows.front().x.size();
  for (std::size_t i = 0; i < dim; ++i) os << ",x" << i + 1;
  os << ",value,status,detail\n";
  for (const auto& row : rows) {
    os << row.index;
    for (double v : row.x) os << "," << num(v);
    os << "," << num(row.value) << "," << row.status << "," << csv_field(row.detail) << "\n";
  }
  return os.str();
}

NumericReport residual_sweep(Graph g, const NumericOptions& opt) {
  if (g == Graph::theta)
    return run("residual", g, opt, [](const std::vector<double>& x) {
      double worst = 0;
      for (const auto& [e, v] : check_residual_theta(make_point(Graph::theta, to_complex(x)))) worst = std::max(worst, v);
      return worst;
    });
  return run("residual", g, opt, [](const std::vector<double>& x) {
    TetX t{};
    std::copy(x.begin(), x.end(), t.begin());
    return saddle_solve_tet(t).residual;
  });
}

NumericReport lagrangian_sweep(Graph g, const NumericOptions& opt) {
  return run("lagrangian", g, opt, [&](const std::vector<double>& x) {
    return lagrangian_residual(g, make_point(g, to_complex(x)), opt.step);
  });
}

NumericReport gradient_sweep(const NumericOptions& opt) {
  return run("gradient", Graph::theta, opt, [&](const std::vector<double>& x) {
    const ThetaX p{x[0], x[1], x[2]};
    const auto ly = log_y_theta(p);
    double worst = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      ThetaX xp = p, xm = p;
      xp[j] *= std::exp(opt.step);
      xm[j] *= std::exp(-opt.step);
      const cplx fd = (w_theta(xp) - w_theta(xm)) / (2 * opt.step);
      const cplx d = ly[j] - fd;
      const cplx reduced(d.real(), std::remainder(d.imag(), std::numbers::pi));
      worst = std::max(worst, std::abs(reduced) / std::max(std::abs(ly[j]), 1.0));
    }
    return worst;
  });
}

NumericReport saddle_report(const TetX& x, double tolerance) {
  NumericReport r;
  r.check = "saddle";
  r.graph = "tet";
  r.options.samples = 0;
  r.options.tolerance = tolerance;
  const SaddleRecord rec = saddle_solve_tet(x);
  for (std::size_t i = 0; i < rec.z_roots.size(); ++i) {
    NumericRow row;
    row.index = static_cast<long>(i);
    row.x = {rec.z_roots[i].real(), rec.z_roots[i].imag(), rec.y1[i].real(), rec.y1[i].imag()};
    row.value = rec.residuals[i];
    const bool chosen = i == rec.chosen;
    row.status = chosen ? (row.value <= tolerance ? "pass" : "fail") : "skipped";
    row.detail = (chosen ? "chosen; " : "") + std::string("|z dW/dz| = ") + num(rec.stationarity[i]);
    r.rows.push_back(std::move(row));
  }
  finish(r);
  r.skipped = 0;
  return r;
}

nlohmann::json to_json(const GrowthTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json j{{"hbar", r.hbar},           {"colors", r.colors}, {"admissible", r.admissible},
                     {"hbar_log_j", r.hbar_log_j}, {"re_w", r.re_w},     {"error", r.error}};
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    rows.push_back(std::move(j));
  }
  nlohmann::json ratios = nlohmann::json::array();
  for (double q : t.ratios) ratios.push_back(std::isfinite(q) ? nlohmann::json(q) : nlohmann::json(nullptr));
  nlohmann::json out{{"graph", t.graph}, {"x", t.x},           {"constant", t.constant},
                     {"kappa", t.kappa}, {"rows", rows},       {"ratios", ratios}};
  out["richardson_relative"] = t.richardson_relative ? nlohmann::json(*t.richardson_relative) : nlohmann::json(nullptr);
  return out;
}

std::string to_csv(const GrowthTable& t) {
  std::ostringstream os;
  os << "# graph=" << t.graph << " x=";
  for (std::size_t i = 0; i < t.x.size(); ++i) os << (i ? ":" : "") << num(t.x[i]);
  os << " constant=" << num(t.constant) << " kappa=" << num(t.kappa) << "\n";
  for (std::size_t i = 0; i < t.ratios.size(); ++i) os << "# ratio_" << i << "=" << num(t.ratios[i]) << "\n";
  if (t.richardson_relative) os << "# richardson_relative=" << num(*t.richardson_relative) << "\n";
  os << "hbar,colors,admissible,hbar_log_j,re_w,error,diagnostic\n";
  for (const auto& r : t.rows) {
    std::string cols;
    for (std::size_t i = 0; i < r.colors.size(); ++i) cols += (i ? ":" : "") + std::to_string(r.colors[i]);
    os << num(r.hbar) << "," << cols << "," << (r.admissible ? "true" : "false") << "," << num(r.hbar_log_j) << ","
       << num(r.re_w) << "," << num(r.error) << "," << csv_field(r.diagnostic) << "\n";
  }
  return os.str();
}

}  // namespace qgraph
