#pragma once

#include "qgraph/asymptotics/asymptotics.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qgraph {

struct NumericOptions {
  std::uint64_t seed = 7;
  long samples = 20;
  double lo = 0.1, hi = 0.9;  ///< sampling box for every coordinate
  double step = 1e-5;         ///< finite-difference step
  double tolerance = 1e-9;
  unsigned workers = 1;
};

struct NumericRow {
  long index = 0;
  std::vector<double> x;
  double value = 0.0;
  std::string status;  ///< pass, fail or skipped
  std::string detail;
};

struct NumericReport {
  std::string check;
  std::string graph;
  NumericOptions options;
  std::vector<NumericRow> rows;
  double worst = 0.0;  ///< largest value over non-skipped rows
  long failures = 0;
  long skipped = 0;

  bool passed() const { return failures == 0; }
  nlohmann::json to_json() const;
  /// Header comment lines with seed and tolerance, then index,x_1..x_n,value,status,detail.
  std::string to_csv() const;
};

/// Uniform point in the options box for sample `index`.
std::vector<double> sample_point(const NumericOptions& opt, std::size_t dim, std::uint64_t index);

/// theta: max_j |A_j(y_j(x), x)|; tet: |A_1(y_1, x)| at the chosen saddle.
NumericReport residual_sweep(Graph g, const NumericOptions& opt);
/// Jacobian asymmetry of d log y / d log x.
NumericReport lagrangian_sweep(Graph g, const NumericOptions& opt);
/// Difference between the analytic log y_j and central differences of x_j dW/dx_j (theta), divided by
/// max(|log y_j|, 1).
/// Imaginary parts are compared modulo pi i, the branch ambiguity of the principal logarithms.
NumericReport gradient_sweep(const NumericOptions& opt);
/// One row per root of the saddle cubic at x; passes when the chosen root's residual is within tolerance.
NumericReport saddle_report(const TetX& x, double tolerance);

nlohmann::json to_json(const GrowthTable& t);
/// Header comment lines, then hbar,colors,admissible,hbar_log_j,re_w,error,diagnostic.
std::string to_csv(const GrowthTable& t);

}  // namespace qgraph
