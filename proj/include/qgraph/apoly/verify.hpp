#pragma once

#include "qgraph/apoly/apoly.hpp"
#include "qgraph/util/parallel.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qgraph {

/// Admissible colorings with every entry in [0, max], lexicographic order.
std::vector<ThetaColoring> theta_grid(long max);
std::vector<TetColoring> tet_grid(long max);

struct VerifyOptions {
  long grid_max = 8;
  Graph graph = Graph::theta;
  std::string edge = "all";
  bool negative_control = false;  ///< negate b_0 of the operator under test
  bool miscommuted = false;       ///< evaluate the displayed coefficients at unshifted colors
  Variant variant = Variant::corrected;
  std::array<int, 3> beta_signs{1, 1, -1};
  bool sign_scan = false;         ///< recursum: also report which of the 8 beta sign patterns annihilate
  long samples = 200;             ///< hypergeom: sampled colorings beyond the exhaustive grid
  long sample_max = 8;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::size_t max_failures = 20;  ///< failures listed in the report (all are counted)
};

struct VerifyFailure {
  std::vector<long> colors;
  std::string edge;
  nlohmann::json residual;
};

struct VerifyReport {
  std::string check;
  std::string graph;
  std::string edge;
  long grid_max = 0;
  long tested = 0;
  long failure_count = 0;
  std::vector<VerifyFailure> failures;
  nlohmann::json info = nlohmann::json::object();

  bool passed() const { return failure_count == 0; }
  nlohmann::json to_json() const;
};

/// theta-recursion, annihilation, classical-limit, symmetry, reduction, hypergeom, recursum, eliminate,
/// symmetry-images.
const std::vector<std::string>& verify_check_names();

/// Throws std::invalid_argument for unknown checks or edges.
VerifyReport run_verify(const std::string& check, const VerifyOptions& opt);

VerifyReport verify_theta_recursion(const VerifyOptions& opt);
VerifyReport verify_annihilation(const VerifyOptions& opt);
VerifyReport verify_classical_limit(const VerifyOptions& opt);
VerifyReport verify_symmetry(const VerifyOptions& opt);
VerifyReport verify_reduction(const VerifyOptions& opt);
VerifyReport verify_hypergeom(const VerifyOptions& opt);
VerifyReport verify_recursum(const VerifyOptions& opt);
VerifyReport verify_eliminate(const VerifyOptions& opt);
VerifyReport verify_symmetry_images(const VerifyOptions& opt);

/// Operator under test for a sweep, with negative-control and ordering options applied.
OperatorPoly operator_under_test(Graph g, const std::string& edge, const VerifyOptions& opt);

}  // namespace qgraph
