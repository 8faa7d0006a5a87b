#include "qgraph/asymptotics/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace qgraph {

namespace {

constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;

// B_{2k} / (2k+1)! for k = 1..15.
constexpr double kBernoulli[] = {
    0.027777777777777776,
    -0.0002777777777777778,
    4.72411186696901e-06,
    -9.185773074661964e-08,
    1.8978869988971e-09,
    -4.0647616451442256e-11,
    8.921691020456452e-13,
    -1.9939295860721074e-14,
    4.518980029619918e-16,
    -1.0356517612181247e-17,
    2.395218621026187e-19,
    -5.581785874325009e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.315975652702203e-26,
};

// |z| <= 1, Re z <= 1/2: series in w = -log(1 - z).
cplx li2_series(cplx z) {
  const cplx w = -std::log(1.0 - z);
  const cplx w2 = w * w;
  cplx term = w * w2;
  cplx sum = w - 0.25 * w2;
  for (double b : kBernoulli) {
    sum += b * term;
    term *= w2;
  }
  return sum;
}

cplx li2_disk(cplx z) {
  if (z.real() > 0.5) return kPi2over6 - std::log(z) * std::log(1.0 - z) - li2_series(1.0 - z);
  return li2_series(z);
}

}  // namespace

cplx dilog(cplx u) {
  if (u == 0.0) return 0.0;
  if (u == 1.0) return kPi2over6;
  if (std::abs(u) <= 1.0) return li2_disk(u);
  const cplx l = std::log(-u);
  const cplx r = -kPi2over6 - 0.5 * l * l - li2_disk(1.0 / u);
  if (u.imag() == 0.0) return r.real();
  return r;
}

cplx g_potential(cplx u) {
  if (u == 0.0) throw std::domain_error("g_potential: argument 0");
  const cplx l = std::log(u);
  return -0.25 * l * l - dilog(u);
}

cplx g_log_derivative(cplx u) { return -0.5 * std::log(u) + std::log(1.0 - u); }

}  // namespace qgraph
