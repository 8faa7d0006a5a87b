#pragma once

#include "qgraph/qalg/laurent_rat.hpp"

#include <complex>
#include <stdexcept>

namespace qgraph {

/// Raised when a denominator vanishes at the evaluation point.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numeric value at v = v0.
///
/// precision_bits <= 53 uses complex<double> Horner evaluation. Larger values evaluate with MPFR
/// at that working precision and round the result to double. A denominator whose magnitude is
/// below 1e-300 times the sum of its term magnitudes is reported as a pole.
std::complex<double> eval_numeric(const LaurentPoly& p, std::complex<double> v0, int precision_bits = 53);
std::complex<double> eval_numeric(const LaurentRat& f, std::complex<double> v0, int precision_bits = 53);

/// log|f(v0)| for real v0 > 0, robust against overflow of the value itself.
double log_abs_numeric(const QProduct& p, double v0, int precision_bits = 256);

/// log|sum_i sign_i * term_i(v0)| for real v0 > 0, evaluated in MPFR so that massive cancellation
/// between terms is resolved. Returns -inf for an exact numeric zero.
double log_abs_sum_numeric(std::span<const QProduct> terms, std::span<const int> signs, double v0,
                           int precision_bits = 256);

}  // namespace qgraph
