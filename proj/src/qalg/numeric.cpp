#include "qgraph/qalg/numeric.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace qgraph {

namespace {

using boost::multiprecision::mpfr_float;

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(mpfr_float::default_precision()) {
    mpfr_float::default_precision(static_cast<unsigned>(std::max(16, bits * 30103 / 100000 + 1)));
  }
  ~PrecisionScope() { mpfr_float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct Complex {
  mpfr_float re, im;
};

Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

mpfr_float to_mpfr(const Rational& c) {
  mpfr_float n(c.get_num().get_str()), d(c.get_den().get_str());
  return n / d;
}

// Returns value and the magnitude scale sum |c_i| |v0|^e_i.
std::pair<std::complex<double>, double> eval_double(const LaurentPoly& p, std::complex<double> v0) {
  if (p.is_zero()) return {0.0, 0.0};
  const auto& c = p.integer_coefficients();
  const double den = p.denominator().get_d();
  std::complex<double> acc = 0;
  double scale = 0, r = std::abs(v0);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * v0 + c[i].get_d();
    scale = scale * r + std::abs(c[i].get_d());
  }
  const int low = p.low_exponent();
  acc *= std::pow(v0, low);
  scale *= std::pow(r, low);
  return {acc / den, scale / den};
}

std::pair<std::complex<double>, double> eval_mpfr(const LaurentPoly& p, std::complex<double> v0, int bits) {
  if (p.is_zero()) return {0.0, 0.0};
  PrecisionScope scope(bits);
  const Complex v{mpfr_float(v0.real()), mpfr_float(v0.imag())};
  const mpfr_float r = sqrt(v.re * v.re + v.im * v.im);
  Complex acc{0, 0};
  mpfr_float scale = 0;
  const auto& c = p.integer_coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = mul(acc, v);
    mpfr_float ci(c[i].get_str());
    acc.re += ci;
    scale = scale * r + abs(ci);
  }
  Complex vp{1, 0};
  const int low = p.low_exponent();
  if (low != 0) {
    Complex base = v;
    if (low < 0) {
      mpfr_float n2 = v.re * v.re + v.im * v.im;
      base = {v.re / n2, -v.im / n2};
    }
    for (int k = 0; k < std::abs(low); ++k) vp = mul(vp, base);
    scale *= pow(r, low);
  }
  acc = mul(acc, vp);
  mpfr_float den(p.denominator().get_str());
  return {{static_cast<double>(acc.re / den), static_cast<double>(acc.im / den)}, static_cast<double>(scale / den)};
}

std::pair<std::complex<double>, double> eval_any(const LaurentPoly& p, std::complex<double> v0, int bits) {
  return bits <= 53 ? eval_double(p, v0) : eval_mpfr(p, v0, bits);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// log|Phi_d(v0)| = sum_{e | d} mu(d/e) log|v0^e - 1|, computed with expm1 for v0 near 1.
mpfr_float log_abs_cyclotomic(int d, const mpfr_float& logv) {
  mpfr_float s = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(d / e);
    if (mu == 0) continue;
    mpfr_float t = log(abs(boost::multiprecision::expm1(logv * e)));
    s += mu > 0 ? t : mpfr_float(-t);
  }
  return s;
}

mpfr_float log_abs_product(const QProduct& p, const mpfr_float& logv, std::vector<mpfr_float>& cache,
                           std::vector<bool>& have) {
  mpfr_float s = log(abs(to_mpfr(p.scalar()))) + logv * p.vpow();
  for (const auto& [d, e] : p.exponents()) {
    const auto i = static_cast<std::size_t>(d);
    if (i >= cache.size()) {
      cache.resize(i + 1);
      have.resize(i + 1, false);
    }
    if (!have[i]) {
      cache[i] = log_abs_cyclotomic(d, logv);
      have[i] = true;
    }
    s += cache[i] * e;
  }
  return s;
}

}  // namespace

std::complex<double> eval_numeric(const LaurentPoly& p, std::complex<double> v0, int precision_bits) {
  if (v0 == 0.0 && !p.is_zero() && p.low_exponent() < 0) throw PoleError("eval_numeric: v0 = 0 with negative powers");
  return eval_any(p, v0, precision_bits).first;
}

std::complex<double> eval_numeric(const LaurentRat& f, std::complex<double> v0, int precision_bits) {
  if (v0 == 0.0 && (f.den().low_exponent() < 0 || f.num().low_exponent() < 0))
    throw PoleError("eval_numeric: v0 = 0 with negative powers");
  auto [d, dscale] = eval_any(f.den(), v0, precision_bits);
  if (std::abs(d) <= 1e-300 * dscale || d == 0.0) throw PoleError("eval_numeric: denominator vanishes at v0");
  return eval_any(f.num(), v0, precision_bits).first / d;
}

double log_abs_numeric(const QProduct& p, double v0, int precision_bits) {
  if (!(v0 > 0)) throw std::invalid_argument("log_abs_numeric: v0 must be positive");
  PrecisionScope scope(precision_bits);
  std::vector<mpfr_float> cache;
  std::vector<bool> have;
  const mpfr_float logv = log(mpfr_float(v0));
  return static_cast<double>(log_abs_product(p, logv, cache, have));
}

double log_abs_sum_numeric(std::span<const QProduct> terms, std::span<const int> signs, double v0,
                           int precision_bits) {
  if (!(v0 > 0)) throw std::invalid_argument("log_abs_sum_numeric: v0 must be positive");
  if (!signs.empty() && signs.size() != terms.size()) throw std::invalid_argument("log_abs_sum_numeric: size mismatch");
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  PrecisionScope scope(precision_bits);
  std::vector<mpfr_float> cache;
  std::vector<bool> have;
  const mpfr_float logv = log(mpfr_float(v0));
  std::vector<mpfr_float> logs;
  logs.reserve(terms.size());
  mpfr_float top;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    logs.push_back(log_abs_product(terms[i], logv, cache, have));
    if (i == 0 || logs.back() > top) top = logs.back();
  }
  mpfr_float s = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    int sign = terms[i].scalar() < 0 ? -1 : 1;
    // Phi_1(v0) = v0 - 1 < 0 for v0 < 1, and v0^k > 0, so the sign of each factor is known.
    if (v0 < 1) {
      auto it = terms[i].exponents().find(1);
      if (it != terms[i].exponents().end() && it->second % 2) sign = -sign;
    }
    if (!signs.empty()) sign *= signs[i];
    mpfr_float t = exp(logs[i] - top);
    s += sign > 0 ? t : mpfr_float(-t);
  }
  if (s == 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(log(abs(s)) + top);
}

}  // namespace qgraph
