#include "qgraph/qalg/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace qgraph {

namespace {

constexpr int kTableSize = 512;

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Phi_d(v) = prod_{e | d} (v^e - 1)^mu(d/e), multiplications first, then exact sparse divisions.
LaurentPoly compute_cyclotomic(int d) {
  std::vector<long long> p{1};
  std::vector<int> divide_by;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(d / e);
    if (mu == 1) {
      std::vector<long long> r(p.size() + static_cast<std::size_t>(e), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] -= p[i];
        r[i + static_cast<std::size_t>(e)] += p[i];
      }
      p = std::move(r);
    } else if (mu == -1) {
      divide_by.push_back(e);
    }
  }
  for (int e : divide_by) {
    // p = q (v^e - 1)  =>  q_i = q_{i-e} - p_i
    const auto ue = static_cast<std::size_t>(e);
    std::vector<long long> q(p.size() - ue, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= ue ? q[i - ue] : 0) - p[i];
    p = std::move(q);
  }
  std::vector<Integer> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = Integer(static_cast<long>(p[i]));
  return LaurentPoly::from_integers(0, std::move(c));
}

const std::vector<LaurentPoly>& cyclotomic_table() {
  static const std::vector<LaurentPoly> table = [] {
    std::vector<LaurentPoly> t(kTableSize + 1);
    for (int d = 1; d <= kTableSize; ++d) t[static_cast<std::size_t>(d)] = compute_cyclotomic(d);
    return t;
  }();
  return table;
}

void add_exponent(std::map<int, int>& m, int d, int e) {
  if (e == 0) return;
  auto [it, inserted] = m.try_emplace(d, e);
  if (!inserted && (it->second += e) == 0) m.erase(it);
}

LaurentPoly expand(const std::map<int, int>& exps, int sign) {
  LaurentPoly r(1);
  for (const auto& [d, e] : exps)
    if (e * sign > 0) r *= cyclotomic(d).pow(static_cast<unsigned>(e * sign));
  return r;
}

}  // namespace

LaurentPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: index must be positive");
  if (d <= kTableSize) return cyclotomic_table()[static_cast<std::size_t>(d)];
  return compute_cyclotomic(d);
}

QProduct QProduct::q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  if (n == 0) throw std::domain_error("QProduct: [0] = 0 has no product form");
  QProduct p;
  p.vpow_ = static_cast<int>(1 - n);
  for (long d = 3; d <= 2 * n; ++d)
    if ((2 * n) % d == 0) p.exps_[static_cast<int>(d)] = 1;
  return p;
}

QProduct QProduct::q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QProduct p;
  p.vpow_ = static_cast<int>(n - n * (n + 1) / 2);
  for (long d = 3; d <= 2 * n; ++d) {
    long step = d / std::gcd(d, 2L);
    if (long e = n / step; e > 0) p.exps_[static_cast<int>(d)] = static_cast<int>(e);
  }
  return p;
}

QProduct QProduct::one_minus_vpow(long k) {
  if (k == 0) throw std::domain_error("QProduct: 1 - v^0 = 0 has no product form");
  QProduct p;
  const long a = std::abs(k);
  for (long d = 1; d <= a; ++d)
    if (a % d == 0) p.exps_[static_cast<int>(d)] = 1;
  if (k > 0)
    p.scalar_ = -1;
  else
    p.vpow_ = static_cast<int>(k);
  return p;
}

QProduct& QProduct::operator*=(const QProduct& o) {
  scalar_ *= o.scalar_;
  vpow_ += o.vpow_;
  for (const auto& [d, e] : o.exps_) add_exponent(exps_, d, e);
  return *this;
}

QProduct& QProduct::operator/=(const QProduct& o) {
  if (o.scalar_ == 0) throw std::domain_error("QProduct: division by zero");
  scalar_ /= o.scalar_;
  vpow_ -= o.vpow_;
  for (const auto& [d, e] : o.exps_) add_exponent(exps_, d, -e);
  return *this;
}

QProduct& QProduct::scale(const Rational& c) {
  scalar_ *= c;
  return *this;
}

bool QProduct::is_polynomial() const {
  for (const auto& [d, e] : exps_)
    if (e < 0) return false;
  return true;
}

LaurentPoly QProduct::numerator(bool include_unit) const {
  LaurentPoly r = expand(exps_, 1);
  return include_unit ? r.scaled(scalar_).shifted(vpow_) : r;
}

LaurentPoly QProduct::denominator() const { return expand(exps_, -1); }

}  // namespace qgraph
