#include "qgraph/qalg/multi_poly.hpp"

#include "qgraph/qalg/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgraph {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MultiPoly::TermMap remap(const MultiPoly& p, const std::vector<std::string>& target) {
  if (p.variables() == target) return p.terms();
  std::vector<std::size_t> pos;
  for (const auto& name : p.variables())
    pos.push_back(static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), name) - target.begin()));
  MultiPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents x(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) x[pos[i]] = e[i];
    out.emplace(std::move(x), c);
  }
  return out;
}

bool divides(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiPoly invert_monomial(const MultiPoly& m) {
  if (!m.is_monomial()) throw std::domain_error("substitute: binding for a negative power is not invertible");
  const auto& [e, c] = *m.terms().begin();
  MultiPoly::Exponents ne(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  return MultiPoly::from_terms(m.variables(), {{ne, Rational(1 / c)}});
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rational(c));
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c).first->second.canonicalize();
}

MultiPoly MultiPoly::var(const std::string& name, int power) {
  MultiPoly p;
  if (power == 0) return MultiPoly(1);
  p.vars_ = {name};
  p.terms_.emplace(Exponents{power}, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, const std::map<std::string, int>& powers) {
  std::vector<std::string> vars;
  Exponents e;
  for (const auto& [name, k] : powers) {
    vars.push_back(name);
    e.push_back(k);
  }
  TermMap t;
  t.emplace(std::move(e), c);
  return from_terms(std::move(vars), std::move(t));
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("MultiPoly: duplicate variable name");
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  if (sorted != p.vars_) {
    p.terms_ = remap(p, sorted);
    p.vars_ = std::move(sorted);
  }
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents x;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) x.push_back(e[i]);
    out.emplace(std::move(x), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(out);
}

bool MultiPoly::depends_on(const std::string& name) const {
  return std::binary_search(vars_.begin(), vars_.end(), name);
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
  return is_zero() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::degree(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name || is_zero()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MultiPoly::min_degree(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name || is_zero()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

std::map<int, MultiPoly> MultiPoly::coefficients(const std::string& name) const {
  std::map<int, MultiPoly> out;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  std::map<int, TermMap> parts;
  for (const auto& [e, c] : terms_) {
    Exponents x = e;
    x[i] = 0;
    parts[e[i]].emplace(std::move(x), c);
  }
  for (auto& [k, t] : parts) out.emplace(k, from_terms(vars_, std::move(t)));
  return out;
}

std::pair<std::map<std::string, int>, Rational> MultiPoly::leading_term() const {
  if (is_zero()) throw std::logic_error("MultiPoly: zero has no leading term");
  const auto& [e, c] = *terms_.rbegin();
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) m[vars_[i]] = e[i];
  return {m, c};
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ != o.vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    terms_ = remap(*this, vars);
    vars_ = std::move(vars);
  }
  for (auto& [e, c] : remap(o, vars_)) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto vars = merge_vars(a.vars_, b.vars_);
  auto ta = remap(a, vars), tb = remap(b, vars);
  MultiPoly::TermMap out;
  MultiPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(e);
      it->second += ca * cb;
    }
  MultiPoly r;
  r.vars_ = std::move(vars);
  r.terms_ = std::move(out);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  std::map<std::string, MultiPoly> b = bindings;
  bool via_q = false;
  if (auto it = b.find("q"); it != b.end() && !depends_on("q")) {
    via_q = true;
    if (b.count(kV)) throw std::invalid_argument("substitute: both q and v bound");
    b[kV] = it->second;
    b.erase(it);
  }
  std::vector<const MultiPoly*> bound(vars_.size(), nullptr);
  std::vector<MultiPoly> inverse(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (auto it = b.find(vars_[i]); it != b.end()) bound[i] = &it->second;
  std::vector<std::map<int, MultiPoly>> cache(vars_.size());
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    std::map<std::string, int> free;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!bound[i]) {
        free[vars_[i]] = e[i];
        continue;
      }
      int k = e[i];
      if (via_q && vars_[i] == kV) {
        if (k % 2) throw std::invalid_argument("substitute: q binding with odd power of q^(1/2)");
        k /= 2;
      }
      auto [it, inserted] = cache[i].try_emplace(k);
      if (inserted) {
        if (k < 0) {
          if (inverse[i].is_zero()) inverse[i] = invert_monomial(*bound[i]);
          it->second = inverse[i].pow(static_cast<unsigned>(-k));
        } else {
          it->second = bound[i]->pow(static_cast<unsigned>(k));
        }
      }
      term *= it->second;
    }
    if (!free.empty()) term *= monomial(1, free);
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> target;
  for (const auto& v : vars_) {
    auto it = names.find(v);
    target.push_back(it == names.end() ? v : it->second);
  }
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    std::map<std::string, int> m;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m[target[i]] += e[i];
    result += monomial(c, m);
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  if (is_zero()) return MultiPoly{};
  auto vars = merge_vars(vars_, d.vars_);
  TermMap r = remap(*this, vars), dv = remap(d, vars);
  const std::size_t n = vars.size();
  Exponents lo_r(n), lo_d(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo_r[i] = r.begin()->first[i];
    lo_d[i] = dv.begin()->first[i];
    for (const auto& [e, c] : r) lo_r[i] = std::min(lo_r[i], e[i]);
    for (const auto& [e, c] : dv) lo_d[i] = std::min(lo_d[i], e[i]);
  }
  auto shift = [n](const TermMap& t, const Exponents& by) {
    TermMap out;
    for (const auto& [e, c] : t) {
      Exponents x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = e[i] - by[i];
      out.emplace(std::move(x), c);
    }
    return out;
  };
  r = shift(r, lo_r);
  dv = shift(dv, lo_d);
  const auto& [dl, dc] = *dv.rbegin();
  TermMap quo;
  Exponents t(n);
  while (!r.empty()) {
    const auto [rl, rc] = *r.rbegin();
    if (!divides(dl, rl)) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) t[i] = rl[i] - dl[i];
    const Rational tc = rc / dc;
    quo.emplace(t, tc);
    for (const auto& [e, c] : dv) {
      Exponents x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = e[i] + t[i];
      auto [it, inserted] = r.try_emplace(std::move(x), 0);
      it->second -= tc * c;
      if (it->second == 0) r.erase(it);
    }
  }
  Exponents back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = lo_d[i] - lo_r[i];
  return from_terms(vars, shift(quo, back));
}

LaurentPoly MultiPoly::to_laurent(const std::map<std::string, int>& vpowers) const {
  std::vector<int> k(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == kV) {
      k[i] = 1;
      continue;
    }
    auto it = vpowers.find(vars_[i]);
    if (it == vpowers.end()) throw std::invalid_argument("to_laurent: unbound variable " + vars_[i]);
    k[i] = it->second;
  }
  std::map<int, Rational> acc;
  for (const auto& [e, c] : terms_) {
    int p = 0;
    for (std::size_t i = 0; i < e.size(); ++i) p += e[i] * k[i];
    acc[p] += c;
  }
  std::vector<std::pair<int, Rational>> t(acc.begin(), acc.end());
  return LaurentPoly::from_terms(t);
}

std::complex<double> MultiPoly::evaluate(const std::map<std::string, std::complex<double>>& point) const {
  std::vector<std::complex<double>> val(vars_.size());
  std::vector<bool> from_q(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end() && vars_[i] == kV) {
      it = point.find("q");
      from_q[i] = true;
    }
    if (it == point.end()) throw std::invalid_argument("evaluate: unbound variable " + vars_[i]);
    val[i] = it->second;
  }
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      int k = e[i];
      if (from_q[i]) {
        if (k % 2) throw std::invalid_argument("evaluate: q given but odd power of q^(1/2) present");
        k /= 2;
      }
      t *= std::pow(val[i], k);
    }
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      std::string f = vars_[i] == kV ? q_power_text(e[i])
                                     : vars_[i] + (e[i] == 1 ? "" : "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i])));
      mono += (mono.empty() ? "" : "*") + f;
    }
    Rational a = abs(c);
    std::string body = mono.empty() ? qgraph::to_string(a) : (a == 1 ? mono : qgraph::to_string(a) + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::optional<MultiPoly> compare_up_to_unit(const MultiPoly& p1, const MultiPoly& p2) {
  if (p1.is_zero() || p2.is_zero() || p1.size() != p2.size()) return std::nullopt;
  auto [m1, c1] = p1.leading_term();
  auto [m2, c2] = p2.leading_term();
  for (const auto& [name, k] : m2) m1[name] -= k;
  for (auto it = m1.begin(); it != m1.end();) it = it->second == 0 ? m1.erase(it) : std::next(it);
  MultiPoly u = MultiPoly::monomial(c1 / c2, m1);
  if (u * p2 == p1) return u;
  return std::nullopt;
}

MultiPoly resultant(const MultiPoly& p1, const MultiPoly& p2, const std::string& name) {
  auto cleared = [&](const MultiPoly& p) {
    int lo = p.min_degree(name);
    return lo < 0 ? p * MultiPoly::var(name, -lo) : p;
  };
  const MultiPoly a = cleared(p1), b = cleared(p2);
  const int m = a.degree(name), n = b.degree(name);
  if (m < 1 || n < 1) throw std::invalid_argument("resultant: both inputs need positive degree in " + name);
  auto ca = a.coefficients(name), cb = b.coefficients(name);
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> M(static_cast<std::size_t>(size), std::vector<MultiPoly>(static_cast<std::size_t>(size)));
  auto coef = [](const std::map<int, MultiPoly>& c, int k) {
    auto it = c.find(k);
    return it == c.end() ? MultiPoly{} : it->second;
  };
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = coef(ca, k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = coef(cb, k);
  // Fraction-free Bareiss elimination.
  int sign = 1;
  MultiPoly prev(1);
  const auto N = static_cast<std::size_t>(size);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < N && M[r][k].is_zero()) ++r;
      if (r == N) return {};
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        MultiPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto q = t.divide_exact(prev);
        if (!q) throw std::logic_error("resultant: inexact Bareiss step");
        M[i][j] = std::move(*q);
      }
      M[i][k] = MultiPoly{};
    }
    prev = M[k][k];
  }
  return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

}  // namespace qgraph
