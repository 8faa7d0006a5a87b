#include "qgraph/qalg/rational.hpp"

#include <stdexcept>

namespace qgraph {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(n) || !is_integer_literal(d) || d.front() == '-' || d.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer num(std::string(n.front() == '+' ? n.substr(1) : n));
  Integer den{std::string(d)};
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace qgraph
