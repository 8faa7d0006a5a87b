#include "qgraph/qalg/format.hpp"

#include <stdexcept>

namespace qgraph {

std::string q_power_text(int e) {
  if (e == 0) return "";
  if (e % 2) return "q^(" + std::to_string(e) + "/2)";
  if (e == 2) return "q";
  return "q^" + (e < 0 ? "(" + std::to_string(e / 2) + ")" : std::to_string(e / 2));
}

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    std::string mono = q_power_text(e);
    std::string body = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string to_text(const LaurentRat& r) {
  if (r.is_laurent_poly()) return to_text(r.num());
  return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, to_string(c)});
  return {{"variable", "v"}, {"meaning", "q^(1/2)"}, {"terms", terms}};
}

nlohmann::json to_json(const LaurentRat& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, to_string(c)});
  return {{"variables", p.variables()}, {"terms", terms}};
}

LaurentPoly laurent_poly_from_json(const nlohmann::json& j) {
  try {
    if (j.at("variable") != "v") throw std::invalid_argument("LaurentPoly JSON: variable must be \"v\"");
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) throw std::invalid_argument("LaurentPoly JSON: term must be [e, \"p/q\"]");
      terms.emplace_back(t[0].get<int>(), parse_rational(t[1].get<std::string>()));
    }
    return LaurentPoly::from_terms(terms);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("LaurentPoly JSON: ") + e.what());
  }
}

LaurentRat laurent_rat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("LaurentRat JSON: expected {\"num\":..., \"den\":...}");
  return LaurentRat(laurent_poly_from_json(j["num"]), laurent_poly_from_json(j["den"]));
}

MultiPoly multi_poly_from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("variables").get<std::vector<std::string>>();
    MultiPoly::TermMap terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at(0).get<std::vector<int>>();
      if (e.size() != vars.size()) throw std::invalid_argument("MultiPoly JSON: exponent length mismatch");
      terms[e] += parse_rational(t.at(1).get<std::string>());
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("MultiPoly JSON: ") + e.what());
  }
}

}  // namespace qgraph
