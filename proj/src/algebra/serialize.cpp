#include "cohft/algebra/serialize.hpp"

namespace cohft::algebra {

Json to_json(const BigRational& r) {
  Json j;
  j["n"] = r.get_num().get_str();
  j["d"] = r.get_den().get_str();
  return j;
}

BigRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (!j.is_object() || !j.contains("n") || !j.contains("d")) throw AlgebraError("malformed rational");
  return parse_rational(j.at("n").get<std::string>() + "/" + j.at("d").get<std::string>());
}

Json to_json(const Polynomial& p, const VariableSet& vars) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(t.exponents[i]);
    terms.push_back({{"exp", e}, {"c", to_json(t.coefficient)}});
  }
  return {{"vars", vars.names()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, const VariableSet& vars) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Exponents e{};
    const auto& ex = t.at("exp");
    if (ex.size() != vars.size()) throw AlgebraError("exponent vector has wrong length");
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = ex[i].get<std::uint16_t>();
    terms.push_back({e, rational_from_json(t.at("c"))});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json to_json(const RationalFunction& f, const VariableSet& vars) {
  return {{"num", to_json(f.numerator(), vars)}, {"den", to_json(f.denominator(), vars)}, {"text", to_string(f, vars)}};
}

Json to_json(const LaurentSeries& s, const std::string& var) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"c", to_json(c)}});
  Json j;
  j["var"] = var;
  j["precision"] = s.is_exact() ? Json("exact") : Json(s.precision());
  j["terms"] = terms;
  return j;
}

}  // namespace cohft::algebra
