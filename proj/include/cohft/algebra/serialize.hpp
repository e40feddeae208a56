#pragma once

#include <string>

#include <json.hpp>

#include "cohft/algebra/laurent.hpp"
#include "cohft/algebra/matrix.hpp"
#include "cohft/algebra/rational_function.hpp"
#include "cohft/algebra/series.hpp"

namespace cohft::algebra {

using Json = nlohmann::ordered_json;

/// {"n": "...", "d": "..."}
Json to_json(const BigRational& r);
BigRational rational_from_json(const Json& j);

/// {"vars": [...], "terms": [{"exp": [...], "c": rational}, ...]} in grlex order.
Json to_json(const Polynomial& p, const VariableSet& vars);
Polynomial polynomial_from_json(const Json& j, const VariableSet& vars);

/// {"num": polynomial, "den": polynomial, "text": "..."}
Json to_json(const RationalFunction& f, const VariableSet& vars);

/// {"exp": [...], "c": rational} list.
Json to_json(const LaurentSeries& s, const std::string& var);

template <class K, class F>
Json series_to_json(const TruncatedSeries<K>& s, const std::string& var, F&& coefficient_to_json) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(coefficient_to_json(c));
  Json j;
  j["var"] = var;
  j["order"] = s.is_exact() ? Json("exact") : Json(s.order());
  j["coeffs"] = std::move(coeffs);
  return j;
}

}  // namespace cohft::algebra
