#pragma once

#include <nlohmann/json.hpp>

#include "setopt/instance.hpp"

namespace setopt {

inline nlohmann::json scalar_json(double x) { return x; }
inline nlohmann::json scalar_json(const Rational& q) { return number_to_json(q); }

template <class T>
nlohmann::json vector_json(const Vec<T>& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

template <class T>
nlohmann::json points_json(const std::vector<Vec<T>>& pts) {
  auto out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(vector_json(p));
  return out;
}

}  // namespace setopt
