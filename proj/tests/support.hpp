#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "setopt/instance.hpp"
#include "setopt/scalar.hpp"

namespace fixture {

using setopt::Rational;
using setopt::Vec;

inline Rational q(const std::string& s) { return setopt::parse_rational(s); }

inline Vec<Rational> pt(std::initializer_list<const char*> xs) {
  Vec<Rational> v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

template <class T>
Vec<T> vec(std::initializer_list<double> xs) {
  Vec<T> v;
  for (double x : xs) v.push_back(setopt::Num<T>::from_rational(setopt::rational_from_double(x)));
  return v;
}

// Orthant instance in the plane with labels "0", "1", ... and finite images.
inline setopt::Instance finite_instance(const std::vector<std::vector<Vec<Rational>>>& images,
                                        bool polytope = false) {
  setopt::Instance inst;
  set_orthant_cone(inst, 2);
  for (std::size_t k = 0; k < images.size(); ++k) {
    inst.decisions.push_back({std::to_string(k), {Rational(static_cast<long>(k))}});
    inst.images.push_back(polytope ? setopt::ImageSet<Rational>::polytope(images[k])
                                   : setopt::ImageSet<Rational>::finite(images[k]));
  }
  return inst;
}

inline setopt::Cone<double> orthant2() {
  return setopt::Cone<double>::validate({{1, 0}, {0, 1}}, {1, 1});
}

inline setopt::Cone<Rational> orthant2q() {
  return setopt::Cone<Rational>::validate({{1, 0}, {0, 1}}, {1, 1});
}

}  // namespace fixture
