#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace setopt {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
using Vec = std::vector<T>;

/// Absolute tolerance used by every float-mode comparison (pivots, feasibility,
/// order tests). Process wide; set it before starting any solver.
double float_tolerance();
void set_float_tolerance(double tau);

/// Comparison policy per scalar type: exact for Rational, tau-relaxed for double.
template <class T>
struct Num;

template <>
struct Num<double> {
  static double tol() { return float_tolerance(); }
  static bool pos(double x) { return x > tol(); }
  static bool neg(double x) { return x < -tol(); }
  static bool zero(double x) { return !pos(x) && !neg(x); }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.convert_to<double>(); }
};

template <>
struct Num<Rational> {
  static Rational tol() { return Rational(0); }
  static bool pos(const Rational& x) { return x > 0; }
  static bool neg(const Rational& x) { return x < 0; }
  static bool zero(const Rational& x) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <class T>
bool approx_equal(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!Num<T>::zero(a[i] - b[i])) return false;
  return true;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
Vec<T> convert_vec(const Vec<Rational>& v) {
  Vec<T> r;
  r.reserve(v.size());
  for (const auto& q : v) r.push_back(Num<T>::from_rational(q));
  return r;
}

Vec<double> to_double(const Vec<Rational>& v);

/// Parses "p/q", "n", or a decimal literal such as "-0.125" exactly.
Rational parse_rational(const std::string& text);

/// Exact rational value of the shortest decimal that round-trips to `x`.
Rational rational_from_double(double x);

/// "p/q" (or "n" for integers).
std::string format_rational(const Rational& q);

/// Terminating decimal when the denominator has only factors 2 and 5,
/// otherwise "p/q".
std::string format_decimal(const Rational& q);

}  // namespace setopt
