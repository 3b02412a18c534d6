#include "setopt/cone.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "setopt/error.hpp"
#include "setopt/lp.hpp"

namespace setopt {

template <class T>
std::size_t matrix_rank(std::vector<Vec<T>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      auto mag = [](const T& v) { return v < 0 ? T(-v) : v; };
      if (mag(rows[r][c]) > mag(rows[pivot][c])) pivot = r;
    }
    if (Num<T>::zero(rows[pivot][c])) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const T f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

template <class T>
Cone<T> Cone<T>::validate(std::vector<Vec<T>> rows, Vec<T> e) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "cone needs at least one row");
  const std::size_t m = e.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "cone dimension is zero");
  Vec<T> row_e;
  row_e.reserve(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != m) {
      throw Error(ErrorCode::DimMismatch, "cone row " + std::to_string(j) + " has " +
                                              std::to_string(rows[j].size()) +
                                              " entries, e has " + std::to_string(m));
    }
    bool all_zero = true;
    for (const auto& v : rows[j]) all_zero = all_zero && Num<T>::zero(v);
    if (all_zero) throw Error(ErrorCode::ZeroRow, "cone row " + std::to_string(j) + " is zero");
  }
  if (matrix_rank(rows) < m) {
    throw Error(ErrorCode::NotPointed, "cone rows have rank below " + std::to_string(m));
  }
  for (std::size_t j = 0; j < rows.size(); ++j) {
    T ae = dot(rows[j], e);
    if (!Num<T>::pos(ae)) {
      throw Error(ErrorCode::NotInterior,
                  "a_" + std::to_string(j) + "^T e is not positive; e is not interior");
    }
    row_e.push_back(std::move(ae));
  }
  return Cone(std::move(rows), std::move(e), std::move(row_e));
}

template <class T>
T Cone<T>::margin(const Vec<T>& from, const Vec<T>& to) const {
  const std::size_t m = dim();
  T best = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    T s = 0;
    for (std::size_t i = 0; i < m; ++i) s += rows_[j][i] * (to[i] - from[i]);
    s /= row_e_[j];
    if (j == 0 || s < best) best = s;
  }
  return best;
}

template <class T>
Vec<T> Cone<T>::apply(const Vec<T>& y) const {
  Vec<T> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(dot(row, y));
  return out;
}

template <class T>
bool Cone<T>::leq(const Vec<T>& a, const Vec<T>& b) const {
  return !Num<T>::neg(margin(a, b));
}

template <class T>
bool Cone<T>::lneq(const Vec<T>& a, const Vec<T>& b) const {
  return leq(a, b) && !approx_equal(a, b);
}

template <class T>
bool Cone<T>::less(const Vec<T>& a, const Vec<T>& b) const {
  return Num<T>::pos(margin(a, b));
}

template <class T>
bool Cone<T>::in_dual_cone(const Vec<T>& v) const {
  const std::size_t rows = rows_.size();
  lp::LinearProgram<T> prog(rows);
  for (std::size_t j = 0; j < rows; ++j) prog.lower[j] = T(0);
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec<T> coeffs(rows);
    for (std::size_t j = 0; j < rows; ++j) coeffs[j] = rows_[j][i];
    prog.add_eq(std::move(coeffs), v[i]);
  }
  return lp::feasible(prog).feasible;
}

template <class T>
template <class U>
Cone<U> Cone<T>::convert() const {
  auto conv = [](const Vec<T>& v) {
    Vec<U> out;
    out.reserve(v.size());
    for (const auto& x : v) {
      if constexpr (std::is_same_v<T, U>) {
        out.push_back(x);
      } else {
        out.push_back(Num<T>::to_double(x));
      }
    }
    return out;
  };
  std::vector<Vec<U>> rows;
  for (const auto& r : rows_) rows.push_back(conv(r));
  return Cone<U>(std::move(rows), conv(e_), conv(row_e_));
}

double r_epsilon(const Cone<double>& cone, double eps, double gamma) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "r_epsilon needs eps > 0");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "r_epsilon needs gamma in (0, 1)");
  }
  double ratio = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cone.num_rows(); ++j) {
    double norm = 0;
    for (double a : cone.rows()[j]) norm += a * a;
    ratio = std::min(ratio, cone.row_dot_e()[j] / std::sqrt(norm));
  }
  return gamma * eps * ratio;
}

template class Cone<double>;
template class Cone<Rational>;
template Cone<double> Cone<Rational>::convert<double>() const;
template Cone<double> Cone<double>::convert<double>() const;
template Cone<Rational> Cone<Rational>::convert<Rational>() const;
template std::size_t matrix_rank(std::vector<Vec<double>>);
template std::size_t matrix_rank(std::vector<Vec<Rational>>);

}  // namespace setopt
