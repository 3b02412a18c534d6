#pragma once

#include <vector>

#include "setopt/scalar.hpp"

namespace setopt {

/// Pointed solid polyhedral cone K = {y : A y >= 0} with a fixed interior
/// direction e. Immutable once built through validate().
template <class T>
class Cone {
 public:
  /// Rejects ZeroRow, NotPointed (rank A < m) and NotInterior (a_j^T e <= 0).
  static Cone validate(std::vector<Vec<T>> rows, Vec<T> e);

  std::size_t dim() const { return e_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Vec<T>>& rows() const { return rows_; }
  const Vec<T>& e() const { return e_; }
  /// a_j^T e, strictly positive.
  const Vec<T>& row_dot_e() const { return row_e_; }

  /// min_j a_j^T (to - from) / a_j^T e.
  ///   from <_K  to - eps e  iff eps <  margin
  ///   from <=_K to - eps e  iff eps <= margin
  T margin(const Vec<T>& from, const Vec<T>& to) const;

  /// A y, row by row.
  Vec<T> apply(const Vec<T>& y) const;

  bool leq(const Vec<T>& a, const Vec<T>& b) const;   // b - a in K
  bool lneq(const Vec<T>& a, const Vec<T>& b) const;  // b - a in K \ {0}
  bool less(const Vec<T>& a, const Vec<T>& b) const;  // b - a in int K

  /// v = A^T lambda for some lambda >= 0 (LP feasibility).
  bool in_dual_cone(const Vec<T>& v) const;

  template <class U>
  Cone<U> convert() const;

 private:
  Cone(std::vector<Vec<T>> rows, Vec<T> e, Vec<T> row_e)
      : rows_(std::move(rows)), e_(std::move(e)), row_e_(std::move(row_e)) {}

  template <class U>
  friend class Cone;

  std::vector<Vec<T>> rows_;
  Vec<T> e_;
  Vec<T> row_e_;
};

/// Radius r with eps e + r B inside int K: gamma * eps * min_j a_j^T e / |a_j|.
/// Throws InvalidArgument for eps <= 0 or gamma outside (0, 1).
double r_epsilon(const Cone<double>& cone, double eps, double gamma = 0.5);

template <class T>
std::size_t matrix_rank(std::vector<Vec<T>> rows);

}  // namespace setopt
