#pragma once

// Dense two-phase simplex for the small membership systems that come up when
// comparing polytopes: convex multipliers, cone slacks, a free shift.

#include <optional>
#include <vector>

#include "setopt/scalar.hpp"

namespace setopt::lp {

template <class T>
struct Row {
  Vec<T> coeffs;
  T rhs;
};

/// maximize objective^T x  s.t.  eq rows (a^T x = b), ge rows (a^T x >= b),
/// x_j >= lower[j] when set, free otherwise.
template <class T>
struct LinearProgram {
  Vec<T> objective;
  std::vector<Row<T>> equalities;
  std::vector<Row<T>> inequalities;
  std::vector<std::optional<T>> lower;

  explicit LinearProgram(std::size_t num_vars = 0)
      : objective(num_vars, T(0)), lower(num_vars) {}

  std::size_t num_vars() const { return objective.size(); }

  void add_eq(Vec<T> a, T b) { equalities.push_back({std::move(a), std::move(b)}); }
  void add_ge(Vec<T> a, T b) { inequalities.push_back({std::move(a), std::move(b)}); }
  void add_le(Vec<T> a, T b) {
    for (auto& v : a) v = -v;
    inequalities.push_back({std::move(a), -b});
  }

  /// Throws DimensionMismatch / InvalidArgument on malformed input.
  void validate() const;
};

struct Options {
  /// Only consulted for double programs; rational programs pivot exactly.
  double tol = -1.0;  // < 0: use float_tolerance()
  int max_iterations = 10000;
};

template <class T>
struct Feasibility {
  bool feasible = false;
  Vec<T> point;
  T phase_one_value = T(0);  // sum of artificials at the phase-one optimum
};

enum class Status { Optimal, Unbounded, Infeasible };

template <class T>
struct Outcome {
  Status status = Status::Infeasible;
  T value = T(0);
  Vec<T> point;

  bool optimal() const { return status == Status::Optimal; }
};

template <class T>
Feasibility<T> feasible(const LinearProgram<T>& prog, const Options& opts = {});

template <class T>
Outcome<T> maximize(const LinearProgram<T>& prog, const Options& opts = {});

/// Max violation of any constraint at `x` (0 when satisfied).
template <class T>
T max_violation(const LinearProgram<T>& prog, const Vec<T>& x);

}  // namespace setopt::lp
