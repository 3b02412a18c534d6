#include "setopt/lp.hpp"

#include <cmath>
#include <string>

#include "setopt/error.hpp"

namespace setopt::lp {

namespace {

template <class T>
struct Cmp {
  T tol;
  bool pos(const T& x) const { return x > tol; }
  bool neg(const T& x) const { return x < -tol; }
  bool nonzero(const T& x) const { return pos(x) || neg(x); }
};

template <class T>
Cmp<T> make_cmp(const Options& opts) {
  if constexpr (std::is_same_v<T, double>) {
    return {opts.tol >= 0 ? opts.tol : float_tolerance()};
  } else {
    return {T(0)};
  }
}

template <class T>
bool finite_value(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(x);
  } else {
    return true;
  }
}

// Column layout of the standard-form problem built from a LinearProgram.
struct VarMap {
  int pos = -1;  // column of u (or u+)
  int neg = -1;  // column of u- for free variables
};

template <class T>
class Tableau {
 public:
  Tableau(const LinearProgram<T>& prog, const Options& opts)
      : prog_(prog), cmp_(make_cmp<T>(opts)), max_iter_(opts.max_iterations) {
    build();
  }

  // Phase one; returns the minimal sum of artificials.
  T phase_one() {
    Vec<T> cost(cols_, T(0));
    for (int j = art_begin_; j < cols_; ++j) cost[j] = T(-1);
    run(cost, cols_);
    T sum = 0;
    for (int r = 0; r < rows_; ++r)
      if (basis_[r] >= art_begin_) sum += rhs(r);
    return sum;
  }

  void drive_out_artificials() {
    for (int r = 0; r < rows_;) {
      if (basis_[r] < art_begin_) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art_begin_; ++j) {
        if (cmp_.nonzero(at(r, j))) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(r, col);
        ++r;
      } else {
        remove_row(r);
      }
    }
  }

  // Phase two on the original objective; false when unbounded.
  bool phase_two() {
    Vec<T> cost(cols_, T(0));
    for (std::size_t j = 0; j < map_.size(); ++j) {
      const T& c = prog_.objective[j];
      cost[map_[j].pos] = c;
      if (map_[j].neg >= 0) cost[map_[j].neg] = -c;
    }
    return run(cost, art_begin_);
  }

  Vec<T> solution() const {
    Vec<T> std_val(cols_, T(0));
    for (int r = 0; r < rows_; ++r) std_val[basis_[r]] = rhs(r);
    Vec<T> x(map_.size());
    for (std::size_t j = 0; j < map_.size(); ++j) {
      T v = std_val[map_[j].pos];
      if (map_[j].neg >= 0) v -= std_val[map_[j].neg];
      if (prog_.lower[j]) v += *prog_.lower[j];
      x[j] = v;
    }
    return x;
  }

 private:
  T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * width_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * width_ + c]; }
  const T& rhs(int r) const { return at(r, cols_); }

  void build() {
    const std::size_t n = prog_.num_vars();
    map_.resize(n);
    int col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      map_[j].pos = col++;
      if (!prog_.lower[j]) map_[j].neg = col++;
    }
    const int num_eq = static_cast<int>(prog_.equalities.size());
    const int num_ge = static_cast<int>(prog_.inequalities.size());
    const int surplus_begin = col;
    col += num_ge;
    art_begin_ = col;
    rows_ = num_eq + num_ge;
    cols_ = art_begin_ + rows_;
    width_ = static_cast<std::size_t>(cols_) + 1;
    data_.assign(static_cast<std::size_t>(rows_) * width_, T(0));
    basis_.resize(rows_);

    auto fill = [&](int r, const Row<T>& row) {
      T b = row.rhs;
      for (std::size_t j = 0; j < n; ++j) {
        const T& a = row.coeffs[j];
        if (a == 0) continue;
        at(r, map_[j].pos) = a;
        if (map_[j].neg >= 0) at(r, map_[j].neg) = -a;
        if (prog_.lower[j]) b -= a * *prog_.lower[j];
      }
      at(r, cols_) = b;
    };
    for (int i = 0; i < num_eq; ++i) fill(i, prog_.equalities[i]);
    for (int i = 0; i < num_ge; ++i) {
      fill(num_eq + i, prog_.inequalities[i]);
      at(num_eq + i, surplus_begin + i) = T(-1);
    }
    for (int r = 0; r < rows_; ++r) {
      if (at(r, cols_) < 0) {
        for (int c = 0; c <= cols_; ++c) at(r, c) = -at(r, c);
      }
      at(r, art_begin_ + r) = T(1);
      basis_[r] = art_begin_ + r;
    }
  }

  void pivot(int pr, int pc) {
    const T inv = T(1) / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = T(1);
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const T f = at(r, pc);
      if (f == 0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = T(0);
    }
    basis_[pr] = pc;
  }

  void remove_row(int r) {
    const int last = rows_ - 1;
    if (r != last) {
      for (int c = 0; c <= cols_; ++c) at(r, c) = at(last, c);
      basis_[r] = basis_[last];
    }
    --rows_;
    basis_.pop_back();
    data_.resize(static_cast<std::size_t>(rows_) * width_);
  }

  // Bland's rule on columns [0, allowed). Returns false when unbounded.
  bool run(const Vec<T>& cost, int allowed) {
    for (;;) {
      if (++iterations_ > max_iter_) {
        throw Error(ErrorCode::IterationCap,
                    "simplex exceeded " + std::to_string(max_iter_) + " pivots");
      }
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        T reduced = cost[j];
        for (int r = 0; r < rows_; ++r) reduced -= cost[basis_[r]] * at(r, j);
        if (cmp_.pos(reduced)) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      T best = 0;
      for (int r = 0; r < rows_; ++r) {
        const T& a = at(r, enter);
        if (!cmp_.pos(a)) continue;
        T ratio = rhs(r) / a;
        if (leave < 0 || ratio < best - cmp_.tol ||
            (!(best < ratio - cmp_.tol) && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  const LinearProgram<T>& prog_;
  Cmp<T> cmp_;
  int max_iter_;
  int iterations_ = 0;
  std::vector<VarMap> map_;
  std::vector<T> data_;
  std::vector<int> basis_;
  std::size_t width_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  int art_begin_ = 0;
};

template <class T>
void check_row(const Row<T>& row, std::size_t n, const char* what) {
  if (row.coeffs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " row has " + std::to_string(row.coeffs.size()) +
                    " coefficients, expected " + std::to_string(n));
  }
  for (const auto& a : row.coeffs)
    if (!finite_value(a)) throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
  if (!finite_value(row.rhs)) throw Error(ErrorCode::InvalidArgument, "non-finite right-hand side");
}

}  // namespace

template <class T>
void LinearProgram<T>::validate() const {
  const std::size_t n = num_vars();
  if (lower.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "lower-bound vector size differs from variable count");
  }
  for (const auto& c : objective)
    if (!finite_value(c)) throw Error(ErrorCode::InvalidArgument, "non-finite objective coefficient");
  for (const auto& l : lower)
    if (l && !finite_value(*l)) throw Error(ErrorCode::InvalidArgument, "non-finite lower bound");
  for (const auto& row : equalities) check_row(row, n, "equality");
  for (const auto& row : inequalities) check_row(row, n, "inequality");
}

template <class T>
Feasibility<T> feasible(const LinearProgram<T>& prog, const Options& opts) {
  prog.validate();
  Tableau<T> tab(prog, opts);
  Feasibility<T> out;
  out.phase_one_value = tab.phase_one();
  const auto cmp = make_cmp<T>(opts);
  if (cmp.pos(out.phase_one_value)) return out;
  tab.drive_out_artificials();
  out.feasible = true;
  out.point = tab.solution();
  return out;
}

template <class T>
Outcome<T> maximize(const LinearProgram<T>& prog, const Options& opts) {
  prog.validate();
  Tableau<T> tab(prog, opts);
  Outcome<T> out;
  const auto cmp = make_cmp<T>(opts);
  if (cmp.pos(tab.phase_one())) {
    out.status = Status::Infeasible;
    return out;
  }
  tab.drive_out_artificials();
  if (!tab.phase_two()) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.point = tab.solution();
  out.value = dot(prog.objective, out.point);
  return out;
}

template <class T>
T max_violation(const LinearProgram<T>& prog, const Vec<T>& x) {
  T worst = 0;
  auto bump = [&](const T& v) {
    if (v > worst) worst = v;
  };
  for (const auto& row : prog.equalities) {
    T d = dot(row.coeffs, x) - row.rhs;
    bump(d < 0 ? T(-d) : d);
  }
  for (const auto& row : prog.inequalities) bump(row.rhs - dot(row.coeffs, x));
  for (std::size_t j = 0; j < prog.num_vars(); ++j)
    if (prog.lower[j]) bump(*prog.lower[j] - x[j]);
  return worst;
}

template struct LinearProgram<double>;
template struct LinearProgram<Rational>;
template Feasibility<double> feasible(const LinearProgram<double>&, const Options&);
template Feasibility<Rational> feasible(const LinearProgram<Rational>&, const Options&);
template Outcome<double> maximize(const LinearProgram<double>&, const Options&);
template Outcome<Rational> maximize(const LinearProgram<Rational>&, const Options&);
template double max_violation(const LinearProgram<double>&, const Vec<double>&);
template Rational max_violation(const LinearProgram<Rational>&, const Vec<Rational>&);

}  // namespace setopt::lp
