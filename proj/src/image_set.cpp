#include "setopt/image_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "setopt/error.hpp"
#include "setopt/hitting_set.hpp"
#include "setopt/lp.hpp"

namespace setopt {

namespace {

template <class T>
void require_finite(const ImageSet<T>& a, const char* op) {
  if (!a.is_finite()) {
    throw Error(ErrorCode::Unsupported, std::string(op) + " needs a finite image");
  }
}

// Variables: lambda_0..lambda_{k-1} >= 0, then the optional free shift t.
// Rows: A (target - t e - V lambda) >= 0 and sum lambda = 1.
template <class T>
lp::LinearProgram<T> membership_program(const Vec<T>& target, const ImageSet<T>& poly,
                                        const Cone<T>& cone, bool with_shift) {
  const std::size_t k = poly.size();
  const std::size_t n = k + (with_shift ? 1 : 0);
  lp::LinearProgram<T> prog(n);
  for (std::size_t i = 0; i < k; ++i) prog.lower[i] = T(0);
  for (std::size_t j = 0; j < cone.num_rows(); ++j) {
    const auto& a = cone.rows()[j];
    Vec<T> coeffs(n);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = -dot(a, poly.points[i]);
    if (with_shift) coeffs[k] = -cone.row_dot_e()[j];
    prog.add_ge(std::move(coeffs), T(-dot(a, target)));
  }
  Vec<T> ones(n, T(0));
  for (std::size_t i = 0; i < k; ++i) ones[i] = T(1);
  prog.add_eq(std::move(ones), T(1));
  return prog;
}

}  // namespace

template <class T>
std::vector<std::size_t> distinct_points(const std::vector<Vec<T>>& pts) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dup = false;
    for (std::size_t j : keep) dup = dup || approx_equal(pts[i], pts[j]);
    if (!dup) keep.push_back(i);
  }
  return keep;
}

template <class T>
std::vector<std::size_t> min_elements(const ImageSet<T>& a, const Cone<T>& cone, bool weak) {
  require_finite(a, "min_elements");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < a.size() && !dominated; ++j) {
      if (weak) {
        dominated = cone.less(a.points[j], a.points[i]);
      } else {
        dominated = cone.lneq(a.points[j], a.points[i]);
      }
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

template <class T>
NonzeroDomination<T> nonzero_domination(const Vec<T>& target, const ImageSet<T>& a,
                                        const Cone<T>& cone) {
  NonzeroDomination<T> out;
  if (a.is_finite()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (cone.lneq(a.points[i], target)) {
        out.holds = true;
        out.index = i;
        return out;
      }
    }
    return out;
  }
  // Pointedness (full row rank of A) makes zero total slack force the zero
  // cone element, so a positive optimum is exactly membership in A + K \ {0}.
  auto prog = membership_program(target, a, cone, false);
  for (std::size_t j = 0; j < cone.num_rows(); ++j) {
    const auto& row = prog.inequalities[j];
    for (std::size_t i = 0; i < a.size(); ++i) prog.objective[i] += row.coeffs[i];
  }
  const auto res = lp::maximize(prog);
  if (!res.optimal()) return out;
  T total = res.value;
  for (std::size_t j = 0; j < cone.num_rows(); ++j) total -= prog.inequalities[j].rhs;
  out.holds = Num<T>::pos(total);
  if (out.holds) out.lambda = res.point;
  return out;
}

template <class T>
std::vector<std::size_t> minimal_vertices(const ImageSet<T>& a, const Cone<T>& cone) {
  if (a.is_finite()) return min_elements(a, cone, false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!nonzero_domination(a.points[i], a, cone).holds) out.push_back(i);
  return out;
}

template <class T>
PointMarginWitness<T> point_margin_witness(const Vec<T>& b, const ImageSet<T>& a,
                                           const Cone<T>& cone) {
  if (a.size() == 0) throw Error(ErrorCode::EmptyImage, "point_margin on an empty image");
  PointMarginWitness<T> out;
  if (a.is_finite()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      T m = cone.margin(a.points[i], b);
      if (i == 0 || m > out.value) {
        out.value = std::move(m);
        out.index = i;
      }
    }
    return out;
  }
  auto prog = membership_program(b, a, cone, true);
  prog.objective[a.size()] = T(1);
  const auto res = lp::maximize(prog);
  if (!res.optimal()) {
    throw Error(ErrorCode::InvalidArgument,
                "polytope margin LP not optimal (numerically degenerate input)");
  }
  out.value = res.value;
  out.lambda.assign(res.point.begin(), res.point.begin() + a.size());
  return out;
}

template <class T>
T point_margin(const Vec<T>& b, const ImageSet<T>& a, const Cone<T>& cone) {
  return point_margin_witness(b, a, cone).value;
}

template <class T>
std::vector<std::size_t> prune_to_extreme(const std::vector<Vec<T>>& vertices) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyImage, "prune_to_extreme on empty list");
  const auto distinct = distinct_points(vertices);
  if (distinct.size() == 1) return distinct;
  const std::size_t m = vertices.front().size();
  std::vector<std::size_t> out;
  for (std::size_t idx : distinct) {
    std::vector<std::size_t> others;
    for (std::size_t j : distinct)
      if (j != idx) others.push_back(j);
    lp::LinearProgram<T> prog(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) prog.lower[k] = T(0);
    for (std::size_t c = 0; c < m; ++c) {
      Vec<T> coeffs(others.size());
      for (std::size_t k = 0; k < others.size(); ++k) coeffs[k] = vertices[others[k]][c];
      prog.add_eq(std::move(coeffs), vertices[idx][c]);
    }
    prog.add_eq(Vec<T>(others.size(), T(1)), T(1));
    if (!lp::feasible(prog).feasible) out.push_back(idx);
  }
  return out;
}

template <class T>
bool domination_check(const ImageSet<T>& a, const Cone<T>& cone) {
  const auto mins = min_elements(a, cone, false);
  if (mins.empty()) return false;
  for (const auto& y : a.points) {
    bool covered = false;
    for (std::size_t i : mins) covered = covered || cone.leq(a.points[i], y);
    if (!covered) return false;
  }
  return true;
}

double euclidean(const Vec<double>& a, const Vec<double>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "points of different dimension");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

namespace {
double directed(const std::vector<Vec<double>>& from, const std::vector<Vec<double>>& to) {
  double worst = 0;
  for (const auto& p : from) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& q : to) nearest = std::min(nearest, euclidean(p, q));
    worst = std::max(worst, nearest);
  }
  return worst;
}
}  // namespace

double hausdorff(const std::vector<Vec<double>>& a, const std::vector<Vec<double>>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyImage, "hausdorff of an empty set");
  if (a.front().size() != b.front().size()) {
    throw Error(ErrorCode::DimMismatch, "hausdorff between different dimensions");
  }
  return std::max(directed(a, b), directed(b, a));
}

Covering covering_number_internal(const std::vector<Vec<double>>& a, double radius,
                                  std::size_t exact_limit) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "covering radius must be positive");
  if (a.empty()) throw Error(ErrorCode::EmptyImage, "covering of an empty set");
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> near(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) near[i][j] = euclidean(a[i], a[j]) <= radius;

  Covering out;
  if (n <= std::min<std::size_t>(exact_limit, 64)) {
    // Point j must be hit by one of the centers within radius of it.
    std::vector<Mask> family(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (near[i][j]) family[j] |= Mask(1) << i;
    const auto hs = min_hitting_set(static_cast<int>(n), family);
    for (std::size_t i = 0; i < n; ++i)
      if (hs->members & (Mask(1) << i)) out.centers.push_back(i);
    out.exact = true;
  } else {
    std::vector<bool> covered(n, false), chosen(n, false);
    std::size_t remaining = n;
    while (remaining > 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        std::size_t gain = 0;
        for (std::size_t j = 0; j < n; ++j) gain += (!covered[j] && near[i][j]) ? 1 : 0;
        if (gain > 0 && gain >= best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      chosen[best] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!covered[j] && near[best][j]) {
          covered[j] = true;
          --remaining;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) out.centers.push_back(i);
    out.exact = false;
  }
  out.count = out.centers.size();
  return out;
}

#define SETOPT_INSTANTIATE(T)                                                                   \
  template std::vector<std::size_t> distinct_points(const std::vector<Vec<T>>&);                \
  template std::vector<std::size_t> min_elements(const ImageSet<T>&, const Cone<T>&, bool);     \
  template std::vector<std::size_t> minimal_vertices(const ImageSet<T>&, const Cone<T>&);       \
  template NonzeroDomination<T> nonzero_domination(const Vec<T>&, const ImageSet<T>&,           \
                                                   const Cone<T>&);                             \
  template PointMarginWitness<T> point_margin_witness(const Vec<T>&, const ImageSet<T>&,        \
                                                      const Cone<T>&);                          \
  template T point_margin(const Vec<T>&, const ImageSet<T>&, const Cone<T>&);                   \
  template std::vector<std::size_t> prune_to_extreme(const std::vector<Vec<T>>&);               \
  template bool domination_check(const ImageSet<T>&, const Cone<T>&);

SETOPT_INSTANTIATE(double)
SETOPT_INSTANTIATE(Rational)
#undef SETOPT_INSTANTIATE

}  // namespace setopt
