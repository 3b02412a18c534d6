#pragma once

// Projected solutions of the stacked vector problem VP_p: decisions x for which
// some tuple (y^1, ..., y^p) of points of F(x) is (weakly) minimal under the
// product cone K^p, with every component shifted by eps e.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "setopt/hitting_set.hpp"
#include "setopt/solver_direct.hpp"

namespace setopt {

enum class VpKind { Weak, Min };

const char* to_string(VpKind k);

struct VpOptions {
  Exec exec = Exec::Parallel;
  /// Min: cap on sum_{k <= p} C(|M|, k) subsets examined per decision.
  std::uint64_t subset_cap = 2'000'000;
  /// Weak: cap on the candidate pool size.
  std::size_t weak_pool_cap = 24;
  /// brute_force_vp: cap on |F(x)|^p per decision.
  std::uint64_t tuple_cap = 2'000'000;
};

/// Minimal elements (finite image) or minimal vertices (polytope) of F(x).
template <class T>
struct CandidatePool {
  std::vector<std::size_t> indices;  // into the problem image
  std::vector<Vec<T>> points;
  bool polytope = false;

  std::size_t size() const { return points.size(); }
  /// Whether a pool search at budget p decides membership exactly.
  bool complete_at(int p) const { return !polytope || p >= static_cast<int>(points.size()); }
};

template <class T>
CandidatePool<T> candidate_pool(const Problem<T>& prob, std::size_t x);

/// Cached comparisons of the pool of x against every decision x'.
template <class T>
struct DominationTable {
  CandidatePool<T> pool;
  /// margins[x'][i] = point_margin(pool_i, F(x')), the largest eps with
  /// pool_i - eps e in F(x') + K.
  std::vector<std::vector<T>> margins;

  /// D_eps(x') as a mask over the pool: pool_i - eps e in F(x') + int K.
  std::vector<Mask> strict_masks(const T& eps) const;
  /// pool_i - eps e in F(x') + K.
  std::vector<Mask> weak_masks(const T& eps) const;
};

template <class T>
DominationTable<T> domination_table(const Problem<T>& prob, std::size_t x);

/// pool_i - eps e in F(x') + K \ {0}, per x' (not a threshold on margins).
template <class T>
std::vector<Mask> strong_masks(const Problem<T>& prob, const CandidatePool<T>& pool, const T& eps);

enum class Verdict { Member, Dominated, Excluded };

const char* to_string(Verdict v);

template <class T>
struct TupleCertificate {
  std::string label;
  std::vector<Vec<T>> tuple;
  Verdict verdict = Verdict::Excluded;
  /// Member, per x': Weak - index of a component outside D_eps(x');
  /// Min - index of a component not weakly dominated by F(x'), or -1 when no
  /// component is dominated through K \ {0}.
  std::vector<int> surviving;
  /// Dominated: the single decision that strictly dominates every pool point,
  /// with one witness point of F(by) per tuple component.
  std::size_t by = 0;
  std::vector<Vec<T>> witnesses;
  /// Excluded: smallest budget at which x becomes a member, when known
  /// (weak kind); 0 otherwise.
  int required_p = 0;
};

template <class T>
struct VpReport {
  VpKind kind = VpKind::Weak;
  int p = 1;
  T eps = T(0);
  std::vector<std::string> labels;
  std::vector<bool> member;
  std::vector<TupleCertificate<T>> certificates;  // one per decision
  /// Some non-member came from a polytope pool searched below its size.
  bool incomplete = false;

  std::vector<std::string> members() const;
  bool is_member(const std::string& label) const;
};

/// Membership of every decision in the projected (weak) solution set of VP_p.
template <class T>
VpReport<T> membership_vp(const Problem<T>& prob, int p, const T& eps, VpKind kind,
                          const VpOptions& opts = {});

template <class T>
struct MinimalP {
  bool never = false;  // no budget makes x a member
  int p_star = 0;
  TupleCertificate<T> witness;
  /// Polytope pool: p_star is exact among vertex tuples only.
  bool incomplete = false;
};

template <class T>
MinimalP<T> minimal_p(const Problem<T>& prob, std::size_t x, const T& eps, VpKind kind,
                      const VpOptions& opts = {});

/// Internal covering number of F(x) at radius r_eps / 2: a budget at which x is
/// an eps-weak VP_p solution whenever it is a weak solution of the set problem.
template <class T>
int covering_p_bound(const Problem<T>& prob, std::size_t x, double eps, double gamma = 0.5);

/// max of covering_p_bound over the weak solutions (eps = 0) of the set problem.
template <class T>
int covering_p_bound_global(const Problem<T>& prob, double eps, double gamma = 0.5);

template <class T>
struct WeightedSumSolution {
  std::string label;
  std::vector<Vec<T>> tuple;
};

template <class T>
struct WeightedSumResult {
  T value = T(0);
  std::vector<T> inner;  // per decision: sum_i min_{y in F(x)} w_i^T y
  std::vector<WeightedSumSolution<T>> solutions;
};

/// Minimizes sum_i w_i^T y^i over x and y^i in F(x). Every w_i must lie in the
/// dual cone, not all zero.
template <class T>
WeightedSumResult<T> solve_weighted_sum(const Problem<T>& prob, const std::vector<Vec<T>>& w);

/// Definition-level oracle: every p-tuple of the full finite image against the
/// product-cone comparisons, evaluated point by point.
template <class T>
VpReport<T> brute_force_vp(const Problem<T>& prob, int p, const T& eps, VpKind kind,
                           const VpOptions& opts = {});

/// Re-checks a certificate from scratch against the problem.
template <class T>
bool verify_tuple_certificate(const Problem<T>& prob, const TupleCertificate<T>& cert,
                              VpKind kind, const T& eps);

template <class T>
nlohmann::json vp_report_to_json(const VpReport<T>& rep);

template <class T>
nlohmann::json certificate_to_json(const TupleCertificate<T>& cert,
                                   const std::vector<std::string>& labels);

}  // namespace setopt
