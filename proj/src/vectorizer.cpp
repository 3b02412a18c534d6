#include "setopt/vectorizer.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "setopt/error.hpp"
#include "setopt/json_util.hpp"

namespace setopt {

const char* to_string(VpKind k) { return k == VpKind::Weak ? "weak" : "min"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::Dominated: return "dominated";
    case Verdict::Excluded: return "excluded";
  }
  return "?";
}

template <class T>
std::vector<std::string> VpReport<T>::members() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (member[k]) out.push_back(labels[k]);
  return out;
}

template <class T>
bool VpReport<T>::is_member(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return member[k];
  throw Error(ErrorCode::UnknownLabel, "no decision labeled '" + label + "'");
}

// ---- pools and tables -------------------------------------------------------

template <class T>
CandidatePool<T> candidate_pool(const Problem<T>& prob, std::size_t x) {
  const auto& img = prob.images.at(x);
  CandidatePool<T> pool;
  pool.polytope = !img.is_finite();
  pool.indices = minimal_vertices(img, prob.cone);
  for (std::size_t i : pool.indices) pool.points.push_back(img.points[i]);
  return pool;
}

template <class T>
DominationTable<T> domination_table(const Problem<T>& prob, std::size_t x) {
  DominationTable<T> table;
  table.pool = candidate_pool(prob, x);
  table.margins.resize(prob.size());
  for (std::size_t o = 0; o < prob.size(); ++o) {
    for (const auto& y : table.pool.points)
      table.margins[o].push_back(point_margin(y, prob.images[o], prob.cone));
  }
  return table;
}

namespace {

void check_pool_width(std::size_t size) {
  if (size > 64) throw Error(ErrorCode::CapExceeded, "candidate pool wider than 64 points");
}

template <class T>
Vec<T> shift_down(const Vec<T>& y, const Vec<T>& e, const T& eps) {
  Vec<T> out(y.size());
  for (std::size_t c = 0; c < y.size(); ++c) out[c] = y[c] - eps * e[c];
  return out;
}

}  // namespace

template <class T>
std::vector<Mask> DominationTable<T>::strict_masks(const T& eps) const {
  check_pool_width(pool.size());
  std::vector<Mask> out(margins.size(), 0);
  for (std::size_t o = 0; o < margins.size(); ++o)
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (Num<T>::pos(margins[o][i] - eps)) out[o] |= Mask(1) << i;
  return out;
}

template <class T>
std::vector<Mask> DominationTable<T>::weak_masks(const T& eps) const {
  check_pool_width(pool.size());
  std::vector<Mask> out(margins.size(), 0);
  for (std::size_t o = 0; o < margins.size(); ++o)
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!Num<T>::neg(margins[o][i] - eps)) out[o] |= Mask(1) << i;
  return out;
}

template <class T>
std::vector<Mask> strong_masks(const Problem<T>& prob, const CandidatePool<T>& pool, const T& eps) {
  check_pool_width(pool.size());
  std::vector<Mask> out(prob.size(), 0);
  for (std::size_t o = 0; o < prob.size(); ++o) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto target = shift_down(pool.points[i], prob.cone.e(), eps);
      if (nonzero_domination(target, prob.images[o], prob.cone).holds) out[o] |= Mask(1) << i;
    }
  }
  return out;
}

// ---- decision procedures ------------------------------------------------------

namespace {

std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (m & (Mask(1) << i)) out.push_back(i);
  return out;
}

template <class T>
std::vector<Vec<T>> padded_tuple(const CandidatePool<T>& pool, const std::vector<std::size_t>& chosen,
                                 int p) {
  std::vector<Vec<T>> tuple;
  for (std::size_t i : chosen) tuple.push_back(pool.points[i]);
  while (static_cast<int>(tuple.size()) < p) tuple.push_back(pool.points[chosen.front()]);
  return tuple;
}

// Position within `chosen` of the lowest bit of `hit`, or -1.
int first_position(const std::vector<std::size_t>& chosen, Mask hit) {
  for (std::size_t k = 0; k < chosen.size(); ++k)
    if (hit & (Mask(1) << chosen[k])) return static_cast<int>(k);
  return -1;
}

template <class T>
TupleCertificate<T> dominated_certificate(const Problem<T>& prob, const CandidatePool<T>& pool,
                                          std::size_t x, std::size_t by, int p) {
  TupleCertificate<T> cert;
  cert.label = prob.labels[x];
  cert.verdict = Verdict::Dominated;
  cert.by = by;
  const auto& img = prob.images[by];
  for (int k = 0; k < p; ++k) {
    const auto& y = pool.points[static_cast<std::size_t>(k) % pool.size()];
    cert.tuple.push_back(y);
    const auto w = point_margin_witness(y, img, prob.cone);
    if (img.is_finite()) {
      cert.witnesses.push_back(img.points[w.index]);
    } else {
      Vec<T> z(y.size(), T(0));
      for (std::size_t v = 0; v < img.size(); ++v)
        for (std::size_t c = 0; c < z.size(); ++c) z[c] += w.lambda[v] * img.points[v][c];
      cert.witnesses.push_back(std::move(z));
    }
  }
  return cert;
}

struct WeakOutcome {
  bool never = false;
  std::size_t blocker = 0;  // decision with empty complement when never
  int size = 0;             // minimum hitting set size otherwise
  std::vector<std::size_t> chosen;
  std::vector<Mask> complements;
};

template <class T>
WeakOutcome weak_search(const DominationTable<T>& table, const T& eps, const VpOptions& opts) {
  const std::size_t width = table.pool.size();
  WeakOutcome out;
  const Mask full = width == 64 ? ~Mask(0) : (Mask(1) << width) - 1;
  for (Mask d : table.strict_masks(eps)) out.complements.push_back(full & ~d);
  for (std::size_t o = 0; o < out.complements.size(); ++o) {
    if (out.complements[o] == 0) {
      out.never = true;
      out.blocker = o;
      return out;
    }
  }
  if (width > opts.weak_pool_cap) {
    throw Error(ErrorCode::CapExceeded, "weak candidate pool of " + std::to_string(width) +
                                            " points exceeds the cap of " +
                                            std::to_string(opts.weak_pool_cap));
  }
  const auto hs = min_hitting_set(static_cast<int>(width), out.complements);
  out.size = hs->size;
  out.chosen = bits(hs->members);
  return out;
}

template <class T>
TupleCertificate<T> weak_member_certificate(const Problem<T>& prob, std::size_t x,
                                            const DominationTable<T>& table, const WeakOutcome& w,
                                            int p) {
  TupleCertificate<T> cert;
  cert.label = prob.labels[x];
  cert.verdict = Verdict::Member;
  cert.tuple = padded_tuple(table.pool, w.chosen, p);
  for (Mask c : w.complements) cert.surviving.push_back(first_position(w.chosen, c));
  return cert;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return static_cast<std::uint64_t>(r + 0.5L);
}

struct MinTables {
  std::vector<Mask> weak;
  std::vector<Mask> strong;
};

// First subset of size k (ascending in Gosper order) dominated by no decision.
std::optional<Mask> undominated_subset(std::size_t width, std::size_t k, const MinTables& t) {
  if (k == 0 || k > width) return std::nullopt;
  Mask s = (k == 64) ? ~Mask(0) : (Mask(1) << k) - 1;
  const Mask limit = width == 64 ? 0 : (Mask(1) << width);
  while (true) {
    bool dominated = false;
    for (std::size_t o = 0; o < t.weak.size() && !dominated; ++o)
      dominated = (s & ~t.weak[o]) == 0 && (s & t.strong[o]) != 0;
    if (!dominated) return s;
    // Gosper's hack: next subset with the same popcount.
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    if (r == 0 || (limit != 0 && r >= limit)) return std::nullopt;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) return std::nullopt;
  }
}

template <class T>
TupleCertificate<T> min_member_certificate(const Problem<T>& prob, std::size_t x,
                                           const CandidatePool<T>& pool, const MinTables& t, Mask s,
                                           int p) {
  TupleCertificate<T> cert;
  cert.label = prob.labels[x];
  cert.verdict = Verdict::Member;
  const auto chosen = bits(s);
  cert.tuple = padded_tuple(pool, chosen, p);
  for (std::size_t o = 0; o < t.weak.size(); ++o) cert.surviving.push_back(first_position(chosen, ~t.weak[o]));
  return cert;
}

void charge(std::uint64_t& budget, std::uint64_t amount, const VpOptions& opts) {
  budget += amount;
  if (budget > opts.subset_cap) {
    throw Error(ErrorCode::CapExceeded,
                "subset enumeration exceeds the cap of " + std::to_string(opts.subset_cap));
  }
}

template <class T>
TupleCertificate<T> excluded(const Problem<T>& prob, std::size_t x, int required_p) {
  TupleCertificate<T> cert;
  cert.label = prob.labels[x];
  cert.verdict = Verdict::Excluded;
  cert.required_p = required_p;
  return cert;
}

template <class T>
TupleCertificate<T> decide(const Problem<T>& prob, std::size_t x, int p, const T& eps, VpKind kind,
                           const VpOptions& opts, bool& complete) {
  const auto table = domination_table(prob, x);
  complete = table.pool.complete_at(p);
  if (kind == VpKind::Weak) {
    const auto w = weak_search(table, eps, opts);
    if (w.never) return dominated_certificate(prob, table.pool, x, w.blocker, p);
    if (w.size <= p) return weak_member_certificate(prob, x, table, w, p);
    return excluded<T>(prob, x, w.size);
  }
  const MinTables t{table.weak_masks(eps), strong_masks(prob, table.pool, eps)};
  const std::size_t width = table.pool.size();
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(p), width);
  std::uint64_t budget = 0;
  for (std::size_t k = 1; k <= top; ++k) charge(budget, binomial(width, k), opts);
  for (std::size_t k = 1; k <= top; ++k)
    if (auto s = undominated_subset(width, k, t)) return min_member_certificate(prob, x, table.pool, t, *s, p);
  return excluded<T>(prob, x, 0);
}

}  // namespace

template <class T>
VpReport<T> membership_vp(const Problem<T>& prob, int p, const T& eps, VpKind kind,
                          const VpOptions& opts) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be at least 1");
  if (Num<T>::neg(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  const std::size_t n = prob.size();
  VpReport<T> rep;
  rep.kind = kind;
  rep.p = p;
  rep.eps = eps;
  rep.labels = prob.labels;
  rep.member.assign(n, false);
  rep.certificates.resize(n);
  std::vector<std::uint8_t> complete(n, 1);
  detail::for_each_index(n, opts.exec, [&](std::size_t x) {
    bool ok = true;
    rep.certificates[x] = decide(prob, x, p, eps, kind, opts, ok);
    complete[x] = ok;
  });
  for (std::size_t x = 0; x < n; ++x) {
    rep.member[x] = rep.certificates[x].verdict == Verdict::Member;
    if (!rep.member[x] && !complete[x]) rep.incomplete = true;
  }
  return rep;
}

template <class T>
MinimalP<T> minimal_p(const Problem<T>& prob, std::size_t x, const T& eps, VpKind kind,
                      const VpOptions& opts) {
  if (x >= prob.size()) throw Error(ErrorCode::UnknownLabel, "decision index out of range");
  if (Num<T>::neg(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  const auto table = domination_table(prob, x);
  MinimalP<T> out;
  if (kind == VpKind::Weak) {
    const auto w = weak_search(table, eps, opts);
    if (w.never) {
      out.never = true;
      out.witness = dominated_certificate(prob, table.pool, x, w.blocker, 1);
      return out;
    }
    out.p_star = w.size;
    out.witness = weak_member_certificate(prob, x, table, w, w.size);
    out.incomplete = table.pool.polytope && w.size > 1;
    return out;
  }
  const MinTables t{table.weak_masks(eps), strong_masks(prob, table.pool, eps)};
  const std::size_t width = table.pool.size();
  std::uint64_t budget = 0;
  for (std::size_t k = 1; k <= width; ++k) {
    charge(budget, binomial(width, k), opts);
    if (auto s = undominated_subset(width, k, t)) {
      out.p_star = static_cast<int>(k);
      out.witness = min_member_certificate(prob, x, table.pool, t, *s, out.p_star);
      out.incomplete = table.pool.polytope && k > 1;
      return out;
    }
  }
  out.never = true;
  out.witness = excluded<T>(prob, x, 0);
  out.incomplete = table.pool.polytope;
  return out;
}

// ---- covering bound ------------------------------------------------------------

template <class T>
int covering_p_bound(const Problem<T>& prob, std::size_t x, double eps, double gamma) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "covering bound needs eps > 0");
  const auto& img = prob.images.at(x);
  if (!img.is_finite()) throw Error(ErrorCode::Unsupported, "covering bound needs a finite image");
  const double r = r_epsilon(prob.cone.template convert<double>(), eps, gamma);
  std::vector<Vec<double>> pts;
  for (const auto& y : img.points) {
    Vec<double> d;
    for (const auto& c : y) d.push_back(Num<T>::to_double(c));
    pts.push_back(std::move(d));
  }
  return static_cast<int>(covering_number_internal(pts, r / 2).count);
}

template <class T>
int covering_p_bound_global(const Problem<T>& prob, double eps, double gamma) {
  const auto weak = solve_direct(prob, Concept::Weak, T(0));
  int best = 1;
  for (std::size_t x = 0; x < prob.size(); ++x)
    if (weak.member[x]) best = std::max(best, covering_p_bound(prob, x, eps, gamma));
  return best;
}

// ---- weighted sum ----------------------------------------------------------------

template <class T>
WeightedSumResult<T> solve_weighted_sum(const Problem<T>& prob, const std::vector<Vec<T>>& w) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one weight vector");
  bool nonzero = false;
  for (const auto& wi : w) {
    if (wi.size() != prob.cone.dim()) throw Error(ErrorCode::DimMismatch, "weight of wrong dimension");
    if (!prob.cone.in_dual_cone(wi)) {
      throw Error(ErrorCode::WeightNotInDualCone, "weight vector outside the dual cone");
    }
    for (const auto& c : wi) nonzero = nonzero || !Num<T>::zero(c);
  }
  if (!nonzero) throw Error(ErrorCode::InvalidArgument, "all weight vectors are zero");

  WeightedSumResult<T> res;
  std::vector<std::vector<Vec<T>>> tuples(prob.size());
  for (std::size_t x = 0; x < prob.size(); ++x) {
    // Linear objective: the minimum over a polytope is attained at a vertex.
    const auto& pts = prob.images[x].points;
    T total = 0;
    for (const auto& wi : w) {
      std::size_t arg = 0;
      T best = dot(wi, pts[0]);
      for (std::size_t i = 1; i < pts.size(); ++i) {
        T v = dot(wi, pts[i]);
        if (v < best) {
          best = std::move(v);
          arg = i;
        }
      }
      total += best;
      tuples[x].push_back(pts[arg]);
    }
    res.inner.push_back(std::move(total));
  }
  res.value = *std::min_element(res.inner.begin(), res.inner.end());
  for (std::size_t x = 0; x < prob.size(); ++x)
    if (Num<T>::zero(res.inner[x] - res.value)) res.solutions.push_back({prob.labels[x], tuples[x]});
  return res;
}

// ---- brute-force oracle -------------------------------------------------------------

template <class T>
VpReport<T> brute_force_vp(const Problem<T>& prob, int p, const T& eps, VpKind kind,
                           const VpOptions& opts) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be at least 1");
  if (Num<T>::neg(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  for (const auto& img : prob.images)
    if (!img.is_finite()) throw Error(ErrorCode::Unsupported, "brute force needs finite images");
  const std::size_t n = prob.size();
  const auto& e = prob.cone.e();

  VpReport<T> rep;
  rep.kind = kind;
  rep.p = p;
  rep.eps = eps;
  rep.labels = prob.labels;
  rep.member.assign(n, false);
  rep.certificates.resize(n);

  detail::for_each_index(n, opts.exec, [&](std::size_t x) {
    const auto& pts = prob.images[x].points;
    const std::size_t s = pts.size();
    long double count = 1;
    for (int i = 0; i < p; ++i) count *= static_cast<long double>(s);
    if (count > static_cast<long double>(opts.tuple_cap)) {
      throw Error(ErrorCode::CapExceeded, "tuple enumeration exceeds the cap");
    }
    // Product cone comparisons split by component: per decision and point,
    //   strict[o][j]  some y in F(o) with y <_K  pts[j] - eps e
    //   weak[o][j]    some y in F(o) with y <=_K pts[j] - eps e
    //   moved[o][j]   some such y with y != pts[j] - eps e
    std::vector<std::vector<std::uint8_t>> strict(n, std::vector<std::uint8_t>(s, 0));
    auto weak = strict, moved = strict;
    for (std::size_t o = 0; o < n; ++o) {
      for (std::size_t j = 0; j < s; ++j) {
        const auto target = shift_down(pts[j], e, eps);
        for (const auto& y : prob.images[o].points) {
          strict[o][j] |= prob.cone.less(y, target);
          if (prob.cone.leq(y, target)) {
            weak[o][j] = 1;
            moved[o][j] |= !approx_equal(y, target);
          }
        }
      }
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
    TupleCertificate<T> cert = excluded<T>(prob, x, 0);
    while (true) {
      bool dominated = false;
      std::vector<int> surviving;
      for (std::size_t o = 0; o < n && !dominated; ++o) {
        bool all = true, any_moved = false;
        int free_pos = -1;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const bool dom = kind == VpKind::Weak ? strict[o][idx[i]] : weak[o][idx[i]];
          if (!dom && free_pos < 0) free_pos = static_cast<int>(i);
          all = all && dom;
          any_moved = any_moved || moved[o][idx[i]];
        }
        dominated = kind == VpKind::Weak ? all : (all && any_moved);
        surviving.push_back(free_pos);
      }
      if (!dominated) {
        cert.verdict = Verdict::Member;
        cert.surviving = std::move(surviving);
        for (std::size_t i : idx) cert.tuple.push_back(pts[i]);
        break;
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == s) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    rep.certificates[x] = std::move(cert);
  });
  for (std::size_t x = 0; x < n; ++x) rep.member[x] = rep.certificates[x].verdict == Verdict::Member;
  return rep;
}

// ---- verification and JSON -------------------------------------------------------------

template <class T>
bool verify_tuple_certificate(const Problem<T>& prob, const TupleCertificate<T>& cert, VpKind kind,
                              const T& eps) {
  std::size_t x = 0;
  try {
    x = prob.index_of(cert.label);
  } catch (const Error&) {
    return false;
  }
  const auto& img = prob.images[x];
  auto in_image = [](const Vec<T>& y, const ImageSet<T>& a) {
    for (const auto& q : a.points)
      if (approx_equal(y, q)) return true;
    return false;
  };
  switch (cert.verdict) {
    case Verdict::Member: {
      if (cert.tuple.empty() || cert.surviving.size() != prob.size()) return false;
      for (const auto& y : cert.tuple)
        if (!in_image(y, img)) return false;
      for (std::size_t o = 0; o < prob.size(); ++o) {
        const int i = cert.surviving[o];
        if (i >= static_cast<int>(cert.tuple.size())) return false;
        if (kind == VpKind::Weak) {
          if (i < 0 || Num<T>::pos(point_margin(cert.tuple[i], prob.images[o], prob.cone) - eps))
            return false;
        } else if (i >= 0) {
          if (!Num<T>::neg(point_margin(cert.tuple[i], prob.images[o], prob.cone) - eps)) return false;
        } else {
          for (const auto& y : cert.tuple) {
            if (nonzero_domination(shift_down(y, prob.cone.e(), eps), prob.images[o], prob.cone).holds)
              return false;
          }
        }
      }
      return true;
    }
    case Verdict::Dominated: {
      if (cert.by >= prob.size() || cert.witnesses.size() != cert.tuple.size()) return false;
      const auto& other = prob.images[cert.by];
      for (std::size_t i = 0; i < cert.tuple.size(); ++i) {
        if (!in_image(cert.tuple[i], img)) return false;
        if (other.is_finite() && !in_image(cert.witnesses[i], other)) return false;
        if (!Num<T>::pos(prob.cone.margin(cert.witnesses[i], cert.tuple[i]) - eps)) return false;
      }
      return true;
    }
    case Verdict::Excluded:
      return cert.tuple.empty();
  }
  return false;
}

template <class T>
nlohmann::json certificate_to_json(const TupleCertificate<T>& cert,
                                   const std::vector<std::string>& labels) {
  nlohmann::json c;
  c["x"] = cert.label;
  c["tuple"] = points_json(cert.tuple);
  c["verdict"] = to_string(cert.verdict);
  switch (cert.verdict) {
    case Verdict::Member:
      c["surviving"] = nlohmann::json::object();
      for (std::size_t o = 0; o < cert.surviving.size(); ++o) c["surviving"][labels[o]] = cert.surviving[o];
      break;
    case Verdict::Dominated:
      c["by"] = labels[cert.by];
      c["witnesses"] = points_json(cert.witnesses);
      break;
    case Verdict::Excluded:
      c["required_p"] = cert.required_p;
      break;
  }
  return c;
}

template <class T>
nlohmann::json vp_report_to_json(const VpReport<T>& rep) {
  nlohmann::json j;
  j["kind"] = to_string(rep.kind);
  j["p"] = rep.p;
  j["epsilon"] = scalar_json(rep.eps);
  j["members"] = rep.members();
  j["incomplete"] = rep.incomplete;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : rep.certificates) j["certificates"].push_back(certificate_to_json(c, rep.labels));
  return j;
}

#define SETOPT_INSTANTIATE(T)                                                                      \
  template struct VpReport<T>;                                                                     \
  template struct DominationTable<T>;                                                              \
  template CandidatePool<T> candidate_pool(const Problem<T>&, std::size_t);                        \
  template DominationTable<T> domination_table(const Problem<T>&, std::size_t);                    \
  template std::vector<Mask> strong_masks(const Problem<T>&, const CandidatePool<T>&, const T&);   \
  template VpReport<T> membership_vp(const Problem<T>&, int, const T&, VpKind, const VpOptions&);  \
  template MinimalP<T> minimal_p(const Problem<T>&, std::size_t, const T&, VpKind,                 \
                                 const VpOptions&);                                                \
  template int covering_p_bound(const Problem<T>&, std::size_t, double, double);                   \
  template int covering_p_bound_global(const Problem<T>&, double, double);                         \
  template WeightedSumResult<T> solve_weighted_sum(const Problem<T>&, const std::vector<Vec<T>>&); \
  template VpReport<T> brute_force_vp(const Problem<T>&, int, const T&, VpKind, const VpOptions&); \
  template bool verify_tuple_certificate(const Problem<T>&, const TupleCertificate<T>&, VpKind,    \
                                         const T&);                                                \
  template nlohmann::json vp_report_to_json(const VpReport<T>&);                                   \
  template nlohmann::json certificate_to_json(const TupleCertificate<T>&,                          \
                                              const std::vector<std::string>&);

SETOPT_INSTANTIATE(double)
SETOPT_INSTANTIATE(Rational)
#undef SETOPT_INSTANTIATE

}  // namespace setopt
