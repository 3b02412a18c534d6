#include "setopt/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "setopt/error.hpp"
#include "setopt/json_util.hpp"

namespace setopt {

using nlohmann::json;

bool SuiteReport::hard_failure() const {
  for (const auto& c : checks)
    if (!c.passed && c.hard) return true;
  return false;
}

std::size_t SuiteReport::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.passed ? 0 : 1;
  return k;
}

std::vector<const CheckResult*> SuiteReport::failed() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

json SuiteReport::to_json() const {
  json j;
  j["passed"] = checks.size() - failures();
  j["failed"] = failures();
  j["hard_failure"] = hard_failure();
  j["agreement"] = agreement;
  j["compared"] = compared;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json item{{"name", c.name},
              {"instance", c.instance_id},
              {"verdict", c.passed ? "pass" : "fail"},
              {"severity", c.hard ? "hard" : "soft"}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.passed) item["counterexample"] = c.counterexample;
    j["checks"].push_back(std::move(item));
  }
  return j;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig cfg;
  for (std::uint64_t s = 1; s <= 50; ++s) cfg.seeds.push_back(s);
  for (std::uint64_t s = 1001; s <= 1020; ++s) cfg.polytope_seeds.push_back(s);
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;
using Q = Rational;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

std::vector<std::string> pick(const std::vector<std::string>& labels, const std::vector<bool>& in) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (in[k]) out.push_back(labels[k]);
  return out;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && !b[k]) return false;
  return true;
}

std::vector<bool> unite(std::vector<bool> a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] || b[k];
  return a;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Collects checks for one instance and attaches the replay payload to failures.
class Recorder {
 public:
  Recorder(const Instance* inst, std::string id) : inst_(inst), id_(std::move(id)) {}

  void check(const std::string& name, bool ok, const std::string& detail, json params = json::object(),
             bool hard = true) {
    CheckResult r;
    r.name = name;
    r.instance_id = id_;
    r.passed = ok;
    r.hard = hard;
    r.seconds = since(start_);
    start_ = Clock::now();
    if (!ok) {
      r.detail = detail;
      r.counterexample = {{"instance", inst_ ? instance_to_json(*inst_) : json()},
                          {"params", std::move(params)}};
    }
    report.checks.push_back(std::move(r));
  }

  // Runs `body`; any thrown error becomes a failing check of that name.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

  SuiteReport report;

 private:
  const Instance* inst_;
  std::string id_;
  Clock::time_point start_ = Clock::now();
};

json eps_param(const Q& eps) { return {{"eps", format_rational(eps)}}; }

std::size_t max_pool(const Problem<Q>& prob) {
  std::size_t best = 1;
  for (std::size_t x = 0; x < prob.size(); ++x) best = std::max(best, candidate_pool(prob, x).size());
  return best;
}

}  // namespace

SuiteReport check_finite_instance(const Instance& inst, const std::string& id,
                                  const SuiteConfig& cfg) {
  Recorder rec(&inst, id);
  const auto prob = make_problem<Q>(inst);
  const auto& labels = prob.labels;
  const std::size_t n = prob.size();

  std::vector<Q> eps_all{Q(0)};
  for (double e : cfg.eps_grid)
    if (e > 0) eps_all.push_back(rational_from_double(e));
  std::sort(eps_all.begin(), eps_all.end());
  eps_all.erase(std::unique(eps_all.begin(), eps_all.end()), eps_all.end());

  // Direct solutions per eps.
  std::vector<SolutionReport<Q>> weak, t1, t2;
  rec.guarded("direct_solutions", [&] {
    for (const auto& eps : eps_all) {
      weak.push_back(solve_direct(prob, Concept::Weak, eps));
      t1.push_back(solve_direct(prob, Concept::TypeOne, eps));
      t2.push_back(solve_direct(prob, Concept::TypeTwo, eps));
    }
  });
  if (weak.size() != eps_all.size()) return rec.report;

  for (std::size_t k = 0; k < eps_all.size(); ++k) {
    const auto& eps = eps_all[k];
    rec.check("solution_chain", subset(t1[k].member, t2[k].member) && subset(t2[k].member, weak[k].member),
              "type1 " + join(t1[k].members()) + " type2 " + join(t2[k].members()) + " weak " +
                  join(weak[k].members()),
              eps_param(eps));
    rec.check("direct_certificates",
              verify_report(prob, weak[k]) && verify_report(prob, t1[k]) && verify_report(prob, t2[k]),
              "an exclusion certificate failed to re-verify", eps_param(eps));
    if (k > 0) {
      rec.check("eps_monotone",
                subset(weak[k - 1].member, weak[k].member) && subset(t2[k - 1].member, t2[k].member),
                "members shrank as eps grew", eps_param(eps));
    }
  }

  // Threshold law: random eps plus the thresholds themselves.
  const auto tau = weak[0].thresholds;
  {
    std::mt19937_64 rng(fnv1a(id));
    Q top = 1;
    for (const auto& t : tau) top = std::max(top, t + 1);
    std::vector<Q> samples(tau.begin(), tau.end());
    const auto steps = static_cast<std::uint64_t>((top * 16).convert_to<double>()) + 1;
    for (int s = 0; s < cfg.threshold_samples; ++s)
      samples.push_back(Q(static_cast<long>(rng() % steps), 16));
    bool ok = true;
    std::string detail;
    for (const auto& eps : samples) {
      if (eps < 0) continue;
      const auto rep = solve_direct(prob, Concept::Weak, eps);
      for (std::size_t x = 0; x < n && ok; ++x) {
        if (rep.member[x] != (tau[x] <= eps)) {
          ok = false;
          detail = "label " + labels[x] + " eps " + format_rational(eps) + " tau " + format_rational(tau[x]);
        }
      }
    }
    rec.check("threshold_law", ok, detail);
  }

  // Intersection law over a sequence decreasing below the smallest positive threshold.
  std::vector<Q> shrinking;
  {
    Q base = 1;
    for (const auto& t : tau)
      if (t > 0) base = std::min(base, t);
    for (int k = 1; k <= 3; ++k) shrinking.push_back(base / Q(1 << k));
    std::vector<bool> inter(n, true);
    bool t2_ok = true;
    for (const auto& eps : shrinking) {
      const auto w = solve_direct(prob, Concept::Weak, eps);
      for (std::size_t x = 0; x < n; ++x) inter[x] = inter[x] && w.member[x];
      t2_ok = t2_ok && subset(t2[0].member, solve_direct(prob, Concept::TypeTwo, eps).member);
    }
    rec.check("intersection_law", inter == weak[0].member && t2_ok,
              "intersection " + join(pick(labels, inter)) + " vs weak " + join(weak[0].members()));
  }

  // Vectorized problem across the (p, eps) lattice.
  bool faulted = false;
  for (VpKind kind : {VpKind::Weak, VpKind::Min}) {
    for (std::size_t k = 0; k < eps_all.size(); ++k) {
      const auto& eps = eps_all[k];
      std::vector<bool> previous;
      for (int p = 1; p <= cfg.p_max; ++p) {
        json params = {{"kind", to_string(kind)}, {"p", p}, {"eps", format_rational(eps)}};
        rec.guarded("vp_lattice", [&] {
          const auto vp = membership_vp(prob, p, eps, kind);
          auto bf = brute_force_vp(prob, p, eps, kind);
          if (cfg.inject_oracle_fault && !faulted) {
            bf.member[0] = !bf.member[0];
            faulted = true;
          }
          rec.check("oracle_equivalence", vp.member == bf.member,
                    "pool search " + join(vp.members()) + " vs brute force " + join(bf.members()), params);
          bool certs = true;
          for (const auto& c : vp.certificates) certs = certs && verify_tuple_certificate(prob, c, kind, eps);
          rec.check("vp_certificates", certs, "a tuple certificate failed to re-verify", params);
          const auto& direct = kind == VpKind::Weak ? weak[k] : t2[k];
          rec.check("vp_within_direct", subset(vp.member, direct.member),
                    join(vp.members()) + " not within " + join(direct.members()), params);
          if (!previous.empty()) {
            rec.check("monotone_in_p", subset(previous, vp.member),
                      "members at p-1 " + join(pick(labels, previous)) + " at p " + join(vp.members()),
                      params);
          }
          previous = vp.member;
        });
      }
    }
  }

  // Minimal budgets agree with the set problem and with membership.
  for (std::size_t k = 0; k < eps_all.size(); ++k) {
    const auto& eps = eps_all[k];
    rec.guarded("minimal_p_consistency", [&] {
      bool ok = true;
      std::string detail;
      std::vector<MinimalP<Q>> mp;
      for (std::size_t x = 0; x < n; ++x) {
        mp.push_back(minimal_p(prob, x, eps, VpKind::Weak));
        if (mp.back().never == weak[k].member[x]) {
          ok = false;
          detail = "label " + labels[x];
        }
        ok = ok && verify_tuple_certificate(prob, mp.back().witness, VpKind::Weak, eps);
      }
      for (int p = 1; p <= cfg.p_max && ok; ++p) {
        const auto vp = membership_vp(prob, p, eps, VpKind::Weak);
        for (std::size_t x = 0; x < n; ++x) {
          if (vp.member[x] != (!mp[x].never && mp[x].p_star <= p)) {
            ok = false;
            detail = "label " + labels[x] + " p " + std::to_string(p);
          }
        }
      }
      rec.check("minimal_p_consistency", ok, detail, eps_param(eps));
    });
  }

  const std::size_t pool_max = max_pool(prob);
  rec.guarded("vectorization_equalities", [&] {
    const int p_omega = static_cast<int>(std::max<std::size_t>(1, n - 1));
    const auto a = membership_vp(prob, p_omega, Q(0), VpKind::Weak);
    rec.check("budget_omega_minus_one", a.member == weak[0].member,
              join(a.members()) + " vs " + join(weak[0].members()), {{"p", p_omega}});
    const auto b = membership_vp(prob, static_cast<int>(pool_max), Q(0), VpKind::Weak);
    rec.check("budget_max_min_elements", b.member == weak[0].member,
              join(b.members()) + " vs " + join(weak[0].members()), {{"p", pool_max}});

    // No quality sets are lost: every decision is matched by a Min member.
    std::vector<bool> min_union(n, false);
    for (int p = 1; p <= static_cast<int>(pool_max); ++p)
      min_union = unite(min_union, membership_vp(prob, p, Q(0), VpKind::Min).member);
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < n; ++x) {
      bool matched = false;
      for (std::size_t y = 0; y < n && !matched; ++y)
        matched = min_union[y] &&
                  set_relation(prob.images[y], prob.images[x], prob.cone, Relation::Lower, Q(0)).holds;
      if (!matched) {
        ok = false;
        detail = "nothing in " + join(pick(labels, min_union)) + " lies below " + labels[x];
      }
    }
    rec.check("no_quality_lost", ok, detail, {{"p_max", pool_max}});

    // Unions over p at positive eps sit between the weak solutions and eps-weak solutions.
    for (std::size_t k = 1; k < eps_all.size(); ++k) {
      const auto& eps = eps_all[k];
      const auto uw = membership_vp(prob, static_cast<int>(pool_max), eps, VpKind::Weak).member;
      const auto um = membership_vp(prob, static_cast<int>(pool_max), eps, VpKind::Min).member;
      rec.check("union_chain",
                subset(weak[0].member, um) && subset(um, uw) && uw == weak[k].member,
                "weak(0) " + join(weak[0].members()) + " min-union " + join(pick(labels, um)) +
                    " weak-union " + join(pick(labels, uw)) + " eps-weak " + join(weak[k].members()),
                eps_param(eps));
    }
    std::vector<bool> inter(n, true);
    for (const auto& eps : shrinking) {
      const auto uw = membership_vp(prob, static_cast<int>(pool_max), eps, VpKind::Weak).member;
      for (std::size_t x = 0; x < n; ++x) inter[x] = inter[x] && uw[x];
    }
    rec.check("union_intersection", inter == weak[0].member,
              join(pick(labels, inter)) + " vs " + join(weak[0].members()));
  });

  rec.guarded("weighted_sum_soundness", [&] {
    std::mt19937_64 rng(fnv1a(id) ^ 0x5eedull);
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 2; ++p) {
      std::vector<Vec<Q>> w;
      bool nonzero = false;
      for (int i = 0; i < p; ++i) {
        Vec<Q> wi;
        for (std::size_t c = 0; c < prob.cone.dim(); ++c) {
          wi.push_back(Q(static_cast<long>(rng() % 4)));
          nonzero = nonzero || wi.back() != 0;
        }
        w.push_back(std::move(wi));
      }
      if (!nonzero) w[0][0] = 1;
      const auto ws = solve_weighted_sum(prob, w);
      const auto vp = membership_vp(prob, p, Q(0), VpKind::Weak);
      for (const auto& s : ws.solutions) {
        if (!vp.is_member(s.label)) {
          ok = false;
          detail = "weighted-sum optimum " + s.label + " outside weak members at p " + std::to_string(p);
        }
      }
    }
    rec.check("weighted_sum_soundness", ok, detail);
  });

  rec.guarded("covering_bound", [&] {
    bool ok = true;
    std::string detail;
    for (double e : {0.5, 1.0}) {
      const Q eps = rational_from_double(e);
      for (std::size_t x = 0; x < n; ++x) {
        if (!weak[0].member[x]) continue;
        const int p = covering_p_bound(prob, x, e);
        if (!membership_vp(prob, p, eps, VpKind::Weak).member[x]) {
          ok = false;
          detail = "label " + labels[x] + " not a member at covering budget " + std::to_string(p);
        }
      }
    }
    rec.check("covering_bound", ok, detail);
  });

  rec.guarded("discretization", [&] {
    for (double e : {0.1, 0.5}) {
      const auto d = discretize_map(inst, e);
      bool subsets = true;
      for (std::size_t x = 0; x < n; ++x)
        for (const auto& y : d.images[x].points)
          subsets = subsets && std::find(inst.images[x].points.begin(), inst.images[x].points.end(), y) !=
                                   inst.images[x].points.end();
      const double dist = instance_distance(inst, d);
      rec.check("discretize_distance", subsets && dist <= e,
                "distance " + std::to_string(dist) + (subsets ? "" : ", centers outside the image"),
                {{"eps", e}});
      const auto dp = make_problem<Q>(d);
      std::size_t largest = 1;
      for (const auto& img : dp.images) largest = std::max(largest, img.size());
      const auto vp = membership_vp(dp, static_cast<int>(largest), Q(0), VpKind::Weak);
      const auto direct = solve_direct(dp, Concept::Weak, Q(0));
      rec.check("discretized_budget", vp.member == direct.member,
                join(vp.members()) + " vs " + join(direct.members()), {{"eps", e}, {"p", largest}});
    }
  });
  return rec.report;
}

SuiteReport check_polytope_instance(const Instance& inst, const std::string& id) {
  Recorder rec(&inst, id);
  rec.guarded("polytope_checks", [&] {
    const auto prob = make_problem<Q>(inst);
    const auto weak = solve_direct(prob, Concept::Weak, Q(0));
    const auto t1 = solve_direct(prob, Concept::TypeOne, Q(0));
    const auto t2 = solve_direct(prob, Concept::TypeTwo, Q(0));
    rec.check("solution_chain", subset(t1.member, t2.member) && subset(t2.member, weak.member),
              "type1 " + join(t1.members()) + " type2 " + join(t2.members()) + " weak " + join(weak.members()));
    rec.check("direct_certificates",
              verify_report(prob, weak) && verify_report(prob, t1) && verify_report(prob, t2),
              "an exclusion certificate failed to re-verify");
    std::size_t ext = 1;
    for (const auto& img : prob.images) ext = std::max(ext, img.size());
    const auto vp = membership_vp(prob, static_cast<int>(ext), Q(0), VpKind::Weak);
    rec.check("budget_max_vertices", vp.member == weak.member && !vp.incomplete,
              join(vp.members()) + " vs " + join(weak.members()), {{"p", ext}});
    bool sound = true, certs = true;
    for (int p = 1; p <= static_cast<int>(ext); ++p) {
      const auto r = membership_vp(prob, p, Q(0), VpKind::Weak);
      sound = sound && subset(r.member, weak.member);
      for (const auto& c : r.certificates) certs = certs && verify_tuple_certificate(prob, c, VpKind::Weak, Q(0));
    }
    rec.check("vp_within_direct", sound, "a vertex-tuple member is not a weak solution");
    rec.check("vp_certificates", certs, "a tuple certificate failed to re-verify");
  });
  return rec.report;
}

SuiteReport check_golden() {
  Recorder rec(nullptr, "golden");
  auto expect = [&](const std::string& name, const std::vector<std::string>& got,
                    const std::vector<std::string>& want) {
    rec.check(name, got == want, "got " + join(got) + ", expected " + join(want));
  };

  rec.guarded("mfdvp", [&] {
    const auto prob = make_problem<Q>(make_example("mfdvp"));
    expect("mfdvp_type2", solve_direct(prob, Concept::TypeTwo, Q(0)).members(), {"0", "1", "2"});
    bool excluded = true;
    for (int p = 1; p <= 6; ++p) excluded = excluded && !membership_vp(prob, p, Q(0), VpKind::Min).is_member("0");
    rec.check("mfdvp_min_excludes_0", excluded, "0 became a Min member");
    rec.check("mfdvp_weak_p2", membership_vp(prob, 2, Q(0), VpKind::Weak).is_member("0"), "0 missing at p = 2");
    const auto mp = minimal_p(prob, 0, Q(0), VpKind::Weak);
    rec.check("mfdvp_minimal_p", !mp.never && mp.p_star == 2, "p_star " + std::to_string(mp.p_star));
    const auto ws = solve_weighted_sum(prob, {{Q(1), Q(1)}});
    std::vector<std::string> got;
    for (const auto& s : ws.solutions) got.push_back(s.label);
    expect("mfdvp_weighted_sum", got, {"1", "2"});
  });

  rec.guarded("t_one", [&] {
    const auto inst = make_example("t_one", ExampleParams{.grid = 9});
    const auto prob = make_problem<Q>(inst);
    expect("t_one_type1", solve_direct(prob, Concept::TypeOne, Q(0)).members(), {"0.25"});
    expect("t_one_type2", solve_direct(prob, Concept::TypeTwo, Q(0)).members(), inst.labels());
    const auto vp = membership_vp(prob, 1, Q(0), VpKind::Min);
    const auto& cert = vp.certificates[prob.index_of("0.5")];
    rec.check("t_one_min_p1_tuple",
              cert.verdict == Verdict::Member && cert.tuple == std::vector<Vec<Q>>{{Q(1), Q(0)}},
              "0.5 not certified by the tuple ((1,0))");
  });

  rec.guarded("strict_min", [&] {
    const auto inst = make_example("strict_min", ExampleParams{.grid = 5});
    const auto prob = make_problem<Q>(inst);
    expect("strict_min_type2", solve_direct(prob, Concept::TypeTwo, Q(0)).members(), {"0"});
    for (const Q& eps : {Q(1, 100), Q(1, 10), Q(1)})
      expect("strict_min_min_p1_eps_" + format_decimal(eps), membership_vp(prob, 1, eps, VpKind::Min).members(),
             inst.labels());
  });

  rec.guarded("cantor", [&] {
    int previous = 0;
    bool monotone = true;
    for (int t = 3; t <= 6; ++t) {
      const auto prob = make_problem<Q>(make_example("cantor", ExampleParams{.truncation = t, .limit_points = t + 2}));
      const std::size_t one = prob.index_of("1");
      const auto mp = minimal_p(prob, one, Q(0), VpKind::Weak);
      // Reference value: smallest p at which the full-image tuple search admits 1.
      int oracle = 0;
      for (int p = 1; p <= static_cast<int>(prob.images[one].size()) && oracle == 0; ++p)
        if (brute_force_vp(prob, p, Q(0), VpKind::Weak).member[one]) oracle = p;
      rec.check("cantor_minimal_p_T" + std::to_string(t), !mp.never && mp.p_star == oracle,
                "p_star " + std::to_string(mp.p_star) + " oracle " + std::to_string(oracle));
      if (t == 6) {
        const auto weak = solve_direct(prob, Concept::Weak, Q(0));
        rec.check("cantor_limit_weak_member", weak.is_member("1"), "1 is not a weak solution");
      }
      monotone = monotone && mp.p_star >= previous;
      previous = mp.p_star;
    }
    rec.check("cantor_minimal_p_monotone", monotone, "minimal budget decreased as T grew");
  });
  return rec.report;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto t0 = Clock::now();
  SuiteReport out;
  auto merge = [&](SuiteReport r) {
    for (auto& c : r.checks) out.checks.push_back(std::move(c));
  };
  if (cfg.golden) merge(check_golden());
  // The injected fault flips a single verdict, in the first instance only.
  SuiteConfig per_instance = cfg;
  for (auto seed : cfg.seeds) {
    const auto inst = make_example("random_finite", ExampleParams{.seed = seed});
    merge(check_finite_instance(inst, "random_finite seed=" + std::to_string(seed), per_instance));
    per_instance.inject_oracle_fault = false;
  }
  for (auto seed : cfg.polytope_seeds) {
    const auto inst = make_example("random_finite", ExampleParams{.seed = seed, .polytope = true});
    merge(check_polytope_instance(inst, "random_polytope seed=" + std::to_string(seed)));
  }
  out.seconds = since(t0);
  return out;
}

CheckResult convex_check(const Instance& inst, const std::string& id, int p, std::size_t& agree,
                         std::size_t& total) {
  Recorder rec(&inst, id);
  rec.guarded("convex_agreement", [&] {
    const auto prob = make_problem<Q>(inst);
    const auto weak = solve_direct(prob, Concept::Weak, Q(0));
    const auto vp = membership_vp(prob, p, Q(0), VpKind::Weak);
    std::vector<std::string> differ;
    for (std::size_t x = 0; x < prob.size(); ++x) {
      ++total;
      if (vp.member[x] == weak.member[x]) {
        ++agree;
      } else {
        differ.push_back(prob.labels[x]);
      }
    }
    rec.check("convex_agreement", differ.empty(), "disagreeing labels " + join(differ), {{"p", p}}, false);
  });
  auto r = rec.report.checks.back();
  r.hard = false;
  return r;
}

SuiteReport convex_experiment(const ConvexConfig& cfg) {
  const auto t0 = Clock::now();
  SuiteReport out;
  std::size_t agree = 0, total = 0;
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    const std::string id = "convex_polyhedral seed=" + std::to_string(seed);
    Instance inst;
    try {
      inst = make_example("convex_polyhedral", ExampleParams{.grid = cfg.grid, .seed = seed, .n = cfg.n});
    } catch (const Error& e) {
      CheckResult skipped;
      skipped.name = "convex_generator";
      skipped.instance_id = id;
      skipped.passed = false;
      skipped.hard = false;
      skipped.detail = std::string("skipped: ") + e.what();
      skipped.counterexample = {{"params", {{"seed", seed}, {"grid", cfg.grid}, {"n", cfg.n}}}};
      out.checks.push_back(std::move(skipped));
      continue;
    }
    auto r = convex_check(inst, id, cfg.n + 1, agree, total);
    if (!r.passed) r.counterexample["params"].update({{"seed", seed}, {"grid", cfg.grid}, {"n", cfg.n}});
    out.checks.push_back(std::move(r));
  }
  out.compared = total;
  out.agreement = total == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(total);
  out.seconds = since(t0);
  return out;
}

}  // namespace setopt
