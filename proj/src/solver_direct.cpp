#include "setopt/solver_direct.hpp"

#include <algorithm>

#include "setopt/error.hpp"
#include "setopt/json_util.hpp"

namespace setopt {

const char* to_string(Concept c) {
  switch (c) {
    case Concept::Weak: return "weak";
    case Concept::TypeOne: return "type1";
    case Concept::TypeTwo: return "type2";
  }
  return "?";
}

template <class T>
std::vector<std::string> SolutionReport<T>::members() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (member[k]) out.push_back(labels[k]);
  return out;
}

template <class T>
bool SolutionReport<T>::is_member(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return member[k];
  throw Error(ErrorCode::UnknownLabel, "no decision labeled '" + label + "'");
}

namespace {

template <class T>
ImageSet<T> shifted_up(const ImageSet<T>& img, const Vec<T>& e, const T& eps) {
  ImageSet<T> out = img;
  for (auto& p : out.points)
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += eps * e[c];
  return out;
}

Relation forward_relation(Concept c) {
  switch (c) {
    case Concept::Weak: return Relation::LowerStrict;
    case Concept::TypeOne: return Relation::Lower;
    case Concept::TypeTwo: return Relation::LowerStrong;
  }
  return Relation::Lower;
}

[[noreturn]] void inconsistent(const std::string& label) {
  throw Error(ErrorCode::InvalidArgument,
              "certificate for '" + label + "' disagrees with the comparison matrix");
}

}  // namespace

template <class T>
std::vector<T> weak_threshold(const Problem<T>& prob, Exec exec) {
  const auto m = margin_matrix(prob, exec);
  std::vector<T> tau(prob.size());
  for (std::size_t j = 0; j < prob.size(); ++j) {
    tau[j] = m.at(0, j);
    for (std::size_t i = 1; i < prob.size(); ++i) tau[j] = std::max(tau[j], m.at(i, j));
  }
  return tau;
}

template <class T>
SolutionReport<T> solve_direct(const Problem<T>& prob, Concept c, const T& eps, Exec exec) {
  if (Num<T>::neg(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  const std::size_t n = prob.size();
  SolutionReport<T> rep;
  rep.concept_kind = c;
  rep.eps = eps;
  rep.labels = prob.labels;
  rep.member.assign(n, true);

  // dominator[j]: first i that excludes j, or n.
  std::vector<std::size_t> dominator(n, n);
  if (c == Concept::TypeTwo) {
    const auto r = relation_matrix(prob, Relation::LowerStrong, eps, exec);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n && dominator[j] == n; ++i)
        if (r.at(i, j)) dominator[j] = i;
  } else {
    const auto m = margin_matrix(prob, exec);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n && dominator[j] == n; ++i) {
        const bool excludes =
            c == Concept::Weak
                ? Num<T>::pos(m.at(i, j) - eps)
                : !Num<T>::neg(m.at(i, j) - eps) && Num<T>::neg(m.at(j, i) + eps);
        if (excludes) dominator[j] = i;
      }
    }
    if (c == Concept::Weak) {
      rep.thresholds.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        rep.thresholds[j] = m.at(0, j);
        for (std::size_t i = 1; i < n; ++i) rep.thresholds[j] = std::max(rep.thresholds[j], m.at(i, j));
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = dominator[j];
    if (i == n) continue;
    rep.member[j] = false;
    Exclusion<T> ex;
    ex.excluded = j;
    ex.by = i;
    ex.forward = set_relation(prob.images[i], prob.images[j], prob.cone, forward_relation(c), eps);
    if (!ex.forward.holds) inconsistent(prob.labels[j]);
    if (c == Concept::TypeOne) {
      ex.reverse = set_relation(prob.images[j], shifted_up(prob.images[i], prob.cone.e(), eps),
                                prob.cone, Relation::Lower, T(0));
      if (ex.reverse->holds) inconsistent(prob.labels[j]);
    }
    rep.exclusions.push_back(std::move(ex));
  }
  return rep;
}

template <class T>
bool verify_report(const Problem<T>& prob, const SolutionReport<T>& rep) {
  const std::size_t n = prob.size();
  if (rep.member.size() != n || rep.labels != prob.labels) return false;
  std::vector<bool> excluded(n, false);
  for (const auto& ex : rep.exclusions) {
    if (ex.excluded >= n || ex.by >= n || excluded[ex.excluded]) return false;
    excluded[ex.excluded] = true;
    const auto& from = prob.images[ex.by];
    const auto& to = prob.images[ex.excluded];
    if (!ex.forward.holds || ex.forward.relation != forward_relation(rep.concept_kind)) return false;
    if (!verify_certificate(ex.forward, from, to, prob.cone)) return false;
    if (rep.concept_kind == Concept::TypeOne) {
      if (!ex.reverse || ex.reverse->holds) return false;
      if (!verify_certificate(*ex.reverse, to, shifted_up(from, prob.cone.e(), rep.eps), prob.cone))
        return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (excluded[k] == rep.member[k]) return false;
  return true;
}

template <class T>
nlohmann::json report_to_json(const SolutionReport<T>& rep) {
  using nlohmann::json;
  json j;
  j["concept"] = to_string(rep.concept_kind);
  j["epsilon"] = scalar_json(rep.eps);
  j["members"] = rep.members();
  j["certificates"] = json::array();
  for (const auto& ex : rep.exclusions) {
    json c;
    c["x"] = rep.labels[ex.excluded];
    c["by"] = rep.labels[ex.by];
    c["relation"] = to_string(ex.forward.relation);
    json w = json::array();
    for (const auto& wit : ex.forward.witnesses) {
      json item{{"target", wit.target}};
      if (wit.lambda.empty()) {
        item["source"] = wit.source;
      } else {
        item["lambda"] = vector_json(wit.lambda);
      }
      if (ex.forward.relation != Relation::LowerStrong) item["margin"] = scalar_json(wit.margin);
      w.push_back(std::move(item));
    }
    c["witnesses"] = std::move(w);
    if (ex.reverse) c["reverse_failing_target"] = ex.reverse->failing_target;
    j["certificates"].push_back(std::move(c));
  }
  if (!rep.thresholds.empty()) {
    j["thresholds"] = json::object();
    for (std::size_t k = 0; k < rep.labels.size(); ++k)
      j["thresholds"][rep.labels[k]] = scalar_json(rep.thresholds[k]);
  }
  return j;
}

#define SETOPT_INSTANTIATE(T)                                                                \
  template struct SolutionReport<T>;                                                         \
  template std::vector<T> weak_threshold(const Problem<T>&, Exec);                           \
  template SolutionReport<T> solve_direct(const Problem<T>&, Concept, const T&, Exec);       \
  template bool verify_report(const Problem<T>&, const SolutionReport<T>&);                  \
  template nlohmann::json report_to_json(const SolutionReport<T>&);

SETOPT_INSTANTIATE(double)
SETOPT_INSTANTIATE(Rational)
#undef SETOPT_INSTANTIATE

}  // namespace setopt
