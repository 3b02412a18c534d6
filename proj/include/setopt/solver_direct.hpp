#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "setopt/kernels.hpp"

namespace setopt {

/// Solution concepts of the set problem, each shifted by eps e:
///   Weak     no x' with F(x') <_l F(x) - eps e
///   TypeOne  every x' with F(x') <=_l F(x) - eps e also has F(x) - eps e <=_l F(x')
///   TypeTwo  no x' with F(x') <=_l-strong F(x) - eps e
enum class Concept { Weak, TypeOne, TypeTwo };

const char* to_string(Concept c);

template <class T>
struct Exclusion {
  std::size_t excluded = 0;
  std::size_t by = 0;
  RelationCertificate<T> forward;  // F(by) rel F(excluded) - eps e
  /// TypeOne only: failure of F(excluded) <=_l F(by) + eps e.
  std::optional<RelationCertificate<T>> reverse;
};

template <class T>
struct SolutionReport {
  Concept concept_kind = Concept::Weak;
  T eps = T(0);
  std::vector<std::string> labels;
  std::vector<bool> member;
  std::vector<Exclusion<T>> exclusions;  // one per non-member, in label order
  std::vector<T> thresholds;             // Weak only

  std::vector<std::string> members() const;
  bool is_member(const std::string& label) const;
};

/// Quantifiers range over every decision, the candidate included.
template <class T>
SolutionReport<T> solve_direct(const Problem<T>& prob, Concept c, const T& eps,
                               Exec exec = Exec::Parallel);

/// tau(x) = max_{x'} set_margin(F(x'), F(x)); x is an eps-weak solution iff eps >= tau(x).
template <class T>
std::vector<T> weak_threshold(const Problem<T>& prob, Exec exec = Exec::Parallel);

/// Re-checks every exclusion certificate against the problem.
template <class T>
bool verify_report(const Problem<T>& prob, const SolutionReport<T>& report);

template <class T>
nlohmann::json report_to_json(const SolutionReport<T>& report);

}  // namespace setopt
