#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "setopt/image_set.hpp"

namespace setopt {

struct Decision {
  std::string label;
  Vec<Rational> x;

  bool operator==(const Decision&) const = default;
};

/// A set optimization problem over a finite, labeled feasible set: the cone
/// (rows, e), one image per decision, and free-form provenance strings.
/// Coordinates are held exactly; solvers pick their arithmetic through
/// make_problem<T>.
struct Instance {
  std::vector<Vec<Rational>> cone_rows;
  Vec<Rational> e;
  std::vector<Decision> decisions;
  std::vector<ImageSet<Rational>> images;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return decisions.size(); }
  std::size_t image_dim() const { return e.size(); }
  std::size_t decision_dim() const { return decisions.empty() ? 0 : decisions.front().x.size(); }

  /// Throws DuplicateLabel, EmptyImage, DimMismatch, MixedImageKinds,
  /// InvalidArgument, or a cone error.
  void validate() const;

  /// Index of `label`; throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  std::vector<std::string> labels() const;
  bool all_finite() const;

  bool operator==(const Instance& other) const;
};

/// Numeric view of an instance: validated cone, labels, and canonical images
/// (finite images deduplicated, polytopes pruned to extreme points).
template <class T>
struct Problem {
  Cone<T> cone;
  std::vector<std::string> labels;
  std::vector<ImageSet<T>> images;

  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
};

template <class T>
Problem<T> make_problem(const Instance& inst);

// ---- persistence --------------------------------------------------------

struct LoadOptions {
  /// Reject float literals in cone and image data ("p/q" strings and JSON
  /// integers only).
  bool require_rational = false;
};

Instance instance_from_json(const nlohmann::json& j, const LoadOptions& opts = {});
nlohmann::json instance_to_json(const Instance& inst);

Instance load_instance(const std::filesystem::path& path, const LoadOptions& opts = {});
void save_instance(const Instance& inst, const std::filesystem::path& path);

/// JSON value of an exact number: integer when integral, "p/q" otherwise.
nlohmann::json number_to_json(const Rational& q);

// ---- metric construction -----------------------------------------------

/// max over decisions of the Hausdorff distance between paired finite images.
/// Decision lists must coincide.
double instance_distance(const Instance& a, const Instance& b);

/// Replaces every finite image by its internal eps-cover centers.
Instance discretize_map(const Instance& inst, double eps);

// ---- generators ---------------------------------------------------------

struct ExampleParams {
  int grid = 0;            // t_one (default 9), strict_min (5), convex_polyhedral (17)
  int truncation = 6;      // cantor T
  int limit_points = 8;    // cantor N (>= T)
  std::uint64_t seed = 1;  // random generators
  int decisions = 0;       // random_finite |Omega|; 0 draws from [2, 8]
  int max_image = 6;       // random_finite image sizes in [1, max_image]
  int coord_range = 5;     // random_finite coordinates in [-r, r]
  bool polytope = false;   // random_finite: polytope images (pruned to extreme)
  int n = 1;               // convex_polyhedral decision dimension (1 or 2)
};

/// t_one, strict_min, cantor, mfdvp, mfdvp_polytope, random_finite,
/// convex_polyhedral. Throws UnknownExample or InvalidArgument.
Instance make_example(const std::string& name, const ExampleParams& params = {});

std::vector<std::string> example_names();

/// Nonnegative orthant with e = (1, ..., 1).
void set_orthant_cone(Instance& inst, std::size_t m);

}  // namespace setopt
