#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "setopt/cone.hpp"

namespace setopt {

enum class ImageKind { Finite, Polytope };

/// A value F(x): a finite point list, or a polytope given by its vertices.
template <class T>
struct ImageSet {
  ImageKind kind = ImageKind::Finite;
  std::vector<Vec<T>> points;

  static ImageSet finite(std::vector<Vec<T>> pts) { return {ImageKind::Finite, std::move(pts)}; }
  static ImageSet polytope(std::vector<Vec<T>> verts) {
    return {ImageKind::Polytope, std::move(verts)};
  }

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
  bool is_finite() const { return kind == ImageKind::Finite; }
  bool operator==(const ImageSet&) const = default;
};

/// Indices of Min(A, K) (weak = false) or WMin(A, K) (weak = true) of a finite
/// image. Throws Unsupported for polytopes.
template <class T>
std::vector<std::size_t> min_elements(const ImageSet<T>& a, const Cone<T>& cone, bool weak);

/// Indices of vertices v of the polytope with no polytope point <=_K v other
/// than v itself (LP per vertex). For finite images this is min_elements.
template <class T>
std::vector<std::size_t> minimal_vertices(const ImageSet<T>& a, const Cone<T>& cone);

/// max{eps : b - eps e in A + K}. Finite A: max_a margin(a, b); polytope A:
/// one LP over the convex multipliers.
template <class T>
T point_margin(const Vec<T>& b, const ImageSet<T>& a, const Cone<T>& cone);

/// Same as point_margin, plus the witness: index of the best point for finite
/// images, or convex multipliers over the vertices for polytopes.
template <class T>
struct PointMarginWitness {
  T value;
  std::size_t index = 0;
  Vec<T> lambda;
};

template <class T>
PointMarginWitness<T> point_margin_witness(const Vec<T>& b, const ImageSet<T>& a,
                                           const Cone<T>& cone);

/// Whether target lies in A + K \ {0}, i.e. some y in A has y <=_K target,
/// y != target. Witness: point index (finite) or multipliers (polytope).
template <class T>
struct NonzeroDomination {
  bool holds = false;
  std::size_t index = 0;
  Vec<T> lambda;
};

template <class T>
NonzeroDomination<T> nonzero_domination(const Vec<T>& target, const ImageSet<T>& a,
                                        const Cone<T>& cone);

/// Points of `vertices` not in the convex hull of the others; duplicates are
/// collapsed onto their first occurrence. Returns surviving indices.
template <class T>
std::vector<std::size_t> prune_to_extreme(const std::vector<Vec<T>>& vertices);

/// Min(A,K) nonempty and A within Min(A,K) + K. Always true for finite A
/// and pointed K; kept as a test oracle.
template <class T>
bool domination_check(const ImageSet<T>& a, const Cone<T>& cone);

/// Indices of the first occurrence of every distinct point.
template <class T>
std::vector<std::size_t> distinct_points(const std::vector<Vec<T>>& pts);

// Metric geometry on float coordinates.

double euclidean(const Vec<double>& a, const Vec<double>& b);

/// Hausdorff distance between two finite point sets (max of directed max-min).
double hausdorff(const std::vector<Vec<double>>& a, const std::vector<Vec<double>>& b);

struct Covering {
  std::size_t count = 0;
  std::vector<std::size_t> centers;  // indices into the input, ascending
  bool exact = false;
};

/// Centers drawn from `a` so that every point lies within `radius` of one.
/// Exact minimum by branch and bound up to `exact_limit` points, greedy above.
Covering covering_number_internal(const std::vector<Vec<double>>& a, double radius,
                                  std::size_t exact_limit = 24);

}  // namespace setopt
