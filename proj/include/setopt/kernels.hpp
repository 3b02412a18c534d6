#pragma once

// All-pairs comparison matrices over the decisions of a problem. Both
// variants produce identical output; the serial one is the reference.

#include <cstdint>
#include <vector>

#include "setopt/instance.hpp"
#include "setopt/set_relations.hpp"

namespace setopt {

enum class Exec { Serial, Parallel };

/// Row-major n x n matrix.
template <class V>
struct Matrix {
  std::size_t n = 0;
  std::vector<V> data;

  const V& at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  V& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
  bool operator==(const Matrix&) const = default;
};

/// M(i, j) = set_margin(F(x_i), F(x_j)).
template <class T>
Matrix<T> margin_matrix(const Problem<T>& prob, Exec exec = Exec::Parallel);

/// R(i, j) = 1 iff F(x_i) rel F(x_j) - eps e.
template <class T>
Matrix<std::uint8_t> relation_matrix(const Problem<T>& prob, Relation rel, const T& eps,
                                     Exec exec = Exec::Parallel);

/// Worker threads the parallel variant will use.
int parallel_threads();

}  // namespace setopt
