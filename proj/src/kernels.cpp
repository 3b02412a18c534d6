#include "setopt/kernels.hpp"

#include <omp.h>

#include "parallel.hpp"

namespace setopt {

template <class T>
Matrix<T> margin_matrix(const Problem<T>& prob, Exec exec) {
  const std::size_t n = prob.size();
  Matrix<T> out{n, std::vector<T>(n * n)};
  detail::for_each_index(n * n, exec, [&](std::size_t k) {
    out.data[k] = set_margin(prob.images[k / n], prob.images[k % n], prob.cone);
  });
  return out;
}

template <class T>
Matrix<std::uint8_t> relation_matrix(const Problem<T>& prob, Relation rel, const T& eps,
                                     Exec exec) {
  const std::size_t n = prob.size();
  Matrix<std::uint8_t> out{n, std::vector<std::uint8_t>(n * n, 0)};
  detail::for_each_index(n * n, exec, [&](std::size_t k) {
    out.data[k] = set_relation(prob.images[k / n], prob.images[k % n], prob.cone, rel, eps).holds;
  });
  return out;
}

int parallel_threads() { return omp_get_max_threads(); }

template Matrix<double> margin_matrix(const Problem<double>&, Exec);
template Matrix<Rational> margin_matrix(const Problem<Rational>&, Exec);
template Matrix<std::uint8_t> relation_matrix(const Problem<double>&, Relation, const double&, Exec);
template Matrix<std::uint8_t> relation_matrix(const Problem<Rational>&, Relation, const Rational&,
                                              Exec);

}  // namespace setopt
