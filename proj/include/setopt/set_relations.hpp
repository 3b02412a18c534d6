#pragma once

#include <vector>

#include "setopt/image_set.hpp"

namespace setopt {

/// The three lower set less relations, compared against B - eps e:
///   Lower        B - eps e  in  A + K
///   LowerStrong  B - eps e  in  A + K \ {0}
///   LowerStrict  B - eps e  in  A + int K
enum class Relation { Lower, LowerStrong, LowerStrict };

const char* to_string(Relation r);

/// min over points (vertices) b of B of point_margin(b, A).
///   A <_l (B - eps e)   iff eps <  set_margin
///   A <=_l (B - eps e)  iff eps <= set_margin
template <class T>
T set_margin(const ImageSet<T>& a, const ImageSet<T>& b, const Cone<T>& cone);

template <class T>
struct RelationCertificate {
  struct Witness {
    std::size_t target = 0;  // index into B
    std::size_t source = 0;  // index into A (finite A)
    Vec<T> lambda;           // convex multipliers over A's vertices (polytope A)
    T margin = T(0);         // point margin of the target
  };

  bool holds = false;
  Relation relation = Relation::Lower;
  T eps = T(0);
  std::vector<Witness> witnesses;  // one per target when holds
  std::size_t failing_target = 0;  // when !holds
};

/// Evaluates `rel` between A and B - eps e with a certificate. Mixing a finite
/// A (with more than one point) and a polytope B is rejected: A + K is then not
/// convex and checking B's vertices would not decide the relation.
template <class T>
RelationCertificate<T> set_relation(const ImageSet<T>& a, const ImageSet<T>& b,
                                    const Cone<T>& cone, Relation rel, const T& eps);

/// Re-checks every witness of a certificate from scratch.
template <class T>
bool verify_certificate(const RelationCertificate<T>& cert, const ImageSet<T>& a,
                        const ImageSet<T>& b, const Cone<T>& cone);

}  // namespace setopt
