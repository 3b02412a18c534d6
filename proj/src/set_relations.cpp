#include "setopt/set_relations.hpp"

#include "setopt/error.hpp"

namespace setopt {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Lower: return "lower";
    case Relation::LowerStrong: return "lower_strong";
    case Relation::LowerStrict: return "lower_strict";
  }
  return "?";
}

namespace {

template <class T>
void check_pair(const ImageSet<T>& a, const ImageSet<T>& b, const Cone<T>& cone) {
  if (a.size() == 0 || b.size() == 0) throw Error(ErrorCode::EmptyImage, "empty image set");
  if (a.dim() != cone.dim() || b.dim() != cone.dim()) {
    throw Error(ErrorCode::DimMismatch, "image dimension differs from cone dimension");
  }
  if (a.is_finite() && a.size() > 1 && !b.is_finite()) {
    throw Error(ErrorCode::Unsupported,
                "finite left set against a polytope right set is not decidable by vertices");
  }
}

template <class T>
Vec<T> shifted(const Vec<T>& b, const Vec<T>& e, const T& eps) {
  Vec<T> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - eps * e[i];
  return out;
}

template <class T>
bool margin_passes(Relation rel, const T& margin, const T& eps) {
  const T gap = margin - eps;
  return rel == Relation::LowerStrict ? Num<T>::pos(gap) : !Num<T>::neg(gap);
}

template <class T>
Vec<T> combine(const ImageSet<T>& a, const Vec<T>& lambda) {
  Vec<T> y(a.dim(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < y.size(); ++c) y[c] += lambda[i] * a.points[i][c];
  return y;
}

}  // namespace

template <class T>
T set_margin(const ImageSet<T>& a, const ImageSet<T>& b, const Cone<T>& cone) {
  check_pair(a, b, cone);
  T best = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    T m = point_margin(b.points[i], a, cone);
    if (i == 0 || m < best) best = std::move(m);
  }
  return best;
}

template <class T>
RelationCertificate<T> set_relation(const ImageSet<T>& a, const ImageSet<T>& b,
                                    const Cone<T>& cone, Relation rel, const T& eps) {
  check_pair(a, b, cone);
  if (Num<T>::neg(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  RelationCertificate<T> cert;
  cert.relation = rel;
  cert.eps = eps;
  for (std::size_t t = 0; t < b.size(); ++t) {
    typename RelationCertificate<T>::Witness w;
    w.target = t;
    bool ok = false;
    if (rel == Relation::LowerStrong) {
      const auto dom = nonzero_domination(shifted(b.points[t], cone.e(), eps), a, cone);
      ok = dom.holds;
      w.source = dom.index;
      w.lambda = dom.lambda;
    } else {
      auto pm = point_margin_witness(b.points[t], a, cone);
      ok = margin_passes(rel, pm.value, eps);
      w.source = pm.index;
      w.lambda = std::move(pm.lambda);
      w.margin = std::move(pm.value);
    }
    if (!ok) {
      cert.holds = false;
      cert.failing_target = t;
      cert.witnesses.clear();
      return cert;
    }
    cert.witnesses.push_back(std::move(w));
  }
  cert.holds = true;
  return cert;
}

template <class T>
bool verify_certificate(const RelationCertificate<T>& cert, const ImageSet<T>& a,
                        const ImageSet<T>& b, const Cone<T>& cone) {
  if (!cert.holds) {
    if (cert.failing_target >= b.size()) return false;
    const auto& target = b.points[cert.failing_target];
    if (cert.relation == Relation::LowerStrong) {
      return !nonzero_domination(shifted(target, cone.e(), cert.eps), a, cone).holds;
    }
    return !margin_passes(cert.relation, point_margin(target, a, cone), cert.eps);
  }
  if (cert.witnesses.size() != b.size()) return false;
  for (std::size_t t = 0; t < b.size(); ++t) {
    const auto& w = cert.witnesses[t];
    if (w.target != t) return false;
    Vec<T> y;
    if (a.is_finite()) {
      if (w.source >= a.size()) return false;
      y = a.points[w.source];
    } else {
      if (w.lambda.size() != a.size()) return false;
      T total = 0;
      for (const auto& l : w.lambda) {
        if (Num<T>::neg(l)) return false;
        total += l;
      }
      if (!Num<T>::zero(total - T(1))) return false;
      y = combine(a, w.lambda);
    }
    const auto& target = b.points[t];
    if (cert.relation == Relation::LowerStrong) {
      if (!cone.lneq(y, shifted(target, cone.e(), cert.eps))) return false;
    } else if (!margin_passes(cert.relation, cone.margin(y, target), cert.eps)) {
      return false;
    }
  }
  return true;
}

#define SETOPT_INSTANTIATE(T)                                                                   \
  template T set_margin(const ImageSet<T>&, const ImageSet<T>&, const Cone<T>&);                \
  template RelationCertificate<T> set_relation(const ImageSet<T>&, const ImageSet<T>&,          \
                                               const Cone<T>&, Relation, const T&);             \
  template bool verify_certificate(const RelationCertificate<T>&, const ImageSet<T>&,           \
                                   const ImageSet<T>&, const Cone<T>&);

SETOPT_INSTANTIATE(double)
SETOPT_INSTANTIATE(Rational)
#undef SETOPT_INSTANTIATE

}  // namespace setopt
