#include "hk/homotopy.hpp"

namespace hk {

Matrix vec_theta(const Functor& th, const Morphism& f) { return kernel_basis(apply(th, f)); }

Matrix vec_theta_map(const Functor& th, const NoyMorphism& a) {
  Matrix kf = vec_theta(th, a.source), kg = vec_theta(th, a.target);
  Matrix img = apply(th, a.alpha) * kf;
  auto x = solve(kg, img);
  if (!x) throw Error("internal error: θ(α) does not preserve kernels");
  return *x;
}

namespace {

SubQuotient homology_at(const Functor& th, const Complex& x, int i) {
  return homology_mid(apply(th, x.d(i - 1)), apply(th, x.d(i)));
}

}  // namespace

GradedSpace theta_delta(const Functor& th, const Complex& x) {
  GradedSpace g;
  for (int i = x.lo(); i <= x.hi(); ++i) g.emplace(i, homology_at(th, x, i));
  return g;
}

SubQuotient theta_delta0(const Functor& th, const Complex& x) { return homology_at(th, x, 0); }

SubQuotient theta_plus0(const Functor& th, const Complex& x) {
  for (int i = x.lo(); i < 0; ++i)
    if (!x.at(i).empty()) throw Error("θ⁰₊ is defined on complexes supported in non-negative degrees");
  return theta_delta0(th, x);
}

Matrix homology_map(const Functor& th, const ChainMap& u, int degree) {
  SubQuotient hx = homology_at(th, u.source, degree), hy = homology_at(th, u.target, degree);
  return hy.coordinates(apply(th, u.at(degree)) * hx.reps);
}

}  // namespace hk
