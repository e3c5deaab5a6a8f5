#include "hk/homotopy.hpp"

namespace hk {

namespace {

Matrix phi2(const Morphism& f, const AddObject& y0) { return precompose_matrix(f, y0); }

}  // namespace

NoyHom noy_hom(const Morphism& f, const Morphism& g) {
  if (&f.category() != &g.category()) throw ShapeError("noy_hom: different categories");
  const Category& c = f.category();
  const AddObject &x0 = f.source(), &y0 = g.source(), &y1 = g.target();
  Matrix p1 = postcompose_matrix(g, x0);
  Matrix p3 = precompose_matrix(f, y1);
  Matrix num = preimage(p1, p3);
  std::size_t ambient = hom_space(c, x0, y0).dim;
  return NoyHom{make_subquotient(c.field(), ambient, num, phi2(f, y0)), x0, y0};
}

Morphism noy_unit_object(const Category& c, const AddObject& a) { return zero_morphism(c, a, {}); }

NoyMorphism make_noy_morphism(const Morphism& f, const Morphism& g, const Morphism& alpha) {
  if (alpha.source() != f.source() || alpha.target() != g.source())
    throw ShapeError("Noy morphism representative has the wrong source or target");
  NoyMorphism m{f, g, alpha};
  noy_witness(m);
  return m;
}

Morphism noy_witness(const NoyMorphism& m) {
  const Category& c = m.source.category();
  Matrix p3 = precompose_matrix(m.source, m.target.target());
  auto sol = solve(p3, compose(m.target, m.alpha).coords());
  if (!sol) throw Error("g∘α does not factor through f: not a morphism of Noy");
  return Morphism(c, m.source.target(), m.target.target(), *sol);
}

NoyMorphism noy_compose(const NoyMorphism& b, const NoyMorphism& a) {
  if (a.target != b.source) throw ShapeError("noy_compose: objects do not match");
  return NoyMorphism{a.source, b.target, compose(b.alpha, a.alpha)};
}

bool noy_equal(const NoyMorphism& a, const NoyMorphism& b) {
  if (a.source != b.source || a.target != b.target) return false;
  return in_span(phi2(a.source, a.target.source()), (a.alpha - b.alpha).coords());
}

bool noy_is_zero(const NoyMorphism& a) { return in_span(phi2(a.source, a.target.source()), a.alpha.coords()); }

Matrix noy_coordinates(const NoyHom& h, const NoyMorphism& m) { return h.space.coordinates(m.alpha.coords()); }

NoyKernel noy_kernel(const NoyMorphism& alpha) {
  const Category& c = alpha.source.category();
  Morphism k = join_targets({alpha.source, alpha.alpha});
  NoyMorphism inc = make_noy_morphism(k, alpha.source, Morphism::identity(c, alpha.source.source()));
  return NoyKernel{k, inc};
}

bool verify_noy_kernel(const NoyKernel& k, const NoyMorphism& alpha, const std::vector<Morphism>& tests) {
  const Morphism& f = alpha.source;
  for (const Morphism& h : tests) {
    NoyHom hk = noy_hom(h, k.object), hf = noy_hom(h, f), hg = noy_hom(h, alpha.target);
    // Composition with the inclusion keeps representatives (it is represented by an identity).
    Matrix image = hf.space.coordinates(hk.space.reps);
    if (rank(image) != hk.space.dim()) return false;
    Matrix m = postcompose_matrix(alpha.alpha, h.source()) * hf.space.reps;
    Matrix killed = preimage(m, hg.space.relations);
    if (!same_span(image, killed)) return false;
  }
  return true;
}

Morphism noy_tensor(const Morphism& f, const Morphism& g) {
  const Category& c = f.category();
  Morphism a = tensor(f, Morphism::identity(c, g.source()));
  Morphism b = tensor(Morphism::identity(c, f.source()), g);
  return join_targets({a, b});
}

}  // namespace hk
