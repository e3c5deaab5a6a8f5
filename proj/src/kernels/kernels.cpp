#include "hk/kernels.hpp"

#include <algorithm>
#include <set>

namespace hk {

namespace {

// Column-major flattening of a matrix into a single column.
Matrix flatten(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.entry_is_zero(i, j)) v.set(j * m.rows() + i, 0, m.at(i, j));
  return v;
}

std::vector<Morphism> hom_basis(const Category& c, const AddObject& x, const AddObject& y) {
  HomSpace h = hom_space(c, x, y);
  Matrix id = Matrix::identity(c.field(), h.dim);
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < h.dim; ++i) out.push_back(morphism_from_column(c, x, y, id, i));
  return out;
}

// Numerator span of the kernel of psi (columns indexed by hom(X0, A)) over the relations im(-∘f).
SubQuotient kernel_mod_relations(const Category& c, const AddObject& a, const Morphism& f, const Matrix& psi) {
  std::size_t ambient = hom_space(c, f.source(), a).dim;
  Matrix num = psi.rows() ? kernel_basis(psi) : Matrix::identity(c.field(), ambient);
  return make_subquotient(c.field(), ambient, num, precompose_matrix(f, a));
}

}  // namespace

std::string morphism_label(const Morphism& f) {
  const Category& c = f.category();
  if (f.source().empty() || f.target().empty())
    return "zero(" + object_str(c, f.source()) + " -> " + object_str(c, f.target()) + ")";
  std::string s = f.str();
  if (f.source().size() == 1 && f.target().size() == 1) {
    SparseVec v = f.block(0, 0);
    if (v.size() == 1 && v[0].coeff.is_one()) s = c.basis_name(f.source()[0], f.target()[0], v[0].index);
  }
  if (c.object_count() > 1) s += " : " + object_str(c, f.source()) + " -> " + object_str(c, f.target());
  return s;
}

Window full_window(const Category& c) { return Window{all_objects(c), false, "all objects"}; }

Window make_window(const Category& c, std::vector<ObjectId> objects, std::string description) {
  for (ObjectId x : objects)
    if (x >= c.object_count()) throw ShapeError("window object out of range");
  return Window{std::move(objects), false, std::move(description)};
}

bool window_complete(const Category& c, const Window& w) {
  if (!c.finite_presentation()) return false;
  std::set<ObjectId> in(w.objects.begin(), w.objects.end());
  for (ObjectId x = 0; x < c.object_count(); ++x)
    if (!in.count(x)) return false;
  return true;
}

std::string completeness_note(const Category& c, const Window& w) {
  if (window_complete(c, w)) return "complete: finite table presentation with every object in the window";
  if (w.asserted_complete) return "complete by user assertion (" + w.description + ")";
  return "not known to be complete (" + w.description + ")";
}

std::string certainty_str(Certainty c) {
  switch (c) {
    case Certainty::exact: return "exact";
    case Certainty::asserted: return "asserted";
    case Certainty::window_bound: return "window-bound";
  }
  return "";
}

std::vector<Morphism> annihilator_generators(const Morphism& f, const Window& w) {
  const Category& c = f.category();
  std::vector<Morphism> out;
  for (ObjectId y : w.objects) {
    AddObject ys{y};
    if (!hom_space(c, ys, f.source()).dim) continue;
    Matrix g = kernel_basis(postcompose_matrix(f, ys));
    for (std::size_t j = 0; j < g.cols(); ++j) out.push_back(morphism_from_column(c, ys, f.source(), g, j));
  }
  return out;
}

KernelValue canonical_sigma(const AddObject& a, const Morphism& f, const Window& w) {
  const Category& c = f.category();
  const FieldSpec& fs = c.field();
  std::vector<Morphism> ms = hom_basis(c, f.source(), a);
  std::vector<Matrix> blocks;
  for (ObjectId y : w.objects) {
    AddObject ys{y};
    if (!hom_space(c, ys, f.source()).dim || !hom_space(c, ys, a).dim) continue;
    Matrix g = kernel_basis(postcompose_matrix(f, ys));
    if (!g.cols()) continue;
    std::vector<Matrix> cols;
    for (const Morphism& m : ms) cols.push_back(flatten(postcompose_matrix(m, ys) * g));
    std::size_t rows = hom_space(c, ys, a).dim * g.cols();
    blocks.push_back(Matrix::hstack(cols, fs, rows));
  }
  Matrix psi = Matrix::vstack(blocks, fs, ms.size());
  KernelValue kv{kernel_mod_relations(c, a, f, psi), Certainty::window_bound, completeness_note(c, w)};
  if (window_complete(c, w))
    kv.certainty = Certainty::exact;
  else if (w.asserted_complete)
    kv.certainty = Certainty::asserted;
  return kv;
}

SubQuotient sigma_theta(const Functor& th, const AddObject& a, const Morphism& f) {
  const Category& c = f.category();
  if (&th.source() != &c) throw ShapeError("sigma_theta: functor and morphism live on different categories");
  Matrix k = kernel_basis(apply(th, f));
  std::vector<Morphism> ms = hom_basis(c, f.source(), a);
  std::vector<Matrix> cols;
  for (const Morphism& m : ms) cols.push_back(flatten(apply(th, m) * k));
  Matrix psi = Matrix::hstack(cols, c.field(), dim(th, a) * k.cols());
  return kernel_mod_relations(c, a, f, psi);
}

KernelValue monoidal_sigma(const Morphism& f, const Window& w) {
  const Category& c = f.category();
  if (!c.is_monoidal()) throw MissingData("monoidal canonical kernel: category has no monoidal data");
  return canonical_sigma({c.unit()}, f, w);
}

SubQuotient monoidal_sigma_theta(const Functor& th, const Morphism& f) {
  const Category& c = f.category();
  if (!c.is_monoidal()) throw MissingData("homological kernel: category has no monoidal data");
  if (!th.is_monoidal()) throw MissingData("homological kernel: functor is not monoidal");
  return sigma_theta(th, {c.unit()}, f);
}

bool subquotient_included(const SubQuotient& a, const SubQuotient& b) {
  return a.ambient == b.ambient && in_span(b.numerator(), a.numerator());
}

bool subquotient_equal(const SubQuotient& a, const SubQuotient& b) {
  return a.ambient == b.ambient && same_span(a.numerator(), b.numerator()) && same_span(a.relations, b.relations);
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "";
}

PrexactResult prexact_check(const Functor& th, const Morphism& f, const Window& w) {
  const Category& c = f.category();
  PrexactResult r{f, Verdict::inconclusive, std::nullopt, "", {}, "", 0, 0};
  Matrix k = kernel_basis(apply(th, f));
  r.kernel_dim = k.cols();
  auto exact_at = [&](const Morphism& g) { return same_span(image_basis(apply(th, g)), k); };
  auto certify = [&](const Morphism& g, const char* kind) {
    r.verdict = Verdict::certified;
    r.witness = g;
    r.witness_kind = kind;
    r.covered_dim = r.kernel_dim;
    return r;
  };
  if (!k.cols()) return certify(zero_morphism(c, {}, f.source()), "zero");
  std::vector<Morphism> gens = annihilator_generators(f, w);
  for (const Morphism& g : gens)
    if (exact_at(g)) return certify(g, "single");
  for (std::size_t i = 0; i < gens.size();) {
    std::size_t j = i;
    std::vector<Morphism> same;
    while (j < gens.size() && gens[j].source() == gens[i].source()) same.push_back(gens[j++]);
    if (same.size() > 1) {
      Morphism g = join_sources(same);
      if (exact_at(g)) return certify(g, "object");
    }
    i = j;
  }
  Matrix covered(c.field(), k.rows(), 0);
  if (!gens.empty()) {
    Morphism g = join_sources(gens);
    if (exact_at(g)) return certify(g, "joint");
    covered = image_basis(apply(th, g));
  }
  r.covered_dim = covered.cols();
  Matrix rest = complement_in(covered, k);
  r.uncovered = rest.cols() ? rest.column(0) : rest;
  r.certificate = completeness_note(c, w);
  if (window_complete(c, w) || w.asserted_complete) r.verdict = Verdict::refuted;
  return r;
}

Verdict PrexactVerdict::aggregate() const {
  bool all = true;
  for (const auto& r : results) {
    if (r.verdict == Verdict::refuted) return Verdict::refuted;
    if (r.verdict != Verdict::certified) all = false;
  }
  return all ? Verdict::certified : Verdict::inconclusive;
}

PrexactVerdict prexact_check(const Functor& th, const std::vector<Morphism>& fs, const Window& w) {
  PrexactVerdict v;
  for (const Morphism& f : fs) v.results.push_back(prexact_check(th, f, w));
  return v;
}

std::vector<Morphism> window_morphisms(const Category& c, const Window& w) {
  std::vector<Morphism> out;
  for (ObjectId s : w.objects)
    for (ObjectId t : w.objects)
      for (std::size_t i = 0; i < c.hom_dim(s, t); ++i) out.push_back(Morphism::basis(c, s, t, i));
  return out;
}

FlatVerdict flat_check(const Functor& th, const std::vector<Morphism>& fs, const Window& w) {
  const Category& c = th.source();
  FlatVerdict v;
  v.complete = window_complete(c, w) || w.asserted_complete;
  for (const Morphism& f : fs) {
    std::vector<Morphism> gens = annihilator_generators(f, w);
    Matrix k = kernel_basis(apply(th, f));
    Matrix img = gens.empty() ? Matrix(c.field(), k.rows(), 0) : image_basis(apply(th, join_sources(gens)));
    FlatResult r{morphism_label(f), same_span(img, k), ""};
    r.note = "ker θ(f) dim " + std::to_string(k.cols()) + ", weak kernel image dim " + std::to_string(img.cols());
    if (!r.preserved) v.flat = false;
    v.results.push_back(r);
  }
  return v;
}

}  // namespace hk
