#include <algorithm>
#include <map>

#include "hk/kernels.hpp"

namespace hk {

namespace {

Matrix flatten(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.entry_is_zero(i, j)) v.set(j * m.rows() + i, 0, m.at(i, j));
  return v;
}

// Span of relations plus the combinations of reps lying in the kernel of the map whose column j is
// the image of reps column j.
Matrix killed_numerator(const SubQuotient& s, const std::vector<Matrix>& images) {
  const FieldSpec& f = s.field;
  std::size_t rows = 0;
  for (const auto& m : images) rows = std::max(rows, m.rows());
  Matrix stacked(f, rows, images.size());
  for (std::size_t j = 0; j < images.size(); ++j) stacked.set_block(0, j, images[j]);
  Matrix comb = images.empty() ? Matrix(f, 0, 0) : kernel_basis(stacked);
  Matrix killed = s.reps.cols() ? s.reps * comb : Matrix(f, s.ambient, 0);
  return Matrix::hstack({s.relations, killed}, f, s.ambient);
}

void require_nonnegative(const Complex& x) {
  for (int i = x.lo(); i < 0; ++i)
    if (!x.at(i).empty()) throw Error("complex has terms in negative degrees: not in K^b₊");
}

}  // namespace

KbFunctor kb_identity() {
  return KbFunctor{"identity", [](const Complex& x) { return x; }, [](const ChainMap& u) { return u; }};
}

KbFunctor kb_plus_inclusion() {
  return KbFunctor{"K^b₊ inclusion",
                   [](const Complex& x) {
                     require_nonnegative(x);
                     return x;
                   },
                   [](const ChainMap& u) {
                     require_nonnegative(u.source);
                     require_nonnegative(u.target);
                     return u;
                   }};
}

FlatVerdict flat_check_kb(const KbFunctor& u, const std::vector<ChainMap>& maps, const std::vector<Complex>& tests) {
  FlatVerdict v;
  v.complete = false;
  for (const ChainMap& f : maps) {
    WeakKernel wk = weak_kernel_kb(f);
    WeakKernel image{u.on_objects(wk.object), u.on_maps(wk.map)};
    bool ok = verify_weak_kernel(image, u.on_maps(f), tests);
    v.results.push_back(FlatResult{f.source.str() + " -> " + f.target.str(), ok,
                                   "tested against " + std::to_string(tests.size()) + " complexes"});
    if (!ok) v.flat = false;
  }
  return v;
}

MuNuReport mu_nu_check(const Functor& th, const std::vector<Morphism>& fs) {
  MuNuReport rep;
  const Category& c = th.source();
  if (!c.is_monoidal()) throw MissingData("mu_nu_check: category has no monoidal data");
  AddObject one{c.unit()};
  for (const Morphism& f : fs) {
    // Noy(f, N1) and the kernel of vec θ on its classes.
    Morphism n1 = noy_unit_object(c, one);
    NoyHom nh = noy_hom(f, n1);
    std::vector<Matrix> noy_images;
    for (std::size_t j = 0; j < nh.space.dim(); ++j) {
      NoyMorphism a{f, n1, morphism_from_column(c, f.source(), one, nh.space.reps, j)};
      noy_images.push_back(flatten(vec_theta_map(th, a)));
    }
    Matrix noy_num = killed_numerator(nh.space, noy_images);

    SubQuotient sig = sigma_theta(th, one, f);

    // K^b(X_f, 1[0]) and the kernel of θ^ℤ_Δ.
    Complex xf = Complex::two_term(f);
    Complex u0 = Complex::concentrated(c, one, 0);
    KbHom kh = kb_hom(xf, u0);
    std::vector<Matrix> kb_images;
    for (std::size_t j = 0; j < kh.space.dim(); ++j) {
      ChainMap u = chain_map_from_column(kh, kh.space.reps, j);
      std::vector<Matrix> parts;
      for (int d = 0; d <= 1; ++d) parts.push_back(flatten(homology_map(th, u, d)));
      kb_images.push_back(Matrix::vstack(parts, c.field(), 1));
    }
    Matrix kb_num_full = killed_numerator(kh.space, kb_images);
    // Only degree 0 carries components: the ambient of kb_hom is hom(X0, 1) or zero.
    std::size_t amb = hom_space(c, f.source(), one).dim;
    Matrix kb_num = kh.space.ambient == amb ? kb_num_full : Matrix(c.field(), amb, 0);

    MuNuEntry e{morphism_label(f),
                rank(noy_num) - rank(nh.space.relations),
                sig.dim(),
                rank(kb_num) - rank(kh.space.relations),
                amb,
                false};
    e.agree = same_span(noy_num, sig.numerator()) && same_span(kb_num, sig.numerator()) &&
              same_span(nh.space.relations, sig.relations) && e.noy_dim == e.sigma_dim && e.kb_dim == e.sigma_dim;
    if (!e.agree) ++rep.discrepancies;
    rep.entries.push_back(e);
  }
  return rep;
}

std::size_t fr_plus_dim(std::uint32_t p, std::size_t n) {
  FieldSpec f = FieldSpec::prime(p);
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < p; ++i) {
    total *= n;
    if (total > 1024) throw WindowError("fr_plus_dim: tensor power too large");
  }
  if (n == 0) return 0;
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(p);
    for (std::uint32_t k = p; k-- > 0;) {
      d[k] = idx % n;
      idx /= n;
    }
    return d;
  };
  auto index = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (std::size_t v : d) idx = idx * n + v;
    return idx;
  };
  // Invariants of the adjacent transpositions.
  std::vector<Matrix> rels;
  for (std::uint32_t s = 0; s + 1 < p; ++s) {
    Matrix m = Matrix::identity(f, total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      auto d = digits(idx);
      std::swap(d[s], d[s + 1]);
      m.add_to(index(d), idx, Scalar(f, -1L));
    }
    rels.push_back(m);
  }
  Matrix gamma = rels.empty() ? Matrix::identity(f, total) : kernel_basis(Matrix::vstack(rels, f, total));
  // Projection onto multisets.
  std::map<std::vector<std::size_t>, std::size_t> sym;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto d = digits(idx);
    std::sort(d.begin(), d.end());
    sym.emplace(d, sym.size());
  }
  Matrix proj(f, sym.size(), total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto d = digits(idx);
    std::sort(d.begin(), d.end());
    proj.set(sym.at(d), idx, Scalar::one(f));
  }
  return rank(proj * gamma);
}

}  // namespace hk
