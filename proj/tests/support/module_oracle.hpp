#pragma once

// Brute-force module homs over R = k[x]/x^2, independent of the Noy construction: ker f is
// computed as a k-subspace of k^{2m} with its x-action, and Hom_R is the space of k-linear maps
// commuting with x.

#include "hk/category.hpp"

namespace testing {

/// Entries (a, b) mean a + b x; matrix[i][j] is the entry in row (target) i and column (source) j.
struct RMatrix {
  std::size_t m = 0, n = 0;
  std::vector<std::vector<std::pair<long, long>>> entries;
};

struct ModuleObject {
  std::string name;
  RMatrix matrix;
  hk::Morphism morphism;
};

/// k-matrix of f on R^m = k^{2m} with basis (e_j, x e_j).
inline hk::Matrix real_matrix(const RMatrix& r, const hk::FieldSpec& f) {
  hk::Matrix a(f, 2 * r.n, 2 * r.m);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.m; ++j) {
      auto [c0, c1] = r.entries[i][j];
      a.set(2 * i, 2 * j, hk::Scalar(f, c0));
      a.set(2 * i + 1, 2 * j + 1, hk::Scalar(f, c0));
      a.set(2 * i + 1, 2 * j, hk::Scalar(f, c1));
    }
  return a;
}

/// Basis of ker f and the matrix of x in that basis.
inline std::pair<hk::Matrix, hk::Matrix> kernel_module(const RMatrix& r, const hk::FieldSpec& f) {
  hk::Matrix basis = r.n ? hk::kernel_basis(real_matrix(r, f)) : hk::Matrix::identity(f, 2 * r.m);
  hk::Matrix x(f, 2 * r.m, 2 * r.m);
  for (std::size_t j = 0; j < r.m; ++j) x.set(2 * j + 1, 2 * j, hk::Scalar::one(f));
  if (!basis.cols()) return {basis, hk::Matrix(f, 0, 0)};
  auto coords = hk::solve(basis, x * basis);
  if (!coords) throw hk::Error("kernel is not x-stable");
  return {basis, *coords};
}

/// dim {Φ : q x p | Φ A = B Φ}.
inline std::size_t module_hom_dim(const RMatrix& a, const RMatrix& b, const hk::FieldSpec& f) {
  hk::Matrix xa = kernel_module(a, f).second, xb = kernel_module(b, f).second;
  std::size_t p = xa.rows(), q = xb.rows();
  if (!p || !q) return 0;
  // Unknown Φ(i, j) at index i * p + j; equation (i, l): Σ_j Φ(i, j) A(j, l) - Σ_k B(i, k) Φ(k, l).
  hk::Matrix eq(f, q * p, q * p);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t l = 0; l < p; ++l) {
      std::size_t row = i * p + l;
      for (std::size_t j = 0; j < p; ++j) eq.add_to(row, i * p + j, xa.at(j, l));
      for (std::size_t k = 0; k < q; ++k) eq.add_to(row, k * p + l, -xb.at(i, k));
    }
  return q * p - hk::rank(eq);
}

inline hk::Morphism to_morphism(const hk::Category& c, const RMatrix& r) {
  const hk::FieldSpec& f = c.field();
  hk::Morphism g(c, hk::AddObject(r.m, 0), hk::AddObject(r.n, 0));
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.m; ++j) {
      auto [c0, c1] = r.entries[i][j];
      hk::SparseVec v;
      if (hk::Scalar(f, c0) != hk::Scalar::zero(f)) v.push_back({0, hk::Scalar(f, c0)});
      if (hk::Scalar(f, c1) != hk::Scalar::zero(f)) v.push_back({1, hk::Scalar(f, c1)});
      g.add_block(i, j, v, hk::Scalar::one(f));
    }
  return g;
}

/// N R, x, N R², (x, x), [x 0], x ⊕ x, id, 0, [1 x] on the dual numbers.
inline std::vector<ModuleObject> module_test_objects(const hk::Category& dual_numbers) {
  std::vector<std::pair<std::string, RMatrix>> specs{
      {"N R", {1, 0, {}}},
      {"x", {1, 1, {{{0, 1}}}}},
      {"N R2", {2, 0, {}}},
      {"(x, x)", {1, 2, {{{0, 1}}, {{0, 1}}}}},
      {"[x 0]", {2, 1, {{{0, 1}, {0, 0}}}}},
      {"x + x", {2, 2, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}}},
      {"id", {1, 1, {{{1, 0}}}}},
      {"0", {1, 1, {{{0, 0}}}}},
      {"[1 x]", {2, 1, {{{1, 0}, {0, 1}}}}}};
  std::vector<ModuleObject> out;
  for (auto& [name, r] : specs) out.push_back({name, r, to_morphism(dual_numbers, r)});
  return out;
}

}  // namespace testing
