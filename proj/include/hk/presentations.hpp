#pragma once

#include "hk/category.hpp"

namespace hk {

/// The one-object category of the algebra k[x]/x^n, basis id, x, x2, ..., x{n-1}.
/// Monoidal by multiplication (⊗ over the algebra): unit R, R ⊗ R = R, self-dual with ev = co = id.
std::unique_ptr<TableCategory> truncated_polynomial(const FieldSpec& f, unsigned n);
inline std::unique_ptr<TableCategory> dual_numbers(const FieldSpec& f) { return truncated_polynomial(f, 2); }

/// One-object functor R ↦ k^d sending x to the given nilpotent matrix (powers follow).
std::unique_ptr<TableFunctor> polynomial_functor(const TableCategory& c, const std::string& name, const Matrix& x);

/// The named functors on the dual numbers: theta_k2, theta_k3 (x ↦ E12), theta_x0 (R ↦ k, x ↦ 0),
/// theta_zero (R ↦ 0) and theta_m2 (R ↦ M2(k) with x acting by right multiplication with E12).
std::unique_ptr<TableFunctor> dual_number_functor(const TableCategory& c, const std::string& name);
std::vector<std::string> dual_number_functor_names();

/// Identity functor of a one-object algebra category: R ↦ the regular representation.
std::unique_ptr<TableFunctor> regular_functor(const TableCategory& c);

}  // namespace hk
