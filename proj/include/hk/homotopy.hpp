#pragma once

#include <map>

#include "hk/category.hpp"

namespace hk {

// ---------------------------------------------------------------------------------------------
// Noy(a): objects are morphisms f: X0 -> X1 of the additive envelope.

/// Representative data of a hom space Noy(f, g) inside hom(X0, Y0).
struct NoyHom {
  SubQuotient space;
  AddObject source0, target0;  // X0 and Y0
};

/// Noy(f, g) = φ1⁻¹(im φ3) / im φ2 with φ1 = g∘-, φ3 = -∘f on hom(X1, Y1), φ2 = -∘f on hom(X1, Y0).
NoyHom noy_hom(const Morphism& f, const Morphism& g);
/// The object N A = (A -> 0).
Morphism noy_unit_object(const Category& c, const AddObject& a);

/// A morphism f -> g of Noy(a), represented by α: X0 -> Y0 with g∘α factoring through f.
struct NoyMorphism {
  Morphism source, target, alpha;
};

/// Throws if g∘α does not factor through f.
NoyMorphism make_noy_morphism(const Morphism& f, const Morphism& g, const Morphism& alpha);
Morphism noy_witness(const NoyMorphism& m);  // some β: X1 -> Y1 with g α = β f
NoyMorphism noy_compose(const NoyMorphism& b, const NoyMorphism& a);
/// α - α' factors through f.
bool noy_equal(const NoyMorphism& a, const NoyMorphism& b);
bool noy_is_zero(const NoyMorphism& a);
/// Class coordinates with respect to the representatives of noy_hom(source, target).
Matrix noy_coordinates(const NoyHom& h, const NoyMorphism& m);

struct NoyKernel {
  Morphism object;      // (f, α): X0 -> X1 ⊕ Y0
  NoyMorphism inclusion;  // represented by id_X0
};
NoyKernel noy_kernel(const NoyMorphism& alpha);
/// Universal property of a kernel tested against the objects h: the map
/// Noy(h, k) -> {β ∈ Noy(h, f) : α β = 0} is bijective.
bool verify_noy_kernel(const NoyKernel& k, const NoyMorphism& alpha, const std::vector<Morphism>& tests);

/// f ⊗ g = (X0 Y0 -> X1 Y0 ⊕ X0 Y1).
Morphism noy_tensor(const Morphism& f, const Morphism& g);

// ---------------------------------------------------------------------------------------------
// Bounded complexes and K^b(a). (X[1])^i = X^{i+1} with differential -d.

class Complex {
 public:
  /// objects[j] sits in degree lo + j; d[j]: objects[j] -> objects[j+1].
  Complex(const Category& c, int lo, std::vector<AddObject> objects, std::vector<Morphism> d);
  static Complex concentrated(const Category& c, const AddObject& x, int degree);
  /// f: X0 -> X1 placed in degrees 0 and 1.
  static Complex two_term(const Morphism& f, int lo = 0);

  const Category& category() const { return *cat_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
  bool empty_range() const { return objects_.empty(); }
  AddObject at(int i) const;
  /// d^i: X^i -> X^{i+1}; the zero map outside the range.
  Morphism d(int i) const;
  Complex shift(int k) const;
  /// Throws NotAComplex when some d^{i+1} d^i is nonzero.
  void validate() const;
  std::string str() const;

 private:
  const Category* cat_;
  int lo_;
  std::vector<AddObject> objects_;
  std::vector<Morphism> d_;
};

struct ChainMap {
  Complex source, target;
  std::map<int, Morphism> components;
  Morphism at(int i) const;  // zero when absent
};

ChainMap make_chain_map(const Complex& x, const Complex& y, std::map<int, Morphism> comps);
bool is_chain_map(const ChainMap& u);
ChainMap compose(const ChainMap& v, const ChainMap& u);
ChainMap identity_map(const Complex& x);
ChainMap chain_difference(const ChainMap& a, const ChainMap& b);

/// Layout of ⊕_i hom(X^i, Y^i) used by kb_hom.
struct KbHom {
  SubQuotient space;
  std::vector<int> degrees;           // degrees with a component
  std::vector<std::size_t> offsets;    // offset of each degree's block
  Complex source, target;
};
/// Chain maps modulo null-homotopic ones.
KbHom kb_hom(const Complex& x, const Complex& y);
Matrix chain_map_coordinates(const KbHom& h, const ChainMap& u);
ChainMap chain_map_from_column(const KbHom& h, const Matrix& v, std::size_t col);
bool is_null_homotopic(const ChainMap& u);

/// Cone(u)^i = X^{i+1} ⊕ Y^i, d = [[-d_X, 0], [u, d_Y]].
Complex cone(const ChainMap& u);
ChainMap cone_inclusion(const ChainMap& u);   // Y -> Cone(u)
ChainMap cone_projection(const ChainMap& u);  // Cone(u) -> X[1]
struct WeakKernel {
  Complex object;  // Cone(u)[-1]
  ChainMap map;    // Cone(u)[-1] -> X
};
WeakKernel weak_kernel_kb(const ChainMap& u);
/// Every v: T -> X with u v ≃ 0 factors through the weak kernel up to homotopy, for each test T.
bool verify_weak_kernel(const WeakKernel& w, const ChainMap& u, const std::vector<Complex>& tests);

/// (X ⊗ Y)^n = ⊕_{a+b=n} X^a ⊗ Y^b with d = d ⊗ 1 + (-1)^a 1 ⊗ d; summands ordered by a.
Complex tensor_complexes(const Complex& x, const Complex& y);
Complex direct_sum(const Complex& x, const Complex& y);

// ---------------------------------------------------------------------------------------------
// Functors induced by θ: a -> vec.

/// vec θ(f) = ker θ(f), as a basis of columns in θ(X0).
Matrix vec_theta(const Functor& th, const Morphism& f);
/// The induced map ker θ(f) -> ker θ(g) in the kernel bases of vec_theta.
Matrix vec_theta_map(const Functor& th, const NoyMorphism& a);

using GradedSpace = std::map<int, SubQuotient>;
/// θ^ℤ_Δ(X) = ⊕_i H^i(θX), all degrees in the range of X (zero parts included).
GradedSpace theta_delta(const Functor& th, const Complex& x);
SubQuotient theta_delta0(const Functor& th, const Complex& x);
/// θ⁰₊: theta_delta0 on complexes supported in non-negative degrees.
SubQuotient theta_plus0(const Functor& th, const Complex& x);
/// The map H^i(θX) -> H^i(θY) induced by u, in representative coordinates.
Matrix homology_map(const Functor& th, const ChainMap& u, int degree);

}  // namespace hk
