#pragma once

#include <functional>

#include "hk/homotopy.hpp"

namespace hk {

/// Finite set of test objects Y (sources of annihilating morphisms g: Y -> X0) and witnesses Z.
struct Window {
  std::vector<ObjectId> objects;
  /// The user asserts that the objects suffice (diagram windows with a length bound).
  bool asserted_complete = false;
  std::string description;
};

/// Every object of the category.
Window full_window(const Category& c);
Window make_window(const Category& c, std::vector<ObjectId> objects, std::string description);

/// Proof hook for witness completeness: a finite table presentation whose objects all lie in the
/// window. Every g: Y -> X0 from a direct sum splits into components from single objects.
bool window_complete(const Category& c, const Window& w);
/// Human-readable reason for the completeness status of w.
std::string completeness_note(const Category& c, const Window& w);

enum class Certainty { exact, asserted, window_bound };
std::string certainty_str(Certainty c);

/// A subquotient of hom(X0, A). With window_bound the true value is a subspace of this one.
struct KernelValue {
  SubQuotient value;
  Certainty certainty = Certainty::window_bound;
  std::string note;
};

/// For each Y in the window, a basis of {g ∈ hom(Y, X0) : f∘g = 0}.
std::vector<Morphism> annihilator_generators(const Morphism& f, const Window& w);

/// Σ_A(f) = H0(hom(X1, A) -> hom(X0, A) -> ∏_g hom(Y, A)) with g over the window annihilators.
KernelValue canonical_sigma(const AddObject& a, const Morphism& f, const Window& w);
/// Σ_A θ(f) = H0(hom(X1, A) -> hom(X0, A) -> Hom(ker θ(f), θA)).
SubQuotient sigma_theta(const Functor& th, const AddObject& a, const Morphism& f);
/// A = 1. Requires monoidal data.
KernelValue monoidal_sigma(const Morphism& f, const Window& w);
/// A = 1. Requires a monoidal functor.
SubQuotient monoidal_sigma_theta(const Functor& th, const Morphism& f);

/// Two subquotients of the same ambient with the same relations: numerator of a inside b's.
bool subquotient_included(const SubQuotient& a, const SubQuotient& b);
bool subquotient_equal(const SubQuotient& a, const SubQuotient& b);

enum class Verdict { certified, refuted, inconclusive };
std::string verdict_str(Verdict v);

/// Prexactness of θ at f: Y -> X. Certified: θ(Z) -> θ(Y) -> θ(X) is exact for the witness g.
/// Refuted: ker θ(f) is not covered by the joint image of all window witnesses and the window
/// is complete; the uncovered class is a vector of θ(Y).
struct PrexactResult {
  Morphism f;
  Verdict verdict;
  std::optional<Morphism> witness;
  std::string witness_kind;  // "zero", "single", "object", "joint"
  Matrix uncovered;
  std::string certificate;
  std::size_t kernel_dim = 0, covered_dim = 0;
};
PrexactResult prexact_check(const Functor& th, const Morphism& f, const Window& w);

struct PrexactVerdict {
  std::vector<PrexactResult> results;
  Verdict aggregate() const;
};
PrexactVerdict prexact_check(const Functor& th, const std::vector<Morphism>& fs, const Window& w);

/// Basis name for a single basis morphism, zero(X -> Y) when X or Y is 0, otherwise the block description;
/// followed by " : X -> Y" when the category has several objects.
std::string morphism_label(const Morphism& f);

/// All basis morphisms between window objects, ordered by (source, target, index).
std::vector<Morphism> window_morphisms(const Category& c, const Window& w);

/// Flatness of θ: a -> vec on weak kernels. The weak kernel of f is the joint annihilator over a
/// complete window; θ sends it to a weak kernel iff its image is ker θ(f).
struct FlatResult {
  std::string morphism;
  bool preserved;
  std::string note;
};
struct FlatVerdict {
  bool flat = true;
  bool complete = false;
  std::vector<FlatResult> results;
};
FlatVerdict flat_check(const Functor& th, const std::vector<Morphism>& fs, const Window& w);

/// A functor between truncated homotopy categories given on complexes and chain maps.
struct KbFunctor {
  std::string name;
  std::function<Complex(const Complex&)> on_objects;
  std::function<ChainMap(const ChainMap&)> on_maps;
};
KbFunctor kb_identity();
/// K^b₊ -> K^b; throws on complexes with nonzero terms in negative degrees.
KbFunctor kb_plus_inclusion();
/// u sends the cone weak kernel of each chain map to a weak kernel, tested against the complexes.
FlatVerdict flat_check_kb(const KbFunctor& u, const std::vector<ChainMap>& maps, const std::vector<Complex>& tests);

/// The three descriptions of the homological kernel at 1 for f: X0 -> X1: classes of Noy(f, N1)
/// killed by vec θ, Σθ(f), and classes of K^b(X_f, 1[0]) killed by θ^ℤ_Δ.
struct MuNuEntry {
  std::string morphism;
  std::size_t noy_dim, sigma_dim, kb_dim, ambient_dim;
  bool agree;
};
struct MuNuReport {
  std::vector<MuNuEntry> entries;
  std::size_t discrepancies = 0;
};
MuNuReport mu_nu_check(const Functor& th, const std::vector<Morphism>& fs);

/// Rank of Γ^p(k^n) -> ⊗^p k^n -> Sym^p(k^n) over F_p.
std::size_t fr_plus_dim(std::uint32_t p, std::size_t n);

}  // namespace hk
