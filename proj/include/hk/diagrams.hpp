#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "hk/category.hpp"

namespace hk::diagrams {

enum class Family { OB, MO, EN, Seq };

/// OB/EN letters: 0 = •, 1 = ∘. MO letters: 0 = •, 1 = ∘, 2 = ■, 3 = □. Seq letters: the index i of X_i.
using Letter = int;
using Word = std::vector<Letter>;

/// A pairing between source and target words. Source occurrences are numbered 0..s-1 left to
/// right, target occurrences s..s+t-1; pairs are stored (smaller, larger) and sorted.
struct PairingDiagram {
  Word source, target;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
  std::vector<std::uint16_t> dots;  // per pair, EN only
  std::string key() const;
  unsigned total_dots() const;
};

struct DiagramParams {
  Family family = Family::OB;
  FieldSpec field;
  Scalar delta;                // OB, MO: value of plain loops
  Scalar t;                    // MO: value of loops through ■/□
  std::vector<Scalar> deltas;  // EN: value of a loop with i dots
  unsigned max_len = 2;
  unsigned max_dots = 0;  // EN
  int index_bound = 2;    // Seq: letters X_i with |i| <= bound
};

/// Lazily enumerated diagram category truncated to words of length <= max_len.
class DiagramCategory : public Category {
 public:
  explicit DiagramCategory(DiagramParams p);

  const FieldSpec& field() const override { return params_.field; }
  std::string name() const override;
  std::size_t object_count() const override { return words_.size(); }
  std::string object_name(ObjectId x) const override;
  std::optional<ObjectId> find_object(std::string_view name) const override;
  std::size_t hom_dim(ObjectId src, ObjectId tgt) const override;
  std::string basis_name(ObjectId src, ObjectId tgt, std::size_t i) const override;
  SparseVec compose_basis(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const override;
  SparseVec identity(ObjectId x) const override;

  bool is_monoidal() const override { return true; }
  ObjectId unit() const override { return 0; }
  ObjectId tensor_objects(ObjectId a, ObjectId b) const override;
  SparseVec tensor_basis(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                         std::size_t j) const override;
  bool has_duals() const override { return true; }
  ObjectId dual(ObjectId x) const override;
  SparseVec ev(ObjectId x) const override;
  SparseVec co(ObjectId x) const override;
  bool has_braiding() const override { return params_.family != Family::Seq; }
  SparseVec braiding(ObjectId x, ObjectId y) const override;

  const DiagramParams& params() const { return params_; }
  Family family() const { return params_.family; }
  const Word& word(ObjectId x) const { return words_.at(x); }
  ObjectId require_word(const Word& w) const;
  std::optional<ObjectId> find_word(const Word& w) const;
  std::string word_str(const Word& w) const;
  Word parse_word(std::string_view text) const;
  const std::vector<PairingDiagram>& hom_basis(ObjectId s, ObjectId t) const;
  /// Index of a diagram in its hom basis; throws if it is not a basis diagram.
  std::size_t basis_index(const PairingDiagram& d) const;
  bool is_legal(const PairingDiagram& d) const;
  /// Stacks g on top of f; closed loops are removed and their values multiplied into factor.
  PairingDiagram compose_diagrams(const PairingDiagram& g, const PairingDiagram& f, Scalar& factor) const;
  PairingDiagram juxtapose(const PairingDiagram& a, const PairingDiagram& b) const;
  Morphism diagram_morphism(const PairingDiagram& d) const;

 private:
  struct HomBasis {
    std::vector<PairingDiagram> diagrams;
    std::unordered_map<std::string, std::size_t> index;
  };
  const HomBasis& basis_for(ObjectId s, ObjectId t) const;
  bool pair_allowed(const Word& src, const Word& tgt, unsigned a, unsigned b) const;
  std::vector<Letter> alphabet() const;
  std::string letter_str(Letter l) const;
  Word dual_word(const Word& w) const;

  DiagramParams params_;
  std::vector<Word> words_;
  std::map<Word, ObjectId> word_ids_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<ObjectId, ObjectId>, std::unique_ptr<HomBasis>> cache_;
};

std::unique_ptr<DiagramCategory> build_OB(const Scalar& delta, unsigned max_len);
std::unique_ptr<DiagramCategory> build_MO(const Scalar& delta, const Scalar& t, unsigned max_len);
std::unique_ptr<DiagramCategory> build_EN(const std::vector<Scalar>& deltas, unsigned max_len, unsigned max_dots);
std::unique_ptr<DiagramCategory> build_Seq(const FieldSpec& f, unsigned max_len, int index_bound);

/// Permutation diagram w -> w·perm: target occurrence k is joined to source occurrence perm[k].
PairingDiagram permutation_diagram(const Word& w, const std::vector<unsigned>& perm);
/// μ: • -> ■ in MO.
Morphism mu_morphism(const DiagramCategory& mo);
/// ε: • -> • with one dot in EN.
Morphism dot_morphism(const DiagramCategory& en);
/// ι = (co_{X0}, X0 ⊗ ev_{X1} ⊗ X1): 1 ⊕ X0X2X1X1 -> X0X1 in Seq.
Morphism iota_morphism(const DiagramCategory& seq);
/// f: ∘^p •^p -> (∘^p •^p)^{⊕(2p-2)} with components (1 - s_i) ⊗ id and id ⊗ (1 - s_i).
Morphism frobenius_test_morphism(const DiagramCategory& ob, unsigned p);

/// The tensor-contraction functor V ↦ k^n (and W ↦ k^m for MO), strict monoidal.
/// Strands from an up letter (•, ■) or into a down letter carry matrix entries S[to][from]:
/// identity for plain strands, M for mixed MO strands, A^d for EN strands with d dots.
class VectorFunctor : public Functor {
 public:
  VectorFunctor(const DiagramCategory& c, std::size_t n, std::size_t m = 0, Matrix mu = {}, Matrix endo = {});
  const Category& source() const override { return *cat_; }
  std::string name() const override;
  std::size_t dim(ObjectId x) const override;
  Matrix basis_image(ObjectId s, ObjectId t, std::size_t i) const override;
  bool is_monoidal() const override { return true; }
  Matrix diagram_image(const PairingDiagram& d) const;

 private:
  std::size_t letter_dim(Letter l) const;
  const DiagramCategory* cat_;
  std::size_t n_, m_;
  Matrix mu_, endo_;
};

/// Category-description text for the materialized truncation to words of length <= len.
std::string export_presentation(const DiagramCategory& c, unsigned len);

}  // namespace hk::diagrams
