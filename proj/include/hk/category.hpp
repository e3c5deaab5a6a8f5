#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hk/linalg.hpp"

namespace hk {

using ObjectId = std::uint32_t;
/// Formal direct sum of generator objects, in order.
using AddObject = std::vector<ObjectId>;

struct Term {
  std::uint32_t index;
  Scalar coeff;
};
/// Coordinates in a hom basis: sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

SparseVec sparse_from_column(const Matrix& m, std::size_t col = 0);
Matrix dense_column(const FieldSpec& f, const SparseVec& v, std::size_t dim);
void sparse_axpy(SparseVec& acc, const Scalar& a, const SparseVec& v);

/// A k-linear category given by generator objects, finite hom bases and basis composition.
/// Monoidal, duality and braiding data are optional; the defaults throw MissingData.
class Category {
 public:
  virtual ~Category() = default;
  virtual const FieldSpec& field() const = 0;
  virtual std::string name() const = 0;
  virtual std::size_t object_count() const = 0;
  virtual std::string object_name(ObjectId x) const = 0;
  virtual std::optional<ObjectId> find_object(std::string_view name) const = 0;
  virtual std::size_t hom_dim(ObjectId src, ObjectId tgt) const = 0;
  virtual std::string basis_name(ObjectId src, ObjectId tgt, std::size_t i) const = 0;
  /// (basis g: y -> z) ∘ (basis f: x -> y) in the basis of hom(x, z).
  virtual SparseVec compose_basis(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const = 0;
  virtual SparseVec identity(ObjectId x) const = 0;
  /// True when every object of the additive envelope is a sum of the listed generators.
  virtual bool finite_presentation() const { return false; }

  virtual bool is_monoidal() const { return false; }
  virtual ObjectId unit() const;
  virtual ObjectId tensor_objects(ObjectId a, ObjectId b) const;
  /// (basis i: x -> y) ⊗ (basis j: x2 -> y2) in hom(x⊗x2, y⊗y2).
  virtual SparseVec tensor_basis(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                                 std::size_t j) const;
  virtual bool has_duals() const { return false; }
  virtual ObjectId dual(ObjectId x) const;
  /// ev_x in hom(x* ⊗ x, 1).
  virtual SparseVec ev(ObjectId x) const;
  /// co_x in hom(1, x ⊗ x*).
  virtual SparseVec co(ObjectId x) const;
  virtual bool has_braiding() const { return false; }
  /// Symmetry in hom(x⊗y, y⊗x).
  virtual SparseVec braiding(ObjectId x, ObjectId y) const;

  ObjectId require_object(std::string_view name) const;
};

/// Layout of hom(X, Y) for formal sums: blocks ordered target-major.
struct HomSpace {
  AddObject source, target;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
  std::size_t offset(std::size_t t, std::size_t s) const { return offsets[t * source.size() + s]; }
  std::size_t block_dim(const Category& c, std::size_t t, std::size_t s) const {
    return c.hom_dim(source[s], target[t]);
  }
};

HomSpace hom_space(const Category& c, const AddObject& x, const AddObject& y);

/// A morphism of the additive envelope: a block matrix of basis combinations.
class Morphism {
 public:
  Morphism(const Category& c, AddObject source, AddObject target);
  Morphism(const Category& c, AddObject source, AddObject target, Matrix coords);
  static Morphism basis(const Category& c, ObjectId s, ObjectId t, std::size_t i);
  static Morphism from_sparse(const Category& c, ObjectId s, ObjectId t, const SparseVec& v);
  static Morphism identity(const Category& c, const AddObject& x);

  const Category& category() const { return *cat_; }
  const AddObject& source() const { return space_.source; }
  const AddObject& target() const { return space_.target; }
  const HomSpace& space() const { return space_; }
  const Matrix& coords() const { return coords_; }
  SparseVec block(std::size_t t, std::size_t s) const;
  void add_block(std::size_t t, std::size_t s, const SparseVec& v, const Scalar& a);

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator-() const;
  Morphism scaled(const Scalar& s) const;
  bool operator==(const Morphism& o) const;
  bool operator!=(const Morphism& o) const { return !(*this == o); }
  bool is_zero() const { return coords_.is_zero(); }
  std::string str() const;

 private:
  void check_same_shape(const Morphism& o) const;
  const Category* cat_;
  HomSpace space_;
  Matrix coords_;
};

AddObject concat(const AddObject& a, const AddObject& b);
Morphism compose(const Morphism& g, const Morphism& f);
/// Matrix of g∘- : hom(X, source g) -> hom(X, target g).
Matrix postcompose_matrix(const Morphism& g, const AddObject& x);
/// Matrix of -∘f : hom(target f, Z) -> hom(source f, Z).
Matrix precompose_matrix(const Morphism& f, const AddObject& z);
/// Morphism with hom-space coordinates given by a column vector.
Morphism morphism_from_column(const Category& c, const AddObject& x, const AddObject& y, const Matrix& m,
                              std::size_t col);
/// (f_1, ..., f_n): X -> Y_1 ⊕ ... ⊕ Y_n.
Morphism join_targets(const std::vector<Morphism>& fs);
/// [g_1 ... g_n]: X_1 ⊕ ... ⊕ X_n -> Y.
Morphism join_sources(const std::vector<Morphism>& gs);
Morphism direct_sum(const Morphism& f, const Morphism& g);
Morphism zero_morphism(const Category& c, const AddObject& x, const AddObject& y);

AddObject tensor(const Category& c, const AddObject& x, const AddObject& y);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism ev_morphism(const Category& c, ObjectId x);
Morphism co_morphism(const Category& c, ObjectId x);
Morphism braiding_morphism(const Category& c, ObjectId x, ObjectId y);
std::string object_str(const Category& c, const AddObject& x);

/// A k-linear functor to finite-dimensional vector spaces; θ(f) is dim θ(target) x dim θ(source).
class Functor {
 public:
  virtual ~Functor() = default;
  virtual const Category& source() const = 0;
  virtual std::string name() const = 0;
  virtual std::size_t dim(ObjectId x) const = 0;
  virtual Matrix basis_image(ObjectId s, ObjectId t, std::size_t i) const = 0;
  /// Strict monoidal: θ(X⊗Y) = θX ⊗ θY with Kronecker ordering, θ(1) = k.
  virtual bool is_monoidal() const { return false; }
};

std::size_t dim(const Functor& th, const AddObject& x);
Matrix apply(const Functor& th, const Morphism& f);

/// Functor given by explicit tables.
class TableFunctor : public Functor {
 public:
  TableFunctor(const Category& c, std::string name) : cat_(&c), name_(std::move(name)) {}
  const Category& source() const override { return *cat_; }
  std::string name() const override { return name_; }
  std::size_t dim(ObjectId x) const override;
  Matrix basis_image(ObjectId s, ObjectId t, std::size_t i) const override;
  bool is_monoidal() const override { return monoidal_; }

  void set_dim(ObjectId x, std::size_t d);
  void set_image(ObjectId s, ObjectId t, std::size_t i, Matrix m);
  void set_monoidal(bool m) { monoidal_ = m; }

 private:
  const Category* cat_;
  std::string name_;
  std::map<ObjectId, std::size_t> dims_;
  std::map<std::tuple<ObjectId, ObjectId, std::size_t>, Matrix> images_;
  bool monoidal_ = false;
};

struct BasisRef {
  ObjectId source, target;
  std::size_t index;
};

/// Explicit finite presentation by structure constants.
class TableCategory : public Category {
 public:
  TableCategory(std::string name, const FieldSpec& f) : name_(std::move(name)), field_(f) {}

  const FieldSpec& field() const override { return field_; }
  std::string name() const override { return name_; }
  std::size_t object_count() const override { return objects_.size(); }
  std::string object_name(ObjectId x) const override;
  std::optional<ObjectId> find_object(std::string_view name) const override;
  std::size_t hom_dim(ObjectId src, ObjectId tgt) const override;
  std::string basis_name(ObjectId src, ObjectId tgt, std::size_t i) const override;
  SparseVec compose_basis(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const override;
  SparseVec identity(ObjectId x) const override;
  bool finite_presentation() const override { return true; }

  bool is_monoidal() const override { return unit_.has_value(); }
  ObjectId unit() const override;
  ObjectId tensor_objects(ObjectId a, ObjectId b) const override;
  SparseVec tensor_basis(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                         std::size_t j) const override;
  bool has_duals() const override { return !duals_.empty(); }
  ObjectId dual(ObjectId x) const override;
  SparseVec ev(ObjectId x) const override;
  SparseVec co(ObjectId x) const override;
  bool has_braiding() const override { return !braidings_.empty(); }
  SparseVec braiding(ObjectId x, ObjectId y) const override;

  ObjectId add_object(const std::string& name);
  void set_hom_basis(ObjectId s, ObjectId t, std::vector<std::string> names);
  void set_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f, SparseVec v);
  bool has_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const;
  void set_identity(ObjectId x, SparseVec v);
  void set_unit(ObjectId u) { unit_ = u; }
  void set_object_tensor(ObjectId a, ObjectId b, ObjectId c);
  void set_basis_tensor(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2, std::size_t j,
                        SparseVec v);
  bool has_basis_tensor(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2, std::size_t j) const;
  bool has_object_tensor(ObjectId a, ObjectId b) const { return obj_tensor_.count({a, b}) > 0; }
  void set_dual(ObjectId x, ObjectId xd, SparseVec ev, SparseVec co);
  void set_braiding(ObjectId x, ObjectId y, SparseVec v);
  std::optional<BasisRef> find_basis(std::string_view name) const;
  bool has_identity(ObjectId x) const { return identities_.count(x) > 0; }

 private:
  struct Dual {
    ObjectId object;
    SparseVec ev, co;
  };
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> objects_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<std::string>> bases_;
  std::map<std::string, BasisRef, std::less<>> basis_lookup_;
  std::map<std::tuple<ObjectId, ObjectId, ObjectId, std::size_t, std::size_t>, SparseVec> comp_;
  std::map<ObjectId, SparseVec> identities_;
  std::optional<ObjectId> unit_;
  std::map<std::pair<ObjectId, ObjectId>, ObjectId> obj_tensor_;
  std::map<std::tuple<ObjectId, ObjectId, std::size_t, ObjectId, ObjectId, std::size_t>, SparseVec> basis_tensor_;
  std::map<ObjectId, Dual> duals_;
  std::map<std::pair<ObjectId, ObjectId>, SparseVec> braidings_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

/// Identity laws and associativity on every composable basis triple among the given objects
/// (all objects when empty), plus monoidal and duality checks when that data is present.
ValidationReport validate_category(const Category& c, const std::vector<ObjectId>& objects = {});
/// Functoriality on basis pairs, images of identities, and tensor compatibility when monoidal.
ValidationReport validate_functor(const Functor& th, const std::vector<ObjectId>& objects = {});
/// θ is injective on hom(X, Y) for all X, Y in the window.
bool is_faithful_on_window(const Functor& th, const std::vector<ObjectId>& window);

std::vector<ObjectId> all_objects(const Category& c);

}  // namespace hk
