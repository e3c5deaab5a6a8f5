#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

/// The base field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q", "F<p>" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return kind == Kind::prime; }
  std::uint32_t characteristic() const { return is_prime() ? p : 0; }
  std::string name() const;
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

void require_same_field(const FieldSpec& a, const FieldSpec& b);

/// An element of a FieldSpec. Prime-field values are stored in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const FieldSpec& f, long v);
  Scalar(const FieldSpec& f, const mpq_class& q);
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0L); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1L); }
  /// Integers and fractions "a/b".
  static Scalar parse(const FieldSpec& f, std::string_view text);
  static Scalar from_mod(const FieldSpec& f, std::uint32_t v);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t mod_value() const { return mod_; }
  const mpq_class& rational() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  std::string str() const;

 private:
  FieldSpec field_;
  std::uint32_t mod_ = 0;
  mpq_class q_;
};

/// Dense matrix over a FieldSpec. Exactly one of the two backing stores is used.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows);
  /// A single column.
  static Matrix column_vector(const std::vector<Scalar>& entries, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix col_range(std::size_t begin, std::size_t end) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  static Matrix hstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t cols);
  Matrix kron(const Matrix& o) const;

  std::vector<Scalar> column_entries(std::size_t j) const;
  std::string str() const;

  // Raw access for the elimination kernels.
  std::vector<std::uint32_t>& mod_data() { return mod_; }
  const std::vector<std::uint32_t>& mod_data() const { return mod_; }
  std::vector<mpq_class>& rat_data() { return rat_; }
  const std::vector<mpq_class>& rat_data() const { return rat_; }

 private:
  void check_index(std::size_t i, std::size_t j) const;
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<mpq_class> rat_;
};

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form with leftmost-first pivoting.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns spanning ker m, one per free column in increasing order.
Matrix kernel_basis(const Matrix& m);
/// Pivot columns of m: a basis of its column space drawn from its own columns.
Matrix image_basis(const Matrix& m);
/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Whether every column of vecs lies in the column span of basis.
bool in_span(const Matrix& basis, const Matrix& vecs);
bool same_span(const Matrix& a, const Matrix& b);
Matrix span_sum(const Matrix& a, const Matrix& b);
Matrix span_intersection(const Matrix& a, const Matrix& b);
/// Basis of {v : m v ∈ span(sub)}.
Matrix preimage(const Matrix& m, const Matrix& sub);
/// Columns of super, in order, that extend a basis of span(sub) to one of span(sub)+span(super).
Matrix complement_in(const Matrix& sub, const Matrix& super);
/// Canonical basis of a column span (transposed nonzero rows of the RREF of the transpose).
Matrix canonical_basis(const Matrix& span);

/// V/W for W ⊆ V inside k^ambient. V = span(reps) ⊕ span(relations).
struct SubQuotient {
  FieldSpec field;
  std::size_t ambient = 0;
  Matrix relations;  // basis of W
  Matrix reps;       // representatives of a basis of V/W

  std::size_t dim() const { return reps.cols(); }
  /// Numerator basis: relations followed by reps.
  Matrix numerator() const;
  bool contains(const Matrix& v) const;
  bool is_zero_class(const Matrix& v) const;
  /// Coordinates of the class of each column of v with respect to reps.
  Matrix coordinates(const Matrix& v) const;
};

/// V/W from spanning sets of V and W; W must lie in V.
SubQuotient make_subquotient(const FieldSpec& f, std::size_t ambient, const Matrix& v_span,
                             const Matrix& w_span);
/// ker g / im f; requires g f = 0.
SubQuotient homology_mid(const Matrix& f, const Matrix& g);

}  // namespace hk
