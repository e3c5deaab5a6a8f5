#include <algorithm>
#include <sstream>

#include "hk/linalg.hpp"

namespace hk {

namespace {

struct ModOps {
  std::uint32_t p;
  bool zero(std::uint32_t a) const { return a == 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr, tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
  }
  // a - f*b
  std::uint32_t submul(std::uint32_t a, std::uint32_t f, std::uint32_t b) const {
    std::uint64_t fb = static_cast<std::uint64_t>(f) * b % p;
    return static_cast<std::uint32_t>((a + p - fb) % p);
  }
};

struct RatOps {
  bool zero(const mpq_class& a) const { return a == 0; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class inv(const mpq_class& a) const { return 1 / a; }
  mpq_class submul(const mpq_class& a, const mpq_class& f, const mpq_class& b) const { return a - f * b; }
};

// In-place RREF of a row-major rows x cols array. Only nonzero entries of the pivot row are
// propagated, which keeps sparse eliminations cheap.
template <class T, class Ops>
std::vector<std::size_t> rref_inplace(std::vector<T>& a, std::size_t rows, std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && ops.zero(a[pr * cols + c])) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    T inv = ops.inv(a[r * cols + c]);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      T& x = a[r * cols + j];
      if (!ops.zero(x)) {
        x = ops.mul(x, inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = a[i * cols + c];
      if (ops.zero(f)) continue;
      for (std::size_t j : nz) a[i * cols + j] = ops.submul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    mod_.assign(rows * cols, 0);
  else
    rat_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(f, rows[i][j]));
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& entries, const FieldSpec& f) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  if (field_.is_prime()) return Scalar::from_mod(field_, mod_[i * cols_ + j]);
  return Scalar(field_, rat_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  check_index(i, j);
  require_same_field(field_, v.field());
  if (field_.is_prime())
    mod_[i * cols_ + j] = v.mod_value();
  else
    rat_[i * cols_ + j] = v.rational();
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  check_index(i, j);
  require_same_field(field_, v.field());
  if (field_.is_prime()) {
    std::uint64_t s = static_cast<std::uint64_t>(mod_[i * cols_ + j]) + v.mod_value();
    mod_[i * cols_ + j] = static_cast<std::uint32_t>(s % field_.p);
  } else {
    rat_[i * cols_ + j] += v.rational();
  }
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return field_.is_prime() ? mod_[i * cols_ + j] == 0 : rat_[i * cols_ + j] == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) return std::all_of(mod_.begin(), mod_.end(), [](std::uint32_t x) { return x == 0; });
  return std::all_of(rat_.begin(), rat_.end(), [](const mpq_class& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_)
    throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.p;
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = mod_[i * cols_ + k];
        if (!a) continue;
        const std::uint32_t* row = &o.mod_[k * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (row[j]) acc[j] = (acc[j] + a * row[j]) % p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r.mod_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = rat_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const mpq_class& b = o.rat_[k * o.cols_ + j];
          if (b != 0) r.rat_[i * o.cols_ + j] += a * b;
        }
      }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix r = *this;
  if (field_.is_prime()) {
    for (std::size_t i = 0; i < mod_.size(); ++i)
      r.mod_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(mod_[i]) + o.mod_[i]) % field_.p);
  } else {
    for (std::size_t i = 0; i < rat_.size(); ++i) r.rat_[i] += o.rat_[i];
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  if (field_.is_prime()) {
    for (auto& x : r.mod_) x = x == 0 ? 0 : field_.p - x;
  } else {
    for (auto& x : r.rat_) x = -x;
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Scalar& s) const {
  require_same_field(field_, s.field());
  Matrix r = *this;
  if (field_.is_prime()) {
    for (auto& x : r.mod_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s.mod_value() % field_.p);
  } else {
    for (auto& x : r.rat_) x *= s.rational();
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && rat_ == o.rat_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.mod_[j * rows_ + i] = mod_[i * cols_ + j];
      else
        r.rat_[j * rows_ + i] = rat_[i * cols_ + j];
    }
  return r;
}

Matrix Matrix::column(std::size_t j) const { return columns({j}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      if (field_.is_prime())
        r.mod_[i * idx.size() + k] = mod_[i * cols_ + idx[k]];
      else
        r.rat_[i * idx.size() + k] = rat_[i * cols_ + idx[k]];
    }
  }
  return r;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw ShapeError("row range out of bounds");
  Matrix r(field_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.mod_[(i - begin) * cols_ + j] = mod_[i * cols_ + j];
      else
        r.rat_[(i - begin) * cols_ + j] = rat_[i * cols_ + j];
    }
  return r;
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw ShapeError("column range out of bounds");
  std::vector<std::size_t> idx;
  for (std::size_t j = begin; j < end; ++j) idx.push_back(j);
  return columns(idx);
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_prime())
        mod_[(r0 + i) * cols_ + c0 + j] = b.mod_[i * b.cols_ + j];
      else
        rat_[(r0 + i) * cols_ + c0 + j] = b.rat_[i * b.cols_ + j];
    }
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw ShapeError("hstack row mismatch");
    cols += p.cols_;
  }
  Matrix r(f, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols_;
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw ShapeError("vstack column mismatch");
    rows += p.rows_;
  }
  Matrix r(f, rows, cols);
  std::size_t i = 0;
  for (const auto& p : parts) {
    r.set_block(i, 0, p);
    i += p.rows_;
  }
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  require_same_field(field_, o.field_);
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (entry_is_zero(i, j)) continue;
      Scalar a = at(i, j);
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          if (!o.entry_is_zero(k, l)) r.set(i * o.rows_ + k, j * o.cols_ + l, a * o.at(k, l));
    }
  return r;
}

std::vector<Scalar> Matrix::column_entries(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(const Matrix& m) {
  Echelon e{m, {}};
  if (m.field().is_prime())
    e.pivots = rref_inplace(e.rref.mod_data(), m.rows(), m.cols(), ModOps{m.field().p});
  else
    e.pivots = rref_inplace(e.rref.rat_data(), m.rows(), m.cols(), RatOps{});
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).rank();
}

Matrix kernel_basis(const Matrix& m) {
  const FieldSpec& f = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k.set(fc, t, Scalar::one(f));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.rref.entry_is_zero(r, fc)) k.set(e.pivots[r], t, -e.rref.at(r, fc));
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  return m.columns(row_reduce(m).pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
  const FieldSpec& f = a.field();
  Matrix aug = Matrix::hstack({a, b}, f, a.rows());
  Echelon e = row_reduce(aug);
  for (std::size_t c : e.pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!e.rref.entry_is_zero(r, a.cols() + j)) x.set(e.pivots[r], j, e.rref.at(r, a.cols() + j));
  return x;
}

bool in_span(const Matrix& basis, const Matrix& vecs) {
  if (vecs.cols() == 0) return true;
  require_same_field(basis.field(), vecs.field());
  if (basis.rows() != vecs.rows()) throw ShapeError("in_span: row mismatch");
  return rank(Matrix::hstack({basis, vecs}, basis.field(), basis.rows())) == rank(basis);
}

bool same_span(const Matrix& a, const Matrix& b) { return in_span(a, b) && in_span(b, a); }

Matrix span_sum(const Matrix& a, const Matrix& b) {
  return image_basis(Matrix::hstack({a, b}, a.field(), a.rows()));
}

Matrix span_intersection(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw ShapeError("span_intersection: row mismatch");
  Matrix k = kernel_basis(Matrix::hstack({a, -b}, a.field(), a.rows()));
  Matrix top = k.row_range(0, a.cols());
  return image_basis(a * top);
}

Matrix preimage(const Matrix& m, const Matrix& sub) {
  require_same_field(m.field(), sub.field());
  if (m.rows() != sub.rows()) throw ShapeError("preimage: row mismatch");
  Matrix k = kernel_basis(Matrix::hstack({m, -sub}, m.field(), m.rows()));
  return image_basis(k.row_range(0, m.cols()));
}

Matrix complement_in(const Matrix& sub, const Matrix& super) {
  require_same_field(sub.field(), super.field());
  if (sub.rows() != super.rows()) throw ShapeError("complement_in: row mismatch");
  Echelon e = row_reduce(Matrix::hstack({sub, super}, sub.field(), sub.rows()));
  std::vector<std::size_t> idx;
  for (std::size_t c : e.pivots)
    if (c >= sub.cols()) idx.push_back(c - sub.cols());
  return super.columns(idx);
}

Matrix canonical_basis(const Matrix& span) {
  Echelon e = row_reduce(span.transpose());
  return e.rref.row_range(0, e.rank()).transpose();
}

Matrix SubQuotient::numerator() const { return Matrix::hstack({relations, reps}, field, ambient); }

bool SubQuotient::contains(const Matrix& v) const { return in_span(numerator(), v); }

bool SubQuotient::is_zero_class(const Matrix& v) const { return in_span(relations, v); }

Matrix SubQuotient::coordinates(const Matrix& v) const {
  auto x = solve(numerator(), v);
  if (!x) throw Error("vector does not lie in the numerator of the subquotient");
  return x->row_range(relations.cols(), relations.cols() + reps.cols());
}

SubQuotient make_subquotient(const FieldSpec& f, std::size_t ambient, const Matrix& v_span, const Matrix& w_span) {
  if (v_span.rows() != ambient || w_span.rows() != ambient) throw ShapeError("subquotient ambient mismatch");
  SubQuotient s;
  s.field = f;
  s.ambient = ambient;
  s.relations = image_basis(w_span);
  if (!in_span(v_span, s.relations)) throw Error("subquotient denominator is not contained in numerator");
  s.reps = complement_in(s.relations, v_span);
  return s;
}

SubQuotient homology_mid(const Matrix& f, const Matrix& g) {
  require_same_field(f.field(), g.field());
  if (g.cols() != f.rows()) throw ShapeError("homology_mid: maps are not composable");
  if (!(g * f).is_zero()) throw NotAComplex("not a complex: g*f != 0");
  return make_subquotient(f.field(), f.rows(), kernel_basis(g), f);
}

}  // namespace hk
