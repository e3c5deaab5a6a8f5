#include <sstream>

#include "hk/category.hpp"

namespace hk {

SparseVec sparse_from_column(const Matrix& m, std::size_t col) {
  SparseVec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.entry_is_zero(i, col)) v.push_back({static_cast<std::uint32_t>(i), m.at(i, col)});
  return v;
}

Matrix dense_column(const FieldSpec& f, const SparseVec& v, std::size_t dim) {
  Matrix m(f, dim, 1);
  for (const auto& t : v) {
    if (t.index >= dim) throw ShapeError("sparse coordinate out of range");
    m.add_to(t.index, 0, t.coeff);
  }
  return m;
}

void sparse_axpy(SparseVec& acc, const Scalar& a, const SparseVec& v) {
  if (a.is_zero() || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].index < v[j].index)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || v[j].index < acc[i].index) {
      out.push_back({v[j].index, a * v[j].coeff});
      ++j;
    } else {
      Scalar s = acc[i].coeff + a * v[j].coeff;
      if (!s.is_zero()) out.push_back({acc[i].index, s});
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

ObjectId Category::unit() const { throw MissingData(name() + ": no monoidal structure"); }
ObjectId Category::tensor_objects(ObjectId, ObjectId) const { throw MissingData(name() + ": no monoidal structure"); }
SparseVec Category::tensor_basis(ObjectId, ObjectId, std::size_t, ObjectId, ObjectId, std::size_t) const {
  throw MissingData(name() + ": no monoidal structure");
}
ObjectId Category::dual(ObjectId) const { throw MissingData(name() + ": no duality data"); }
SparseVec Category::ev(ObjectId) const { throw MissingData(name() + ": no duality data"); }
SparseVec Category::co(ObjectId) const { throw MissingData(name() + ": no duality data"); }
SparseVec Category::braiding(ObjectId, ObjectId) const { throw MissingData(name() + ": no braiding"); }

ObjectId Category::require_object(std::string_view name) const {
  auto x = find_object(name);
  if (!x) throw Error("unknown object '" + std::string(name) + "' in " + this->name());
  return *x;
}

std::vector<ObjectId> all_objects(const Category& c) {
  std::vector<ObjectId> v;
  for (ObjectId x = 0; x < c.object_count(); ++x) v.push_back(x);
  return v;
}

HomSpace hom_space(const Category& c, const AddObject& x, const AddObject& y) {
  HomSpace h;
  h.source = x;
  h.target = y;
  h.offsets.resize(x.size() * y.size());
  std::size_t off = 0;
  for (std::size_t t = 0; t < y.size(); ++t)
    for (std::size_t s = 0; s < x.size(); ++s) {
      h.offsets[t * x.size() + s] = off;
      off += c.hom_dim(x[s], y[t]);
    }
  h.dim = off;
  return h;
}

Morphism::Morphism(const Category& c, AddObject source, AddObject target)
    : cat_(&c), space_(hom_space(c, source, target)), coords_(c.field(), space_.dim, 1) {}

Morphism::Morphism(const Category& c, AddObject source, AddObject target, Matrix coords)
    : cat_(&c), space_(hom_space(c, source, target)), coords_(std::move(coords)) {
  require_same_field(c.field(), coords_.field());
  if (coords_.rows() != space_.dim || coords_.cols() != 1)
    throw ShapeError("morphism coordinates have wrong size for " + object_str(c, space_.source) + " -> " +
                     object_str(c, space_.target));
}

Morphism Morphism::basis(const Category& c, ObjectId s, ObjectId t, std::size_t i) {
  if (i >= c.hom_dim(s, t)) throw ShapeError("basis index out of range");
  Morphism m(c, {s}, {t});
  m.coords_.set(i, 0, Scalar::one(c.field()));
  return m;
}

Morphism Morphism::from_sparse(const Category& c, ObjectId s, ObjectId t, const SparseVec& v) {
  return Morphism(c, {s}, {t}, dense_column(c.field(), v, c.hom_dim(s, t)));
}

Morphism Morphism::identity(const Category& c, const AddObject& x) {
  Morphism m(c, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) m.add_block(i, i, c.identity(x[i]), Scalar::one(c.field()));
  return m;
}

SparseVec Morphism::block(std::size_t t, std::size_t s) const {
  SparseVec v;
  std::size_t off = space_.offset(t, s), d = space_.block_dim(*cat_, t, s);
  for (std::size_t i = 0; i < d; ++i)
    if (!coords_.entry_is_zero(off + i, 0)) v.push_back({static_cast<std::uint32_t>(i), coords_.at(off + i, 0)});
  return v;
}

void Morphism::add_block(std::size_t t, std::size_t s, const SparseVec& v, const Scalar& a) {
  std::size_t off = space_.offset(t, s), d = space_.block_dim(*cat_, t, s);
  for (const auto& term : v) {
    if (term.index >= d) throw ShapeError("block coordinate out of range");
    coords_.add_to(off + term.index, 0, a * term.coeff);
  }
}

void Morphism::check_same_shape(const Morphism& o) const {
  if (cat_ != o.cat_ || source() != o.source() || target() != o.target())
    throw ShapeError("morphisms have different sources or targets");
}

Morphism Morphism::operator+(const Morphism& o) const {
  check_same_shape(o);
  return Morphism(*cat_, source(), target(), coords_ + o.coords_);
}

Morphism Morphism::operator-(const Morphism& o) const {
  check_same_shape(o);
  return Morphism(*cat_, source(), target(), coords_ - o.coords_);
}

Morphism Morphism::operator-() const { return Morphism(*cat_, source(), target(), -coords_); }

Morphism Morphism::scaled(const Scalar& s) const { return Morphism(*cat_, source(), target(), coords_.scaled(s)); }

bool Morphism::operator==(const Morphism& o) const {
  return cat_ == o.cat_ && source() == o.source() && target() == o.target() && coords_ == o.coords_;
}

namespace {

std::string combination_str(const Category& c, ObjectId s, ObjectId t, const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : v) {
    std::string coeff = term.coeff.str();
    bool neg = !c.field().is_prime() && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (coeff != "1") os << coeff << "*";
    os << c.basis_name(s, t, term.index);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string Morphism::str() const {
  if (source().size() == 1 && target().size() == 1) return combination_str(*cat_, source()[0], target()[0], block(0, 0));
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < target().size(); ++t) {
    if (t) os << "; ";
    for (std::size_t s = 0; s < source().size(); ++s)
      os << (s ? ", " : "") << combination_str(*cat_, source()[s], target()[t], block(t, s));
  }
  os << "]";
  return os.str();
}

std::string object_str(const Category& c, const AddObject& x) {
  if (x.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " + " : "") + c.object_name(x[i]);
  return s;
}

AddObject concat(const AddObject& a, const AddObject& b) {
  AddObject r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (&g.category() != &f.category()) throw ShapeError("compose: different categories");
  if (f.target() != g.source())
    throw ShapeError("compose: target " + object_str(f.category(), f.target()) + " does not match source " +
                     object_str(g.category(), g.source()));
  const Category& c = f.category();
  const AddObject &x = f.source(), &y = f.target(), &z = g.target();
  Morphism r(c, x, z);
  std::vector<SparseVec> fb(y.size() * x.size()), gb(z.size() * y.size());
  for (std::size_t t = 0; t < y.size(); ++t)
    for (std::size_t s = 0; s < x.size(); ++s) fb[t * x.size() + s] = f.block(t, s);
  for (std::size_t u = 0; u < z.size(); ++u)
    for (std::size_t t = 0; t < y.size(); ++t) gb[u * y.size() + t] = g.block(u, t);
  for (std::size_t u = 0; u < z.size(); ++u)
    for (std::size_t s = 0; s < x.size(); ++s) {
      SparseVec acc;
      for (std::size_t t = 0; t < y.size(); ++t)
        for (const auto& gt : gb[u * y.size() + t])
          for (const auto& ft : fb[t * x.size() + s])
            sparse_axpy(acc, gt.coeff * ft.coeff, c.compose_basis(x[s], y[t], z[u], gt.index, ft.index));
      r.add_block(u, s, acc, Scalar::one(c.field()));
    }
  return r;
}

Matrix postcompose_matrix(const Morphism& g, const AddObject& x) {
  const Category& c = g.category();
  const AddObject &y = g.source(), &z = g.target();
  HomSpace in = hom_space(c, x, y), out = hom_space(c, x, z);
  Matrix m(c.field(), out.dim, in.dim);
  std::vector<SparseVec> gb(z.size() * y.size());
  for (std::size_t u = 0; u < z.size(); ++u)
    for (std::size_t t = 0; t < y.size(); ++t) gb[u * y.size() + t] = g.block(u, t);
  for (std::size_t t = 0; t < y.size(); ++t)
    for (std::size_t s = 0; s < x.size(); ++s) {
      std::size_t d = c.hom_dim(x[s], y[t]);
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t col = in.offset(t, s) + i;
        for (std::size_t u = 0; u < z.size(); ++u)
          for (const auto& gt : gb[u * y.size() + t])
            for (const auto& v : c.compose_basis(x[s], y[t], z[u], gt.index, i))
              m.add_to(out.offset(u, s) + v.index, col, gt.coeff * v.coeff);
      }
    }
  return m;
}

Matrix precompose_matrix(const Morphism& f, const AddObject& z) {
  const Category& c = f.category();
  const AddObject &x = f.source(), &y = f.target();
  HomSpace in = hom_space(c, y, z), out = hom_space(c, x, z);
  Matrix m(c.field(), out.dim, in.dim);
  std::vector<SparseVec> fb(y.size() * x.size());
  for (std::size_t t = 0; t < y.size(); ++t)
    for (std::size_t s = 0; s < x.size(); ++s) fb[t * x.size() + s] = f.block(t, s);
  for (std::size_t u = 0; u < z.size(); ++u)
    for (std::size_t t = 0; t < y.size(); ++t) {
      std::size_t d = c.hom_dim(y[t], z[u]);
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t col = in.offset(u, t) + j;
        for (std::size_t s = 0; s < x.size(); ++s)
          for (const auto& ft : fb[t * x.size() + s])
            for (const auto& v : c.compose_basis(x[s], y[t], z[u], j, ft.index))
              m.add_to(out.offset(u, s) + v.index, col, ft.coeff * v.coeff);
      }
    }
  return m;
}

Morphism morphism_from_column(const Category& c, const AddObject& x, const AddObject& y, const Matrix& m,
                              std::size_t col) {
  return Morphism(c, x, y, m.column(col));
}

Morphism zero_morphism(const Category& c, const AddObject& x, const AddObject& y) { return Morphism(c, x, y); }

Morphism join_targets(const std::vector<Morphism>& fs) {
  if (fs.empty()) throw ShapeError("join_targets: empty family");
  const Category& c = fs[0].category();
  AddObject y;
  std::vector<Matrix> parts;
  for (const auto& f : fs) {
    if (&f.category() != &c || f.source() != fs[0].source()) throw ShapeError("join_targets: sources differ");
    y = concat(y, f.target());
    parts.push_back(f.coords());
  }
  return Morphism(c, fs[0].source(), y, Matrix::vstack(parts, c.field(), 1));
}

Morphism join_sources(const std::vector<Morphism>& gs) {
  if (gs.empty()) throw ShapeError("join_sources: empty family");
  const Category& c = gs[0].category();
  AddObject x;
  for (const auto& g : gs) {
    if (&g.category() != &c || g.target() != gs[0].target()) throw ShapeError("join_sources: targets differ");
    x = concat(x, g.source());
  }
  Morphism r(c, x, gs[0].target());
  std::size_t base = 0;
  for (const auto& g : gs) {
    for (std::size_t t = 0; t < g.target().size(); ++t)
      for (std::size_t s = 0; s < g.source().size(); ++s)
        r.add_block(t, base + s, g.block(t, s), Scalar::one(c.field()));
    base += g.source().size();
  }
  return r;
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  const Category& c = f.category();
  Morphism r(c, concat(f.source(), g.source()), concat(f.target(), g.target()));
  Scalar one = Scalar::one(c.field());
  for (std::size_t t = 0; t < f.target().size(); ++t)
    for (std::size_t s = 0; s < f.source().size(); ++s) r.add_block(t, s, f.block(t, s), one);
  for (std::size_t t = 0; t < g.target().size(); ++t)
    for (std::size_t s = 0; s < g.source().size(); ++s)
      r.add_block(f.target().size() + t, f.source().size() + s, g.block(t, s), one);
  return r;
}

AddObject tensor(const Category& c, const AddObject& x, const AddObject& y) {
  AddObject r;
  for (ObjectId a : x)
    for (ObjectId b : y) r.push_back(c.tensor_objects(a, b));
  return r;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  const Category& c = f.category();
  if (&g.category() != &c) throw ShapeError("tensor: different categories");
  const AddObject &x = f.source(), &y = f.target(), &x2 = g.source(), &y2 = g.target();
  Morphism r(c, tensor(c, x, x2), tensor(c, y, y2));
  for (std::size_t t1 = 0; t1 < y.size(); ++t1)
    for (std::size_t s1 = 0; s1 < x.size(); ++s1) {
      SparseVec fb = f.block(t1, s1);
      if (fb.empty()) continue;
      for (std::size_t t2 = 0; t2 < y2.size(); ++t2)
        for (std::size_t s2 = 0; s2 < x2.size(); ++s2) {
          SparseVec gb = g.block(t2, s2);
          SparseVec acc;
          for (const auto& a : fb)
            for (const auto& b : gb)
              sparse_axpy(acc, a.coeff * b.coeff, c.tensor_basis(x[s1], y[t1], a.index, x2[s2], y2[t2], b.index));
          r.add_block(t1 * y2.size() + t2, s1 * x2.size() + s2, acc, Scalar::one(c.field()));
        }
    }
  return r;
}

Morphism ev_morphism(const Category& c, ObjectId x) {
  return Morphism::from_sparse(c, c.tensor_objects(c.dual(x), x), c.unit(), c.ev(x));
}

Morphism co_morphism(const Category& c, ObjectId x) {
  return Morphism::from_sparse(c, c.unit(), c.tensor_objects(x, c.dual(x)), c.co(x));
}

Morphism braiding_morphism(const Category& c, ObjectId x, ObjectId y) {
  return Morphism::from_sparse(c, c.tensor_objects(x, y), c.tensor_objects(y, x), c.braiding(x, y));
}

std::size_t dim(const Functor& th, const AddObject& x) {
  std::size_t d = 0;
  for (ObjectId o : x) d += th.dim(o);
  return d;
}

Matrix apply(const Functor& th, const Morphism& f) {
  const Category& c = f.category();
  if (&th.source() != &c) throw ShapeError("functor applied to a morphism of another category");
  const AddObject &x = f.source(), &y = f.target();
  Matrix m(c.field(), dim(th, y), dim(th, x));
  std::size_t r0 = 0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    std::size_t c0 = 0;
    for (std::size_t s = 0; s < x.size(); ++s) {
      for (const auto& term : f.block(t, s)) {
        Matrix b = th.basis_image(x[s], y[t], term.index).scaled(term.coeff);
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b.entry_is_zero(i, j)) m.add_to(r0 + i, c0 + j, b.at(i, j));
      }
      c0 += th.dim(x[s]);
    }
    r0 += th.dim(y[t]);
  }
  return m;
}

std::size_t TableFunctor::dim(ObjectId x) const {
  auto it = dims_.find(x);
  if (it == dims_.end()) throw MissingData("functor " + name_ + ": no dimension for " + cat_->object_name(x));
  return it->second;
}

Matrix TableFunctor::basis_image(ObjectId s, ObjectId t, std::size_t i) const {
  auto it = images_.find({s, t, i});
  if (it == images_.end())
    throw MissingData("functor " + name_ + ": no image for basis " + cat_->basis_name(s, t, i));
  return it->second;
}

void TableFunctor::set_dim(ObjectId x, std::size_t d) { dims_[x] = d; }

void TableFunctor::set_image(ObjectId s, ObjectId t, std::size_t i, Matrix m) {
  require_same_field(cat_->field(), m.field());
  images_[{s, t, i}] = std::move(m);
}

}  // namespace hk
