#include <algorithm>
#include <sstream>

#include "hk/homotopy.hpp"

namespace hk {

namespace {

// Adds the blocks of m into r at block offset (row, col).
void place(Morphism& r, std::size_t row, std::size_t col, const Morphism& m, const Scalar& a) {
  for (std::size_t t = 0; t < m.target().size(); ++t)
    for (std::size_t s = 0; s < m.source().size(); ++s) r.add_block(row + t, col + s, m.block(t, s), a);
}

Scalar sign(const FieldSpec& f, int k) { return Scalar(f, (k % 2 == 0) ? 1L : -1L); }

}  // namespace

Complex::Complex(const Category& c, int lo, std::vector<AddObject> objects, std::vector<Morphism> d)
    : cat_(&c), lo_(lo), objects_(std::move(objects)), d_(std::move(d)) {
  std::size_t expect = objects_.empty() ? 0 : objects_.size() - 1;
  if (d_.size() != expect) throw ShapeError("complex needs one differential between consecutive degrees");
  for (std::size_t j = 0; j < d_.size(); ++j)
    if (d_[j].source() != objects_[j] || d_[j].target() != objects_[j + 1])
      throw ShapeError("differential " + std::to_string(lo_ + static_cast<int>(j)) + " has the wrong shape");
}

Complex Complex::concentrated(const Category& c, const AddObject& x, int degree) { return Complex(c, degree, {x}, {}); }

Complex Complex::two_term(const Morphism& f, int lo) {
  return Complex(f.category(), lo, {f.source(), f.target()}, {f});
}

AddObject Complex::at(int i) const {
  if (i < lo_ || i > hi()) return {};
  return objects_[static_cast<std::size_t>(i - lo_)];
}

Morphism Complex::d(int i) const {
  if (i >= lo_ && i < hi()) return d_[static_cast<std::size_t>(i - lo_)];
  return zero_morphism(*cat_, at(i), at(i + 1));
}

Complex Complex::shift(int k) const {
  std::vector<Morphism> d;
  Scalar s = sign(cat_->field(), k);
  for (const auto& m : d_) d.push_back(m.scaled(s));
  return Complex(*cat_, lo_ - k, objects_, d);
}

void Complex::validate() const {
  for (int i = lo_; i + 1 < hi(); ++i)
    if (!compose(d(i + 1), d(i)).is_zero())
      throw NotAComplex("d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " != 0");
}

std::string Complex::str() const {
  std::ostringstream os;
  for (int i = lo_; i <= hi(); ++i) {
    if (i > lo_) os << " --[" << d(i - 1).str() << "]--> ";
    os << "(" << i << ": " << object_str(*cat_, at(i)) << ")";
  }
  if (objects_.empty()) os << "0";
  return os.str();
}

Morphism ChainMap::at(int i) const {
  auto it = components.find(i);
  if (it != components.end()) return it->second;
  return zero_morphism(source.category(), source.at(i), target.at(i));
}

namespace {

std::pair<int, int> joint_range(const Complex& x, const Complex& y) {
  int lo = std::min(x.empty_range() ? y.lo() : x.lo(), y.empty_range() ? x.lo() : y.lo());
  int hi = std::max(x.empty_range() ? y.hi() : x.hi(), y.empty_range() ? x.hi() : y.hi());
  return {lo, hi};
}

}  // namespace

ChainMap make_chain_map(const Complex& x, const Complex& y, std::map<int, Morphism> comps) {
  for (auto& [i, m] : comps)
    if (m.source() != x.at(i) || m.target() != y.at(i))
      throw ShapeError("chain map component " + std::to_string(i) + " has the wrong shape");
  ChainMap u{x, y, std::move(comps)};
  if (!is_chain_map(u)) throw Error("not a chain map");
  return u;
}

bool is_chain_map(const ChainMap& u) {
  auto [lo, hi] = joint_range(u.source, u.target);
  for (int i = lo - 1; i <= hi; ++i)
    if (compose(u.target.d(i), u.at(i)) != compose(u.at(i + 1), u.source.d(i))) return false;
  return true;
}

ChainMap compose(const ChainMap& v, const ChainMap& u) {
  ChainMap r{u.source, v.target, {}};
  auto [lo, hi] = joint_range(u.source, v.target);
  for (int i = lo; i <= hi; ++i) {
    Morphism m = compose(v.at(i), u.at(i));
    if (!m.source().empty() && !m.target().empty()) r.components.emplace(i, m);
  }
  return r;
}

ChainMap identity_map(const Complex& x) {
  ChainMap r{x, x, {}};
  for (int i = x.lo(); i <= x.hi(); ++i) r.components.emplace(i, Morphism::identity(x.category(), x.at(i)));
  return r;
}

ChainMap chain_difference(const ChainMap& a, const ChainMap& b) {
  ChainMap r{a.source, a.target, {}};
  auto [lo, hi] = joint_range(a.source, a.target);
  for (int i = lo; i <= hi; ++i) r.components.emplace(i, a.at(i) - b.at(i));
  return r;
}

KbHom kb_hom(const Complex& x, const Complex& y) {
  const Category& c = x.category();
  const FieldSpec& f = c.field();
  auto [lo, hi] = joint_range(x, y);
  KbHom h{{}, {}, {}, x, y};
  std::map<int, std::size_t> off;
  std::size_t n = 0;
  for (int i = lo; i <= hi; ++i) {
    std::size_t d = hom_space(c, x.at(i), y.at(i)).dim;
    if (!d) continue;
    h.degrees.push_back(i);
    h.offsets.push_back(n);
    off[i] = n;
    n += d;
  }
  auto block_of = [&](int i) { return off.count(i) ? std::optional<std::size_t>(off[i]) : std::nullopt; };
  // Chain condition d_Y u^i - u^{i+1} d_X = 0 in hom(X^i, Y^{i+1}).
  std::vector<Matrix> rows;
  for (int i = lo - 1; i <= hi; ++i) {
    std::size_t m = hom_space(c, x.at(i), y.at(i + 1)).dim;
    if (!m) continue;
    Matrix r(f, m, n);
    if (auto o = block_of(i)) r.set_block(0, *o, postcompose_matrix(y.d(i), x.at(i)));
    if (auto o = block_of(i + 1)) r.set_block(0, *o, -precompose_matrix(x.d(i), y.at(i + 1)));
    rows.push_back(r);
  }
  Matrix constraints = Matrix::vstack(rows, f, n);
  Matrix maps = kernel_basis(constraints);
  // Homotopies h^i: X^i -> Y^{i-1}, u^i = d_Y h^i + h^{i+1} d_X.
  std::vector<Matrix> cols;
  for (int i = lo; i <= hi + 1; ++i) {
    std::size_t m = hom_space(c, x.at(i), y.at(i - 1)).dim;
    if (!m) continue;
    Matrix col(f, n, m);
    if (auto o = block_of(i)) col.set_block(*o, 0, postcompose_matrix(y.d(i - 1), x.at(i)));
    if (auto o = block_of(i - 1)) col.set_block(*o, 0, precompose_matrix(x.d(i - 1), y.at(i - 1)));
    cols.push_back(col);
  }
  Matrix homotopies = Matrix::hstack(cols, f, n);
  h.space = make_subquotient(f, n, maps, homotopies);
  return h;
}

Matrix chain_map_coordinates(const KbHom& h, const ChainMap& u) {
  const FieldSpec& f = h.source.category().field();
  std::vector<Matrix> parts;
  for (int i : h.degrees) parts.push_back(u.at(i).coords());
  return Matrix::vstack(parts, f, 1);
}

ChainMap chain_map_from_column(const KbHom& h, const Matrix& v, std::size_t col) {
  const Category& c = h.source.category();
  ChainMap u{h.source, h.target, {}};
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    int i = h.degrees[k];
    std::size_t d = hom_space(c, h.source.at(i), h.target.at(i)).dim;
    Matrix block(c.field(), d, 1);
    for (std::size_t r = 0; r < d; ++r)
      if (!v.entry_is_zero(h.offsets[k] + r, col)) block.set(r, 0, v.at(h.offsets[k] + r, col));
    u.components.emplace(i, Morphism(c, h.source.at(i), h.target.at(i), block));
  }
  return u;
}

bool is_null_homotopic(const ChainMap& u) {
  KbHom h = kb_hom(u.source, u.target);
  return in_span(h.space.relations, chain_map_coordinates(h, u));
}

Complex cone(const ChainMap& u) {
  const Complex &x = u.source, &y = u.target;
  const Category& c = x.category();
  Scalar one = Scalar::one(c.field()), minus = -one;
  int lo = std::min(x.empty_range() ? y.lo() : x.lo() - 1, y.empty_range() ? x.lo() - 1 : y.lo());
  int hi = std::max(x.empty_range() ? y.hi() : x.hi() - 1, y.empty_range() ? x.hi() - 1 : y.hi());
  std::vector<AddObject> objs;
  for (int i = lo; i <= hi; ++i) objs.push_back(concat(x.at(i + 1), y.at(i)));
  std::vector<Morphism> d;
  for (int i = lo; i < hi; ++i) {
    Morphism m(c, objs[i - lo], objs[i + 1 - lo]);
    std::size_t nx1 = x.at(i + 1).size(), nx2 = x.at(i + 2).size();
    place(m, 0, 0, x.d(i + 1), minus);
    place(m, nx2, 0, u.at(i + 1), one);
    place(m, nx2, nx1, y.d(i), one);
    d.push_back(m);
  }
  Complex k(c, lo, objs, d);
  k.validate();
  return k;
}

ChainMap cone_inclusion(const ChainMap& u) {
  Complex k = cone(u);
  const Category& c = k.category();
  ChainMap r{u.target, k, {}};
  for (int i = u.target.lo(); i <= u.target.hi(); ++i) {
    Morphism m(c, u.target.at(i), k.at(i));
    place(m, u.source.at(i + 1).size(), 0, Morphism::identity(c, u.target.at(i)), Scalar::one(c.field()));
    r.components.emplace(i, m);
  }
  return r;
}

ChainMap cone_projection(const ChainMap& u) {
  Complex k = cone(u);
  const Category& c = k.category();
  Complex x1 = u.source.shift(1);
  ChainMap r{k, x1, {}};
  for (int i = x1.lo(); i <= x1.hi(); ++i) {
    Morphism m(c, k.at(i), x1.at(i));
    place(m, 0, 0, Morphism::identity(c, x1.at(i)), Scalar::one(c.field()));
    r.components.emplace(i, m);
  }
  return r;
}

WeakKernel weak_kernel_kb(const ChainMap& u) {
  if (!is_chain_map(u)) throw Error("weak kernel of a map that is not a chain map");
  Complex w = cone(u).shift(-1);
  const Category& c = w.category();
  ChainMap p{w, u.source, {}};
  for (int i = u.source.lo(); i <= u.source.hi(); ++i) {
    Morphism m(c, w.at(i), u.source.at(i));
    place(m, 0, 0, Morphism::identity(c, u.source.at(i)), Scalar::one(c.field()));
    p.components.emplace(i, m);
  }
  return WeakKernel{w, p};
}

bool verify_weak_kernel(const WeakKernel& w, const ChainMap& u, const std::vector<Complex>& tests) {
  const FieldSpec& f = u.source.category().field();
  for (const Complex& t : tests) {
    KbHom tx = kb_hom(t, u.source), ty = kb_hom(t, u.target), tw = kb_hom(t, w.object);
    // Coordinates of u∘v for v running over the representatives of K(T, X).
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < tx.space.dim(); ++j) {
      ChainMap v = chain_map_from_column(tx, tx.space.reps, j);
      cols.push_back(ty.space.coordinates(chain_map_coordinates(ty, compose(u, v))));
    }
    Matrix ucomp = Matrix::hstack(cols, f, ty.space.dim());
    Matrix killed = kernel_basis(ucomp);
    std::vector<Matrix> img;
    for (std::size_t j = 0; j < tw.space.dim(); ++j) {
      ChainMap v = chain_map_from_column(tw, tw.space.reps, j);
      img.push_back(tx.space.coordinates(chain_map_coordinates(tx, compose(w.map, v))));
    }
    Matrix image = Matrix::hstack(img, f, tx.space.dim());
    if (!in_span(image, killed)) return false;
  }
  return true;
}

Complex tensor_complexes(const Complex& x, const Complex& y) {
  const Category& c = x.category();
  if (x.empty_range() || y.empty_range()) return Complex(c, 0, {}, {});
  const FieldSpec& f = c.field();
  int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  // Summand (a, n - a) of degree n sits at this block offset.
  auto layout = [&](int n) {
    std::vector<std::pair<int, std::size_t>> parts;
    std::size_t off = 0;
    for (int a = x.lo(); a <= x.hi(); ++a) {
      int b = n - a;
      if (b < y.lo() || b > y.hi()) continue;
      parts.push_back({a, off});
      off += x.at(a).size() * y.at(b).size();
    }
    return parts;
  };
  std::vector<AddObject> objs;
  for (int n = lo; n <= hi; ++n) {
    AddObject o;
    for (auto [a, off] : layout(n)) o = concat(o, tensor(c, x.at(a), y.at(n - a)));
    objs.push_back(o);
  }
  std::vector<Morphism> d;
  for (int n = lo; n < hi; ++n) {
    Morphism m(c, objs[n - lo], objs[n + 1 - lo]);
    auto src = layout(n), tgt = layout(n + 1);
    auto offset_of = [&](int a) -> std::optional<std::size_t> {
      for (auto [aa, off] : tgt)
        if (aa == a) return off;
      return std::nullopt;
    };
    for (auto [a, off] : src) {
      int b = n - a;
      if (auto t = offset_of(a + 1))
        place(m, *t, off, tensor(x.d(a), Morphism::identity(c, y.at(b))), Scalar::one(f));
      if (auto t = offset_of(a)) place(m, *t, off, tensor(Morphism::identity(c, x.at(a)), y.d(b)), sign(f, a));
    }
    d.push_back(m);
  }
  Complex r(c, lo, objs, d);
  try {
    r.validate();
  } catch (const NotAComplex& e) {
    throw Error(std::string("internal error: tensor product of complexes is not a complex: ") + e.what());
  }
  return r;
}

Complex direct_sum(const Complex& x, const Complex& y) {
  const Category& c = x.category();
  if (x.empty_range()) return y;
  if (y.empty_range()) return x;
  auto [lo, hi] = joint_range(x, y);
  std::vector<AddObject> objs;
  for (int i = lo; i <= hi; ++i) objs.push_back(concat(x.at(i), y.at(i)));
  std::vector<Morphism> d;
  for (int i = lo; i < hi; ++i) d.push_back(direct_sum(x.d(i), y.d(i)));
  return Complex(c, lo, objs, d);
}

}  // namespace hk
