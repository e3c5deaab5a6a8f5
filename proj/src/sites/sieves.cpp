#include <algorithm>
#include <deque>
#include <set>

#include "hk/sites.hpp"

namespace hk {

namespace {

Matrix empty_cols(const FieldSpec& f, std::size_t rows) { return Matrix(f, rows, 0); }

Morphism basis_morphism(const Category& c, ObjectId s, ObjectId t, const Matrix& m, std::size_t col) {
  return morphism_from_column(c, {s}, {t}, m, col);
}

// Each summand block of a morphism Y1 ⊕ ... -> X as a column of hom(Y_i, X).
void split_generator(const Morphism& g, std::vector<Matrix>& out) {
  const Category& c = g.category();
  for (std::size_t s = 0; s < g.source().size(); ++s) {
    ObjectId y = g.source()[s];
    Matrix col = dense_column(c.field(), g.block(0, s), c.hom_dim(y, g.target()[0]));
    out[y] = Matrix::hstack({out[y], col}, c.field(), col.rows());
  }
}

// Closes the components under precomposition with every basis morphism.
Sieve close(const Category& c, ObjectId x, std::vector<Matrix> comps) {
  const auto n = static_cast<ObjectId>(c.object_count());
  for (auto& m : comps) m = canonical_basis(m);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ObjectId y = 0; y < n; ++y) {
      if (!comps[y].cols()) continue;
      for (ObjectId z = 0; z < n; ++z) {
        std::size_t d = c.hom_dim(z, y);
        if (!d || !c.hom_dim(z, x)) continue;
        Matrix id = Matrix::identity(c.field(), d);
        for (std::size_t i = 0; i < d; ++i) {
          Matrix img = precompose_matrix(basis_morphism(c, z, y, id, i), {x}) * comps[y];
          if (in_span(comps[z], img)) continue;
          comps[z] = canonical_basis(span_sum(comps[z], img));
          changed = true;
        }
      }
    }
  }
  return Sieve{x, std::move(comps)};
}

}  // namespace

std::size_t Sieve::total_dim() const {
  std::size_t t = 0;
  for (const auto& m : components) t += m.cols();
  return t;
}

std::vector<std::size_t> Sieve::dims() const {
  std::vector<std::size_t> d;
  for (const auto& m : components) d.push_back(m.cols());
  return d;
}

std::string Sieve::key() const {
  std::string k = std::to_string(root);
  for (const auto& m : components) k += "|" + canonical_basis(m).transpose().str();
  return k;
}

Sieve zero_sieve(const Category& c, ObjectId x) {
  Sieve s{x, {}};
  for (ObjectId y = 0; y < c.object_count(); ++y) s.components.push_back(empty_cols(c.field(), c.hom_dim(y, x)));
  return s;
}

Sieve maximal_sieve(const Category& c, ObjectId x) {
  Sieve s{x, {}};
  for (ObjectId y = 0; y < c.object_count(); ++y) s.components.push_back(Matrix::identity(c.field(), c.hom_dim(y, x)));
  return s;
}

bool is_sieve(const Category& c, const Sieve& s) {
  if (s.components.size() != c.object_count()) return false;
  for (ObjectId y = 0; y < c.object_count(); ++y) {
    if (s.components[y].rows() != c.hom_dim(y, s.root)) return false;
    for (ObjectId z = 0; z < c.object_count(); ++z) {
      std::size_t d = c.hom_dim(z, y);
      Matrix id = Matrix::identity(c.field(), d);
      for (std::size_t i = 0; i < d; ++i)
        if (!in_span(s.components[z], precompose_matrix(basis_morphism(c, z, y, id, i), {s.root}) * s.components[y]))
          return false;
    }
  }
  return true;
}

bool sieve_less_equal(const Sieve& a, const Sieve& b) {
  if (a.root != b.root || a.components.size() != b.components.size()) return false;
  for (std::size_t y = 0; y < a.components.size(); ++y)
    if (!in_span(b.components[y], a.components[y])) return false;
  return true;
}

bool sieve_equal(const Sieve& a, const Sieve& b) { return sieve_less_equal(a, b) && sieve_less_equal(b, a); }

Sieve sieve_closure(const Category& c, ObjectId x, const std::vector<Morphism>& generators) {
  std::vector<Matrix> comps;
  for (ObjectId y = 0; y < c.object_count(); ++y) comps.push_back(empty_cols(c.field(), c.hom_dim(y, x)));
  for (const Morphism& g : generators) {
    if (&g.category() != &c) throw ShapeError("sieve generator from a different category");
    if (g.target() != AddObject{x}) throw ShapeError("sieve generator does not end at the root object");
    split_generator(g, comps);
  }
  return close(c, x, std::move(comps));
}

Sieve pullback_sieve(const Category& c, const Sieve& s, const Morphism& h) {
  if (h.target() != AddObject{s.root} || h.source().size() != 1)
    throw ShapeError("pullback_sieve: h must be a morphism Y -> root between generator objects");
  ObjectId y = h.source()[0];
  Sieve r{y, {}};
  for (ObjectId z = 0; z < c.object_count(); ++z) {
    if (!c.hom_dim(z, y)) {
      r.components.push_back(empty_cols(c.field(), 0));
      continue;
    }
    r.components.push_back(canonical_basis(preimage(postcompose_matrix(h, {z}), s.components[z])));
  }
  return r;
}

std::string describe_sieve(const Category& c, const Sieve& s) {
  std::string out;
  for (ObjectId y = 0; y < s.components.size(); ++y) {
    const Matrix& m = s.components[y];
    if (!m.cols()) continue;
    if (!out.empty()) out += "; ";
    out += c.object_name(y) + ": ";
    if (m.cols() == c.hom_dim(y, s.root)) {
      out += "all";
      continue;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      std::string e;
      for (const Term& t : sparse_from_column(m, j)) {
        std::string coeff = t.coeff.str();
        if (!e.empty()) e += " + ";
        if (!t.coeff.is_one()) e += coeff + "*";
        e += c.basis_name(y, s.root, t.index);
      }
      out += e;
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t SieveLattice::find(const Sieve& s) const {
  auto i = lookup(s);
  if (!i) throw Error("sieve not in the enumerated lattice");
  return *i;
}

std::optional<std::size_t> SieveLattice::lookup(const Sieve& s) const {
  if (s.root >= index.size()) return std::nullopt;
  auto it = index[s.root].find(s.key());
  if (it == index[s.root].end()) return std::nullopt;
  return it->second;
}

namespace {

// Radical of hom(Z, Y): all of it for Z != Y, the non-units of the local ring End(Y) for Z = Y.
std::vector<Matrix> radicals(const Category& c) {
  const FieldSpec& f = c.field();
  const auto n = static_cast<ObjectId>(c.object_count());
  std::vector<Matrix> rad(n);
  for (ObjectId y = 0; y < n; ++y) {
    std::size_t d = c.hom_dim(y, y);
    if (!d) throw Error("skeleton object " + c.object_name(y) + " is zero");
    Matrix one = dense_column(f, c.identity(y), d);
    Matrix id = Matrix::identity(f, d);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < d; ++i) {
      Morphism b = basis_morphism(c, y, y, id, i);
      Matrix lb = postcompose_matrix(b, {y});
      // b = λ + nilpotent in a split local ring: L_b - λ is nilpotent.
      std::vector<Scalar> candidates;
      if (f.is_prime()) {
        for (std::uint32_t v = 0; v < f.p; ++v) candidates.push_back(Scalar::from_mod(f, v));
      } else {
        Scalar tr = Scalar::zero(f);
        for (std::size_t k = 0; k < d; ++k) tr += lb.at(k, k);
        candidates.push_back(tr / Scalar(f, static_cast<long>(d)));
      }
      bool found = false;
      for (const Scalar& lam : candidates) {
        Matrix m = lb - Matrix::identity(f, d).scaled(lam);
        Matrix p = m;
        for (std::size_t k = 1; k < d; ++k) p = p * m;
        if (p.is_zero()) {
          gens.push_back(id.column(i) - one.scaled(lam));
          found = true;
          break;
        }
      }
      if (!found)
        throw Error("End(" + c.object_name(y) + ") is not a split local ring: the skeleton needs indecomposable objects");
    }
    rad[y] = canonical_basis(Matrix::hstack(gens, f, d));
    if (rad[y].cols() != d - 1) throw Error("End(" + c.object_name(y) + ") is not local");
  }
  for (ObjectId y = 0; y < n; ++y)
    for (ObjectId z = 0; z < n; ++z) {
      if (z == y || !c.hom_dim(y, z) || !c.hom_dim(z, y)) continue;
      // Composites y -> z -> y must be non-units, otherwise y is a summand of z.
      Matrix iy = Matrix::identity(f, c.hom_dim(y, z)), iz = Matrix::identity(f, c.hom_dim(z, y));
      for (std::size_t a = 0; a < c.hom_dim(y, z); ++a)
        for (std::size_t b = 0; b < c.hom_dim(z, y); ++b) {
          Morphism comp = compose(basis_morphism(c, z, y, iz, b), basis_morphism(c, y, z, iy, a));
          if (!in_span(rad[y], comp.coords()))
            throw Error("skeleton objects " + c.object_name(y) + " and " + c.object_name(z) +
                        " are isomorphic or not indecomposable");
        }
    }
  return rad;
}

// Radical basis of hom(z, y) as columns.
Matrix radical_of(const Category& c, const std::vector<Matrix>& rad, ObjectId z, ObjectId y) {
  return z == y ? rad[y] : Matrix::identity(c.field(), c.hom_dim(z, y));
}

// All lines of the space spanned by the columns of b, one representative each.
std::vector<Matrix> lines(const FieldSpec& f, const Matrix& b, std::size_t limit) {
  std::size_t d = b.cols();
  std::vector<Matrix> out;
  if (!d) return out;
  if (!f.is_prime()) {
    if (d > 1) throw WindowError("infinitely many sieves: a layer of dimension " + std::to_string(d) + " over Q");
    out.push_back(b.column(0));
    return out;
  }
  // Coefficient vectors whose first nonzero entry is 1.
  std::vector<std::uint32_t> coeff(d, 0);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::size_t rest = d - lead - 1;
    std::size_t count = 1;
    for (std::size_t k = 0; k < rest; ++k) {
      count *= f.p;
      if (count > limit) throw WindowError("sieve lattice exceeds the size limit");
    }
    for (std::size_t code = 0; code < count; ++code) {
      Matrix v = b.column(lead);
      std::size_t c = code;
      for (std::size_t k = lead + 1; k < d; ++k) {
        std::uint32_t a = static_cast<std::uint32_t>(c % f.p);
        c /= f.p;
        if (a) v = v + b.column(k).scaled(Scalar::from_mod(f, a));
      }
      out.push_back(v);
      if (out.size() > limit) throw WindowError("sieve lattice exceeds the size limit");
    }
  }
  return out;
}

}  // namespace

SieveLattice enumerate_sieves(const Category& c, std::size_t limit) {
  const FieldSpec& f = c.field();
  const auto n = static_cast<ObjectId>(c.object_count());
  std::vector<Matrix> rad = radicals(c);
  SieveLattice l;
  l.sieves.resize(n);
  l.index.resize(n);
  std::size_t total = 0;
  for (ObjectId x = 0; x < n; ++x) {
    std::map<std::string, Sieve> seen;
    std::deque<Sieve> queue{zero_sieve(c, x)};
    seen.emplace(queue.front().key(), queue.front());
    while (!queue.empty()) {
      Sieve s = queue.front();
      queue.pop_front();
      for (ObjectId y = 0; y < n; ++y) {
        std::size_t d = c.hom_dim(y, x);
        if (!d) continue;
        // Soc_Y = {v ∈ hom(Y, X) : v∘r ∈ S for every radical r: Z -> Y}.
        Matrix soc = Matrix::identity(f, d);
        for (ObjectId z = 0; z < n; ++z) {
          Matrix r = radical_of(c, rad, z, y);
          for (std::size_t j = 0; j < r.cols(); ++j) {
            Morphism rm = morphism_from_column(c, {z}, {y}, r, j);
            Matrix pre = precompose_matrix(rm, {x});
            soc = span_intersection(soc, preimage(pre, s.components[z]));
          }
        }
        Matrix layer = complement_in(s.components[y], soc);
        for (const Matrix& v : lines(f, layer, limit)) {
          std::vector<Matrix> comps = s.components;
          comps[y] = span_sum(comps[y], v);
          Sieve t = close(c, x, std::move(comps));
          std::string k = t.key();
          if (seen.count(k)) continue;
          if (++total > limit) throw WindowError("sieve lattice exceeds the size limit");
          seen.emplace(k, t);
          queue.push_back(t);
        }
      }
    }
    std::vector<Sieve> all;
    for (auto& [k, s] : seen) all.push_back(s);
    std::stable_sort(all.begin(), all.end(), [](const Sieve& a, const Sieve& b) {
      if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
      if (a.dims() != b.dims()) return a.dims() > b.dims();
      return a.key() < b.key();
    });
    l.sieves[x] = all;
    for (std::size_t i = 0; i < all.size(); ++i) l.index[x].emplace(all[i].key(), i);
  }
  return l;
}

}  // namespace hk
