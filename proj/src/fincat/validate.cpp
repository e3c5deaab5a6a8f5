#include <functional>
#include <sstream>

#include "hk/category.hpp"

namespace hk {

namespace {

constexpr std::size_t kMonoidalCheckCap = 20000;

struct BasisMor {
  ObjectId s, t;
  std::size_t i;
};

std::vector<BasisMor> basis_morphisms(const Category& c, const std::vector<ObjectId>& objs) {
  std::vector<BasisMor> v;
  for (ObjectId s : objs)
    for (ObjectId t : objs)
      for (std::size_t i = 0; i < c.hom_dim(s, t); ++i) v.push_back({s, t, i});
  return v;
}

std::string bname(const Category& c, const BasisMor& b) {
  return c.basis_name(b.s, b.t, b.i) + " : " + c.object_name(b.s) + " -> " + c.object_name(b.t);
}

// Runs a check, turning missing data into a violation and window overflow into a note.
void guarded(ValidationReport& r, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const WindowError& e) {
    r.notes.push_back(std::string("skipped (window): ") + e.what());
  } catch (const MissingData& e) {
    r.violations.push_back(e.what());
  } catch (const Error& e) {
    r.violations.push_back(e.what());
  }
}

// As guarded, but absent data only skips the check (truncated presentations lack large tensors).
void guarded_partial(ValidationReport& r, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const WindowError& e) {
    r.notes.push_back(std::string("skipped (window): ") + e.what());
  } catch (const MissingData& e) {
    r.notes.push_back(std::string("skipped (no data): ") + e.what());
  } catch (const Error& e) {
    r.violations.push_back(e.what());
  }
}

void monoidal_checks(const Category& c, const std::vector<ObjectId>& objs, ValidationReport& r) {
  ObjectId one = c.unit();
  guarded_partial(r, [&] {
    if (c.hom_dim(one, one) == 0) r.violations.push_back("unit object has zero endomorphisms");
  });
  for (ObjectId x : objs)
    guarded_partial(r, [&] {
      ++r.checks;
      if (c.tensor_objects(one, x) != x || c.tensor_objects(x, one) != x)
        r.violations.push_back("unit law fails on object " + c.object_name(x));
    });
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      for (ObjectId d : objs)
        guarded_partial(r, [&] {
          ++r.checks;
          if (c.tensor_objects(c.tensor_objects(a, b), d) != c.tensor_objects(a, c.tensor_objects(b, d)))
            r.violations.push_back("object tensor not associative on " + c.object_name(a) + ", " + c.object_name(b) +
                                   ", " + c.object_name(d));
        });
  auto bm = basis_morphisms(c, objs);
  Morphism id1 = Morphism::identity(c, {one});
  for (const auto& b : bm)
    guarded_partial(r, [&] {
      ++r.checks;
      Morphism f = Morphism::basis(c, b.s, b.t, b.i);
      if (tensor(id1, f) != f || tensor(f, id1) != f) r.violations.push_back("unit law fails for " + bname(c, b));
    });
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      guarded_partial(r, [&] {
        ++r.checks;
        Morphism lhs = tensor(Morphism::identity(c, {a}), Morphism::identity(c, {b}));
        if (lhs != Morphism::identity(c, {c.tensor_objects(a, b)}))
          r.violations.push_back("id ⊗ id is not the identity on " + c.object_name(a) + " ⊗ " + c.object_name(b));
      });
  std::size_t count = 0;
  bool capped = false;
  for (const auto& f : bm)
    for (const auto& g : bm) {
      if (g.s != f.t) continue;
      for (const auto& f2 : bm)
        for (const auto& g2 : bm) {
          if (g2.s != f2.t) continue;
          if (++count > kMonoidalCheckCap) {
            capped = true;
            break;
          }
          guarded_partial(r, [&] {
            ++r.checks;
            Morphism F = Morphism::basis(c, f.s, f.t, f.i), G = Morphism::basis(c, g.s, g.t, g.i);
            Morphism F2 = Morphism::basis(c, f2.s, f2.t, f2.i), G2 = Morphism::basis(c, g2.s, g2.t, g2.i);
            if (compose(tensor(G, G2), tensor(F, F2)) != tensor(compose(G, F), compose(G2, F2)))
              r.violations.push_back("interchange law fails for " + bname(c, g) + ", " + bname(c, f) + ", " +
                                     bname(c, g2) + ", " + bname(c, f2));
          });
        }
      if (capped) break;
    }
  if (capped) r.notes.push_back("interchange checks capped at " + std::to_string(kMonoidalCheckCap));
}

void duality_checks(const Category& c, const std::vector<ObjectId>& objs, ValidationReport& r) {
  for (ObjectId x : objs)
    guarded_partial(r, [&] {
      ObjectId xd;
      try {
        xd = c.dual(x);
      } catch (const MissingData&) {
        r.notes.push_back("no duality data for " + c.object_name(x));
        return;
      }
      ++r.checks;
      Morphism idx = Morphism::identity(c, {x}), idxd = Morphism::identity(c, {xd});
      Morphism ev = ev_morphism(c, x), co = co_morphism(c, x);
      Morphism s1 = compose(tensor(idx, ev), tensor(co, idx));
      if (s1 != idx) r.violations.push_back("snake relation (id ⊗ ev)(co ⊗ id) = id fails on " + c.object_name(x));
      Morphism s2 = compose(tensor(ev, idxd), tensor(idxd, co));
      if (s2 != idxd) r.violations.push_back("snake relation (ev ⊗ id)(id ⊗ co) = id fails on " + c.object_name(x));
    });
}

void braiding_checks(const Category& c, const std::vector<ObjectId>& objs, ValidationReport& r) {
  for (ObjectId x : objs)
    for (ObjectId y : objs)
      guarded_partial(r, [&] {
        ++r.checks;
        Morphism sxy = braiding_morphism(c, x, y), syx = braiding_morphism(c, y, x);
        if (compose(syx, sxy) != Morphism::identity(c, {c.tensor_objects(x, y)}))
          r.violations.push_back("braiding is not symmetric on " + c.object_name(x) + ", " + c.object_name(y));
      });
}

}  // namespace

ValidationReport validate_category(const Category& c, const std::vector<ObjectId>& objects) {
  ValidationReport r;
  std::vector<ObjectId> objs = objects.empty() ? all_objects(c) : objects;
  const FieldSpec& f = c.field();
  for (ObjectId x : objs)
    guarded(r, [&] {
      ++r.checks;
      SparseVec id = c.identity(x);
      for (const auto& t : id)
        if (t.index >= c.hom_dim(x, x)) r.violations.push_back("identity of " + c.object_name(x) + " out of range");
    });
  auto bm = basis_morphisms(c, objs);
  for (const auto& b : bm)
    guarded(r, [&] {
      ++r.checks;
      Morphism m = Morphism::basis(c, b.s, b.t, b.i);
      if (compose(Morphism::identity(c, {b.t}), m) != m) r.violations.push_back("left unit law fails for " + bname(c, b));
      if (compose(m, Morphism::identity(c, {b.s})) != m) r.violations.push_back("right unit law fails for " + bname(c, b));
    });
  for (const auto& a : bm)
    for (const auto& b : bm) {
      if (b.s != a.t) continue;
      for (const auto& d : bm) {
        if (d.s != b.t) continue;
        guarded(r, [&] {
          ++r.checks;
          SparseVec ba = c.compose_basis(a.s, a.t, b.t, b.i, a.i);
          SparseVec lhs;
          for (const auto& t : ba) sparse_axpy(lhs, t.coeff, c.compose_basis(a.s, b.t, d.t, d.i, t.index));
          SparseVec db = c.compose_basis(b.s, b.t, d.t, d.i, b.i);
          SparseVec rhs;
          for (const auto& t : db) sparse_axpy(rhs, t.coeff, c.compose_basis(a.s, a.t, d.t, t.index, a.i));
          Matrix l = dense_column(f, lhs, c.hom_dim(a.s, d.t)), rr = dense_column(f, rhs, c.hom_dim(a.s, d.t));
          if (l != rr)
            r.violations.push_back("associativity fails for " + bname(c, d) + ", " + bname(c, b) + ", " + bname(c, a));
        });
      }
    }
  if (c.is_monoidal()) monoidal_checks(c, objs, r);
  if (c.has_duals()) duality_checks(c, objs, r);
  if (c.has_braiding()) braiding_checks(c, objs, r);
  return r;
}

ValidationReport validate_functor(const Functor& th, const std::vector<ObjectId>& objects) {
  ValidationReport r;
  const Category& c = th.source();
  const FieldSpec& f = c.field();
  std::vector<ObjectId> objs = objects.empty() ? all_objects(c) : objects;
  auto bm = basis_morphisms(c, objs);
  for (const auto& b : bm)
    guarded(r, [&] {
      ++r.checks;
      Matrix m = th.basis_image(b.s, b.t, b.i);
      if (m.rows() != th.dim(b.t) || m.cols() != th.dim(b.s))
        r.violations.push_back("image of " + bname(c, b) + " has wrong shape");
    });
  if (!r.ok()) return r;
  for (ObjectId x : objs)
    guarded(r, [&] {
      ++r.checks;
      if (apply(th, Morphism::identity(c, {x})) != Matrix::identity(f, th.dim(x)))
        r.violations.push_back("identity of " + c.object_name(x) + " is not sent to an identity matrix");
    });
  for (const auto& a : bm)
    for (const auto& b : bm) {
      if (b.s != a.t) continue;
      guarded(r, [&] {
        ++r.checks;
        Matrix lhs = apply(th, Morphism::from_sparse(c, a.s, b.t, c.compose_basis(a.s, a.t, b.t, b.i, a.i)));
        Matrix rhs = th.basis_image(b.s, b.t, b.i) * th.basis_image(a.s, a.t, a.i);
        if (lhs != rhs) r.violations.push_back("composition not preserved for " + bname(c, b) + " after " + bname(c, a));
      });
    }
  if (th.is_monoidal()) {
    guarded(r, [&] {
      if (th.dim(c.unit()) != 1) r.violations.push_back("unit object is not sent to a line");
    });
    std::size_t count = 0;
    for (const auto& a : bm)
      for (const auto& b : bm) {
        if (++count > kMonoidalCheckCap) break;
        guarded(r, [&] {
          ++r.checks;
          Morphism fa = Morphism::basis(c, a.s, a.t, a.i), fb = Morphism::basis(c, b.s, b.t, b.i);
          if (apply(th, tensor(fa, fb)) != th.basis_image(a.s, a.t, a.i).kron(th.basis_image(b.s, b.t, b.i)))
            r.violations.push_back("tensor not preserved for " + bname(c, a) + " ⊗ " + bname(c, b));
        });
      }
  }
  return r;
}

bool is_faithful_on_window(const Functor& th, const std::vector<ObjectId>& window) {
  const Category& c = th.source();
  const FieldSpec& f = c.field();
  for (ObjectId s : window)
    for (ObjectId t : window) {
      std::size_t d = c.hom_dim(s, t);
      if (d == 0) continue;
      std::size_t n = th.dim(s) * th.dim(t);
      Matrix m(f, n, d);
      for (std::size_t i = 0; i < d; ++i) {
        Matrix img = th.basis_image(s, t, i);
        for (std::size_t a = 0; a < img.rows(); ++a)
          for (std::size_t b = 0; b < img.cols(); ++b)
            if (!img.entry_is_zero(a, b)) m.set(a * img.cols() + b, i, img.at(a, b));
      }
      if (rank(m) < d) return false;
    }
  return true;
}

}  // namespace hk
