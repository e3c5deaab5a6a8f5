#include "hk/presentations.hpp"

namespace hk {

namespace {

std::string power_name(unsigned k) { return k == 0 ? "id" : k == 1 ? "x" : "x" + std::to_string(k); }

}  // namespace

std::unique_ptr<TableCategory> truncated_polynomial(const FieldSpec& f, unsigned n) {
  if (n < 1) throw Error("k[x]/x^n needs n >= 1");
  std::string name = n == 2 ? "dual numbers k[x]/x^2" : "k[x]/x^" + std::to_string(n);
  auto c = std::make_unique<TableCategory>(name, f);
  ObjectId r = c->add_object("R");
  std::vector<std::string> names;
  for (unsigned k = 0; k < n; ++k) names.push_back(power_name(k));
  c->set_hom_basis(r, r, names);
  Scalar one = Scalar::one(f);
  auto mono = [&](unsigned k) { return k < n ? SparseVec{{k, one}} : SparseVec{}; };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) c->set_composition(r, r, r, a, b, mono(a + b));
  c->set_identity(r, mono(0));
  c->set_unit(r);
  c->set_object_tensor(r, r, r);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) c->set_basis_tensor(r, r, a, r, r, b, mono(a + b));
  c->set_dual(r, r, mono(0), mono(0));
  c->set_braiding(r, r, mono(0));
  return c;
}

std::unique_ptr<TableFunctor> polynomial_functor(const TableCategory& c, const std::string& name, const Matrix& x) {
  if (c.object_count() != 1) throw Error("polynomial functors live on one-object categories");
  if (x.rows() != x.cols()) throw ShapeError("image of x must be square");
  auto th = std::make_unique<TableFunctor>(c, name);
  th->set_dim(0, x.rows());
  Matrix p = Matrix::identity(c.field(), x.rows());
  for (std::size_t k = 0; k < c.hom_dim(0, 0); ++k) {
    th->set_image(0, 0, k, p);
    p = p * x;
  }
  return th;
}

std::vector<std::string> dual_number_functor_names() {
  return {"theta_k2", "theta_k3", "theta_x0", "theta_zero", "theta_m2"};
}

std::unique_ptr<TableFunctor> dual_number_functor(const TableCategory& c, const std::string& name) {
  const FieldSpec& f = c.field();
  if (name == "theta_k2") return polynomial_functor(c, name, Matrix::from_ints(f, {{0, 1}, {0, 0}}));
  if (name == "theta_k3")
    return polynomial_functor(c, name, Matrix::from_ints(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  if (name == "theta_x0") return polynomial_functor(c, name, Matrix::from_ints(f, {{0}}));
  if (name == "theta_zero") return polynomial_functor(c, name, Matrix(f, 0, 0));
  if (name == "theta_m2") {
    // M2(k) with basis E11, E12, E21, E22; right multiplication by E12 sends E11 -> E12, E21 -> E22.
    Matrix x(f, 4, 4);
    x.set(1, 0, Scalar::one(f));
    x.set(3, 2, Scalar::one(f));
    return polynomial_functor(c, name, x);
  }
  throw Error("unknown functor '" + name + "' on the dual numbers");
}

std::unique_ptr<TableFunctor> regular_functor(const TableCategory& c) {
  if (c.object_count() != 1) throw Error("regular functor needs a one-object category");
  const std::size_t n = c.hom_dim(0, 0);
  auto th = std::make_unique<TableFunctor>(c, "regular");
  th->set_dim(0, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix m(c.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : c.compose_basis(0, 0, 0, k, j)) m.set(t.index, j, t.coeff);
    th->set_image(0, 0, k, m);
  }
  return th;
}

}  // namespace hk
