#include "hk/category.hpp"

namespace hk {

std::string TableCategory::object_name(ObjectId x) const {
  if (x >= objects_.size()) throw ShapeError("object id out of range");
  return objects_[x];
}

std::optional<ObjectId> TableCategory::find_object(std::string_view name) const {
  for (ObjectId i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::size_t TableCategory::hom_dim(ObjectId src, ObjectId tgt) const {
  auto it = bases_.find({src, tgt});
  return it == bases_.end() ? 0 : it->second.size();
}

std::string TableCategory::basis_name(ObjectId src, ObjectId tgt, std::size_t i) const {
  auto it = bases_.find({src, tgt});
  if (it == bases_.end() || i >= it->second.size()) throw ShapeError("basis index out of range");
  return it->second[i];
}

SparseVec TableCategory::compose_basis(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const {
  auto it = comp_.find({x, y, z, g, f});
  if (it == comp_.end())
    throw MissingData("missing structure constant for " + basis_name(y, z, g) + " " + basis_name(x, y, f));
  return it->second;
}

SparseVec TableCategory::identity(ObjectId x) const {
  auto it = identities_.find(x);
  if (it == identities_.end()) throw MissingData("missing identity of " + object_name(x));
  return it->second;
}

ObjectId TableCategory::unit() const {
  if (!unit_) throw MissingData(name_ + ": no monoidal structure");
  return *unit_;
}

ObjectId TableCategory::tensor_objects(ObjectId a, ObjectId b) const {
  auto it = obj_tensor_.find({a, b});
  if (it == obj_tensor_.end())
    throw MissingData("missing object tensor " + object_name(a) + " " + object_name(b));
  return it->second;
}

SparseVec TableCategory::tensor_basis(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                                      std::size_t j) const {
  auto it = basis_tensor_.find({x, y, i, x2, y2, j});
  if (it == basis_tensor_.end())
    throw MissingData("missing basis tensor " + basis_name(x, y, i) + " * " + basis_name(x2, y2, j));
  return it->second;
}

ObjectId TableCategory::dual(ObjectId x) const {
  auto it = duals_.find(x);
  if (it == duals_.end()) throw MissingData("missing dual of " + object_name(x));
  return it->second.object;
}

SparseVec TableCategory::ev(ObjectId x) const {
  auto it = duals_.find(x);
  if (it == duals_.end()) throw MissingData("missing dual of " + object_name(x));
  return it->second.ev;
}

SparseVec TableCategory::co(ObjectId x) const {
  auto it = duals_.find(x);
  if (it == duals_.end()) throw MissingData("missing dual of " + object_name(x));
  return it->second.co;
}

SparseVec TableCategory::braiding(ObjectId x, ObjectId y) const {
  auto it = braidings_.find({x, y});
  if (it == braidings_.end()) throw MissingData("missing braiding " + object_name(x) + " " + object_name(y));
  return it->second;
}

ObjectId TableCategory::add_object(const std::string& name) {
  if (find_object(name)) throw Error("duplicate object '" + name + "'");
  objects_.push_back(name);
  return static_cast<ObjectId>(objects_.size() - 1);
}

void TableCategory::set_hom_basis(ObjectId s, ObjectId t, std::vector<std::string> names) {
  if (s >= objects_.size() || t >= objects_.size()) throw ShapeError("object id out of range");
  if (bases_.count({s, t})) throw Error("hom basis of " + objects_[s] + " -> " + objects_[t] + " given twice");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (basis_lookup_.count(names[i])) throw Error("duplicate basis id '" + names[i] + "'");
    basis_lookup_.emplace(names[i], BasisRef{s, t, i});
  }
  bases_[{s, t}] = std::move(names);
}

namespace {

void check_sparse(const SparseVec& v, std::size_t dim, const FieldSpec& f) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].index >= dim) throw ShapeError("structure constant index out of range");
    if (k && v[k].index <= v[k - 1].index) throw ShapeError("sparse vector not strictly sorted");
    require_same_field(f, v[k].coeff.field());
  }
}

}  // namespace

void TableCategory::set_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f, SparseVec v) {
  if (g >= hom_dim(y, z) || f >= hom_dim(x, y)) throw ShapeError("composition basis index out of range");
  check_sparse(v, hom_dim(x, z), field_);
  comp_[{x, y, z, g, f}] = std::move(v);
}

bool TableCategory::has_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const {
  return comp_.count({x, y, z, g, f}) > 0;
}

void TableCategory::set_identity(ObjectId x, SparseVec v) {
  check_sparse(v, hom_dim(x, x), field_);
  identities_[x] = std::move(v);
}

void TableCategory::set_object_tensor(ObjectId a, ObjectId b, ObjectId c) { obj_tensor_[{a, b}] = c; }

void TableCategory::set_basis_tensor(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                                     std::size_t j, SparseVec v) {
  check_sparse(v, hom_dim(tensor_objects(x, x2), tensor_objects(y, y2)), field_);
  basis_tensor_[{x, y, i, x2, y2, j}] = std::move(v);
}

bool TableCategory::has_basis_tensor(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                                     std::size_t j) const {
  return basis_tensor_.count({x, y, i, x2, y2, j}) > 0;
}

void TableCategory::set_dual(ObjectId x, ObjectId xd, SparseVec ev, SparseVec co) {
  duals_[x] = Dual{xd, std::move(ev), std::move(co)};
}

void TableCategory::set_braiding(ObjectId x, ObjectId y, SparseVec v) { braidings_[{x, y}] = std::move(v); }

std::optional<BasisRef> TableCategory::find_basis(std::string_view name) const {
  auto it = basis_lookup_.find(name);
  if (it == basis_lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hk
