#include "hk/sites.hpp"

namespace hk {

Morphism NoySkeleton::representative(ObjectId s, ObjectId t, std::size_t i) const {
  const NoyHom& h = homs.at({s, t});
  return morphism_from_column(objects.at(s).category(), h.source0, h.target0, h.space.reps, i);
}

NoySkeleton build_noy_skeleton(const Category& c, const std::vector<std::pair<std::string, Morphism>>& objects,
                               const std::map<std::pair<ObjectId, ObjectId>, std::vector<std::string>>& names) {
  NoySkeleton s;
  s.category = std::make_unique<TableCategory>("Noy skeleton of " + c.name(), c.field());
  for (const auto& [name, f] : objects) {
    if (&f.category() != &c) throw ShapeError("skeleton object from a different category");
    s.category->add_object(name);
    s.objects.push_back(f);
    s.n_image.push_back(f.target().empty());
  }
  const auto n = static_cast<ObjectId>(objects.size());
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      NoyHom h = noy_hom(s.objects[a], s.objects[b]);
      std::size_t d = h.space.dim();
      s.homs.emplace(std::make_pair(a, b), h);
      if (!d) continue;
      std::vector<std::string> bn;
      auto it = names.find({a, b});
      if (it != names.end()) {
        if (it->second.size() != d) throw ShapeError("wrong number of basis names for " + objects[a].first + " -> " +
                                                     objects[b].first);
        bn = it->second;
      } else {
        for (std::size_t i = 0; i < d; ++i) bn.push_back(objects[a].first + ">" + objects[b].first + "#" + std::to_string(i));
      }
      s.category->set_hom_basis(a, b, bn);
    }
  for (ObjectId a = 0; a < n; ++a) {
    const NoyHom& h = s.homs.at({a, a});
    Morphism id = Morphism::identity(c, s.objects[a].source());
    s.category->set_identity(a, sparse_from_column(h.space.coordinates(id.coords())));
  }
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (ObjectId z = 0; z < n; ++z) {
        const NoyHom& xz = s.homs.at({x, z});
        for (std::size_t g = 0; g < s.homs.at({y, z}).space.dim(); ++g)
          for (std::size_t f = 0; f < s.homs.at({x, y}).space.dim(); ++f) {
            Morphism comp = compose(s.representative(y, z, g), s.representative(x, y, f));
            s.category->set_composition(x, y, z, g, f, sparse_from_column(xz.space.coordinates(comp.coords())));
          }
      }
  return s;
}

NoySkeleton dual_number_noy_skeleton(const TableCategory& dn) {
  ObjectId r = dn.require_object("R");
  Morphism p = noy_unit_object(dn, {r});
  Morphism l = Morphism::basis(dn, r, r, 1);
  // Representatives: End(P) = hom(R, R) in the basis id, x; Noy(L, P) and Noy(P, L) are spanned by
  // the classes of id and x; End(L) by the class of id.
  NoySkeleton s = build_noy_skeleton(dn, {{"P", p}, {"L", l}},
                                     {{{0, 0}, {"id_P", "x"}}, {{1, 0}, {"ι"}}, {{0, 1}, {"π"}}, {{1, 1}, {"id_L"}}});
  return s;
}

std::unique_ptr<TableFunctor> vec_theta_functor(const Functor& th, const NoySkeleton& s) {
  auto f = std::make_unique<TableFunctor>(*s.category, "vec " + th.name());
  const auto n = static_cast<ObjectId>(s.objects.size());
  for (ObjectId a = 0; a < n; ++a) f->set_dim(a, vec_theta(th, s.objects[a]).cols());
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (std::size_t i = 0; i < s.category->hom_dim(a, b); ++i)
        f->set_image(a, b, i, vec_theta_map(th, NoyMorphism{s.objects[a], s.objects[b], s.representative(a, b, i)}));
  return f;
}

}  // namespace hk
