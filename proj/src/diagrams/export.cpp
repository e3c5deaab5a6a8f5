#include <sstream>

#include "hk/diagrams.hpp"

namespace hk::diagrams {

namespace {

std::string hid(ObjectId s, ObjectId t, std::size_t i) {
  return "h" + std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(i);
}

std::string expr(const FieldSpec& f, ObjectId s, ObjectId t, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& term : v) {
    std::string c = term.coeff.str();
    bool neg = !f.is_prime() && c[0] == '-';
    if (neg) c = c.substr(1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != "1") out += c + "*";
    out += hid(s, t, term.index);
  }
  return out;
}

}  // namespace

std::string export_presentation(const DiagramCategory& c, unsigned len) {
  if (len > c.params().max_len) throw WindowError("export length exceeds the window");
  const FieldSpec& f = c.field();
  std::vector<ObjectId> objs;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    if (c.word(x).size() <= len) objs.push_back(x);
  std::ostringstream os;
  os << "name = " << c.name() << ", exported to length " << len << "\n";
  if (f.is_prime())
    os << "field = F" << f.p << "\n";
  else
    os << "field = Q\n";
  os << "\n[objects]\n";
  for (ObjectId x : objs) os << c.object_name(x) << "\n";
  for (ObjectId s : objs)
    for (ObjectId t : objs) {
      std::size_t d = c.hom_dim(s, t);
      if (!d) continue;
      os << "\n[hom " << c.object_name(s) << " " << c.object_name(t) << "]\n";
      for (std::size_t i = 0; i < d; ++i) os << (i ? " " : "") << hid(s, t, i);
      os << "\n";
    }
  for (ObjectId x : objs) os << "\n[identity " << c.object_name(x) << "]\n" << expr(f, x, x, c.identity(x)) << "\n";
  os << "\n[compose]\n";
  for (ObjectId x : objs)
    for (ObjectId y : objs)
      for (ObjectId z : objs)
        for (std::size_t g = 0; g < c.hom_dim(y, z); ++g)
          for (std::size_t fi = 0; fi < c.hom_dim(x, y); ++fi)
            os << hid(y, z, g) << " " << hid(x, y, fi) << " = " << expr(f, x, z, c.compose_basis(x, y, z, g, fi))
               << "\n";
  os << "\n[monoidal]\nunit = " << c.object_name(c.unit()) << "\n";
  auto fits = [&](ObjectId a, ObjectId b) { return c.word(a).size() + c.word(b).size() <= len; };
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      if (fits(a, b))
        os << c.object_name(a) << " " << c.object_name(b) << " = " << c.object_name(c.tensor_objects(a, b)) << "\n";
  for (ObjectId x : objs)
    for (ObjectId y : objs)
      for (ObjectId x2 : objs)
        for (ObjectId y2 : objs) {
          if (!fits(x, x2) || !fits(y, y2)) continue;
          for (std::size_t i = 0; i < c.hom_dim(x, y); ++i)
            for (std::size_t j = 0; j < c.hom_dim(x2, y2); ++j)
              os << hid(x, y, i) << " * " << hid(x2, y2, j) << " = "
                 << expr(f, c.tensor_objects(x, x2), c.tensor_objects(y, y2), c.tensor_basis(x, y, i, x2, y2, j))
                 << "\n";
        }
  std::ostringstream duals;
  for (ObjectId x : objs) {
    if (2 * c.word(x).size() > len) continue;
    try {
      ObjectId xd = c.dual(x);
      ObjectId dx = c.tensor_objects(xd, x), xdx = c.tensor_objects(x, xd);
      duals << c.object_name(x) << " = " << c.object_name(xd) << " ; ev = " << expr(f, dx, c.unit(), c.ev(x))
            << " ; co = " << expr(f, c.unit(), xdx, c.co(x)) << "\n";
    } catch (const WindowError&) {
    }
  }
  if (!duals.str().empty()) os << "\n[dual]\n" << duals.str();
  if (c.has_braiding()) {
    os << "\n[braiding]\n";
    for (ObjectId a : objs)
      for (ObjectId b : objs)
        if (fits(a, b))
          os << c.object_name(a) << " " << c.object_name(b) << " = "
             << expr(f, c.tensor_objects(a, b), c.tensor_objects(b, a), c.braiding(a, b)) << "\n";
  }
  return os.str();
}

}  // namespace hk::diagrams
