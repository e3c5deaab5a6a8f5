#include <algorithm>
#include <functional>

#include "hk/sites.hpp"

namespace hk {

namespace {

constexpr std::size_t kVectorLimit = 1u << 16;

// {h ∈ hom(Y, X) : h∘t ∈ R(Z) for every t in T(Z)}, T a sieve on Y and R a sieve on X.
Matrix factor_space(const Category& c, ObjectId x, const Sieve& t, const Sieve& r) {
  ObjectId y = t.root;
  Matrix h = Matrix::identity(c.field(), c.hom_dim(y, x));
  for (ObjectId z = 0; z < c.object_count(); ++z) {
    const Matrix& tz = t.components[z];
    for (std::size_t j = 0; j < tz.cols(); ++j) {
      Matrix pre = precompose_matrix(morphism_from_column(c, {z}, {y}, tz, j), {x});
      h = span_intersection(h, preimage(pre, r.components[z]));
    }
  }
  return h;
}

// span(v) ⊆ ∪ spaces. Over an infinite field this holds iff span(v) lies in one of them; over F_p
// every vector is tested.
bool covered_by_union(const FieldSpec& f, const Matrix& v, const std::vector<Matrix>& spaces) {
  if (!v.cols()) return true;
  for (const Matrix& s : spaces)
    if (in_span(s, v)) return true;
  if (!f.is_prime()) return false;
  std::size_t count = 1;
  for (std::size_t k = 0; k < v.cols(); ++k) {
    count *= f.p;
    if (count > kVectorLimit) throw WindowError("too many vectors to test a union of subspaces");
  }
  for (std::size_t code = 1; code < count; ++code) {
    Matrix w(f, v.rows(), 1);
    std::size_t c = code;
    for (std::size_t k = 0; k < v.cols(); ++k) {
      std::uint32_t a = static_cast<std::uint32_t>(c % f.p);
      c /= f.p;
      if (a) w = w + v.column(k).scaled(Scalar::from_mod(f, a));
    }
    bool hit = false;
    for (const Matrix& s : spaces)
      if (in_span(s, w)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool contains(const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); }

std::vector<std::size_t> minimal_dims(const SieveLattice& l, const TopologyTable& t) {
  std::vector<std::size_t> d;
  auto m = t.minimal(l);
  for (std::size_t x = 0; x < m.size(); ++x) d.push_back(l.sieves[x][m[x]].total_dim());
  return d;
}

// Up-sets of the sieve poset on one object that contain the maximal sieve.
std::vector<std::vector<std::size_t>> upsets(const std::vector<Sieve>& sieves, std::size_t limit) {
  std::size_t n = sieves.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = sieve_less_equal(sieves[i], sieves[j]);
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> in(n, false);
  in[n - 1] = true;  // sieves are sorted by dimension; the last one is maximal
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == 0) {
      std::vector<std::size_t> cover;
      for (std::size_t i = 0; i < n; ++i)
        if (in[i]) cover.push_back(i);
      out.push_back(cover);
      if (out.size() > limit) throw WindowError("too many candidate topologies");
      return;
    }
    std::size_t i = k - 1;
    in[i] = false;
    rec(k - 1);
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && leq[i][j] && !in[j]) ok = false;
    if (ok) {
      in[i] = true;
      rec(k - 1);
      in[i] = false;
    }
  };
  rec(n - 1);
  return out;
}

}  // namespace

std::vector<std::size_t> TopologyTable::minimal(const SieveLattice& l) const {
  std::vector<std::size_t> m;
  for (std::size_t x = 0; x < covering.size(); ++x) {
    std::size_t best = covering[x].front();
    for (std::size_t i : covering[x])
      if (l.sieves[x][i].total_dim() < l.sieves[x][best].total_dim()) best = i;
    m.push_back(best);
  }
  return m;
}

bool operator==(const TopologyTable& a, const TopologyTable& b) { return a.covering == b.covering; }

bool is_topology(const Category& c, const SieveLattice& l, const TopologyTable& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto n = static_cast<ObjectId>(c.object_count());
  if (t.covering.size() != n) return fail("wrong number of objects");
  for (ObjectId x = 0; x < n; ++x)
    if (!contains(t.covering[x], l.sieves[x].size() - 1))
      return fail("maximal sieve on " + c.object_name(x) + " does not cover");
  for (ObjectId x = 0; x < n; ++x)
    for (std::size_t si : t.covering[x]) {
      const Sieve& s = l.sieves[x][si];
      for (ObjectId y = 0; y < n; ++y) {
        if (!c.hom_dim(y, x)) continue;
        std::vector<Matrix> spaces;
        for (std::size_t ti : t.covering[y]) spaces.push_back(factor_space(c, x, l.sieves[y][ti], s));
        if (!covered_by_union(c.field(), Matrix::identity(c.field(), c.hom_dim(y, x)), spaces))
          return fail("pullback of " + describe_sieve(c, s) + " on " + c.object_name(x) + " along a morphism from " +
                      c.object_name(y) + " does not cover");
      }
    }
  for (ObjectId x = 0; x < n; ++x)
    for (std::size_t si : t.covering[x])
      for (std::size_t ri = 0; ri < l.sieves[x].size(); ++ri) {
        if (contains(t.covering[x], ri)) continue;
        const Sieve &s = l.sieves[x][si], &r = l.sieves[x][ri];
        bool local = true;
        for (ObjectId y = 0; y < n && local; ++y) {
          std::vector<Matrix> spaces;
          for (std::size_t ti : t.covering[y]) spaces.push_back(factor_space(c, x, l.sieves[y][ti], r));
          local = covered_by_union(c.field(), s.components[y], spaces);
        }
        if (local)
          return fail("local character: " + describe_sieve(c, r) + " on " + c.object_name(x) +
                      " is locally covering but does not cover");
      }
  return true;
}

TopologyCensus enumerate_topologies(const Category& c, std::size_t limit) {
  TopologyCensus census;
  census.lattice = enumerate_sieves(c, limit);
  const auto n = static_cast<ObjectId>(c.object_count());
  std::vector<std::vector<std::vector<std::size_t>>> per;
  std::size_t total = 1;
  for (ObjectId x = 0; x < n; ++x) {
    per.push_back(upsets(census.lattice.sieves[x], limit));
    total *= per.back().size();
    if (total > limit) throw WindowError("too many candidate topologies");
  }
  census.candidates = total;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t k = code;
    TopologyTable t;
    for (ObjectId x = 0; x < n; ++x) {
      t.covering.push_back(per[x][k % per[x].size()]);
      k /= per[x].size();
    }
    if (is_topology(c, census.lattice, t)) census.topologies.push_back(t);
  }
  std::stable_sort(census.topologies.begin(), census.topologies.end(), [&](const auto& a, const auto& b) {
    auto da = minimal_dims(census.lattice, a), db = minimal_dims(census.lattice, b);
    if (da != db) return da < db;
    return a.covering < b.covering;
  });
  for (std::size_t i = 0; i < census.topologies.size(); ++i) census.topologies[i].label = "R" + std::to_string(i);
  return census;
}

std::optional<std::size_t> match_topology(const TopologyCensus& census, const TopologyTable& t) {
  for (std::size_t i = 0; i < census.topologies.size(); ++i)
    if (census.topologies[i] == t) return i;
  return std::nullopt;
}

TopologyTable topology_of_functor(const Functor& th, const SieveLattice& l) {
  const Category& c = th.source();
  const FieldSpec& f = c.field();
  TopologyTable t;
  for (ObjectId x = 0; x < l.sieves.size(); ++x) {
    std::vector<std::size_t> cover;
    std::size_t target = th.dim(x);
    for (std::size_t i = 0; i < l.sieves[x].size(); ++i) {
      const Sieve& s = l.sieves[x][i];
      std::vector<Matrix> imgs;
      for (ObjectId y = 0; y < s.components.size(); ++y)
        for (std::size_t j = 0; j < s.components[y].cols(); ++j)
          imgs.push_back(apply(th, morphism_from_column(c, {y}, {x}, s.components[y], j)));
      if (rank(Matrix::hstack(imgs, f, target)) == target) cover.push_back(i);
    }
    t.covering.push_back(cover);
  }
  return t;
}

HomologicalTopology homological_topology(const Functor& th, const NoySkeleton& s, const TopologyCensus& census) {
  auto vt = vec_theta_functor(th, s);
  HomologicalTopology h{topology_of_functor(*vt, census.lattice), std::nullopt, "not a topology"};
  h.index = match_topology(census, h.table);
  if (h.index) h.label = census.topologies[*h.index].label;
  return h;
}

Sieve canonical_sieve_Rf(const NoySkeleton& s, ObjectId f) {
  const TableCategory& c = *s.category;
  std::vector<Morphism> gens;
  for (ObjectId y = 0; y < c.object_count(); ++y)
    if (s.n_image[y])
      for (std::size_t i = 0; i < c.hom_dim(y, f); ++i) gens.push_back(Morphism::basis(c, y, f, i));
  return sieve_closure(c, f, gens);
}

bool iota_image_test(const NoySkeleton& s, const SieveLattice& l, const TopologyTable& t) {
  for (ObjectId f = 0; f < s.objects.size(); ++f)
    if (!contains(t.covering[f], l.find(canonical_sieve_Rf(s, f)))) return false;
  return true;
}

}  // namespace hk
