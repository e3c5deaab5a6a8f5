#include <random>

#include "doctest.h"
#include "hk/diagrams.hpp"

using namespace hk;
using namespace hk::diagrams;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

std::size_t hdim(const DiagramCategory& c, const std::string& s, const std::string& t) {
  return c.hom_dim(c.require_word(c.parse_word(s)), c.require_word(c.parse_word(t)));
}

ObjectId obj(const DiagramCategory& c, const std::string& s) { return c.require_word(c.parse_word(s)); }

// Is -∘m injective on hom(target m, w) for every window word w?
bool precomposition_injective(const DiagramCategory& c, const Morphism& m, unsigned max_len) {
  for (ObjectId w = 0; w < c.object_count(); ++w) {
    if (c.word(w).size() > max_len) continue;
    Matrix p = precompose_matrix(m, {w});
    if (rank(p) != p.cols()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hom dimensions agree with the brute-force oracle") {
  // Frozen from tests/oracles/diagram_dims.py.
  auto ob = build_OB(Scalar(Q, 0), 6);
  CHECK(hdim(*ob, "bw", "bw") == 2);
  CHECK(hdim(*ob, "bbww", "bbww") == 24);
  CHECK(hdim(*ob, "bb", "bb") == 2);
  CHECK(hdim(*ob, "bbb", "bbb") == 6);
  CHECK(hdim(*ob, "1", "bw") == 1);
  CHECK(hdim(*ob, "bw", "1") == 1);
  CHECK(hdim(*ob, "bwbw", "1") == 2);
  CHECK(hdim(*ob, "bwb", "b") == 2);
  CHECK(hdim(*ob, "wb", "bw") == 2);
  auto mo = build_MO(Scalar(Q, 0), Scalar(Q, 0), 4);
  CHECK(hdim(*mo, "b", "B") == 1);
  CHECK(hdim(*mo, "B", "b") == 0);
  CHECK(hdim(*mo, "bB", "BB") == 2);
  CHECK(hdim(*mo, "bw", "BW") == 1);
  CHECK(hdim(*mo, "BW", "bw") == 1);
  CHECK(hdim(*mo, "bW", "1") == 1);
  CHECK(hdim(*mo, "1", "BW") == 1);
  CHECK(hdim(*mo, "bbw", "B") == 2);
  CHECK(hdim(*mo, "bbww", "BBWW") == 4);
  std::vector<Scalar> deltas{Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 4)};
  auto en3 = build_EN(deltas, 2, 3);
  CHECK(hdim(*en3, "b", "b") == 4);
  auto en2 = build_EN(deltas, 2, 2);
  CHECK(hdim(*en2, "bb", "bb") == 12);
  CHECK(hdim(*en2, "bw", "1") == 3);
  auto seq = build_Seq(Q, 4, 2);
  CHECK(hdim(*seq, "X0X1", "X0X1") == 1);
  CHECK(hdim(*seq, "1", "X0X1") == 1);
  CHECK(hdim(*seq, "X0X1", "1") == 0);
  CHECK(hdim(*seq, "X0X2X1X1", "X0X1") == 1);
  CHECK(hdim(*seq, "X1X0", "1") == 1);
  CHECK(hdim(*seq, "X0X1X0X1", "X0X1") == 1);
  CHECK(hdim(*seq, "X0X1X0X1", "1") == 0);
  CHECK(hdim(*seq, "X1", "X1") == 1);
  CHECK(hdim(*seq, "X2X1X0", "X2") == 1);
}

TEST_CASE("OB closed loops evaluate to delta") {
  for (const FieldSpec& f : {Q, F2})
    for (long d : {0L, 2L, -1L}) {
      auto ob = build_OB(Scalar(f, d), 4);
      ObjectId b = obj(*ob, "b"), w = obj(*ob, "w");
      // ev_∘ : •∘ -> 1 after co_• : 1 -> •∘ closes one loop.
      Morphism loop = compose(ev_morphism(*ob, w), co_morphism(*ob, b));
      CHECK(loop == Morphism::identity(*ob, {ob->unit()}).scaled(Scalar(f, d)));
      // L disjoint loops carry δ^L.
      Morphism acc = Morphism::identity(*ob, {ob->unit()});
      for (unsigned L = 1; L <= 2; ++L) {
        acc = tensor(acc, loop);
        CHECK(acc == Morphism::identity(*ob, {ob->unit()}).scaled(Scalar(f, d).pow(L)));
      }
      // cup∘cap on •∘ is δ-free but idempotent up to δ: (co ev)(co ev) = δ co ev.
      Morphism e = compose(co_morphism(*ob, b), ev_morphism(*ob, w));
      CHECK(compose(e, e) == e.scaled(Scalar(f, d)));
    }
}

TEST_CASE("snake identities and braiding symmetry") {
  auto ob = build_OB(Scalar(Q, 3), 6);
  ValidationReport r = validate_category(*ob, {0, 1, 2, 3, 4, 5, 6});
  CHECK(r.ok());
  for (const auto& v : r.violations) MESSAGE(v);
  for (const char* w : {"b", "w", "bw", "wb"}) {
    ObjectId x = obj(*ob, w), xd = ob->dual(x);
    Morphism idx = Morphism::identity(*ob, {x}), idxd = Morphism::identity(*ob, {xd});
    CHECK(compose(tensor(idx, ev_morphism(*ob, x)), tensor(co_morphism(*ob, x), idx)) == idx);
    CHECK(compose(tensor(ev_morphism(*ob, x), idxd), tensor(idxd, co_morphism(*ob, x))) == idxd);
  }
}

TEST_CASE("EN dots add along strands and overflow is an error") {
  std::vector<Scalar> deltas{Scalar(Q, 5), Scalar(Q, 7), Scalar(Q, 11)};
  auto en = build_EN(deltas, 2, 2);
  Morphism eps = dot_morphism(*en);
  Morphism two = compose(eps, eps);
  ObjectId b = obj(*en, "b");
  CHECK(two == en->diagram_morphism(PairingDiagram{{0}, {0}, {{0, 1}}, {2}}));
  CHECK_THROWS_AS(compose(eps, two), WindowError);
  // A loop with one dot evaluates to δ_1.
  ObjectId w = obj(*en, "w");
  Morphism loop = compose(ev_morphism(*en, w), compose(tensor(eps, Morphism::identity(*en, {w})), co_morphism(*en, b)));
  CHECK(loop == Morphism::identity(*en, {en->unit()}).scaled(Scalar(Q, 7)));
  auto check_conservation = [&](const PairingDiagram& g, const PairingDiagram& f) {
    Scalar factor;
    PairingDiagram h = en->compose_diagrams(g, f, factor);
    return h.total_dots() <= f.total_dots() + g.total_dots();
  };
  const auto& basis = en->hom_basis(obj(*en, "bw"), obj(*en, "bw"));
  for (const auto& f : basis)
    for (const auto& g : basis) {
      if (f.total_dots() + g.total_dots() > 2) continue;
      CHECK(check_conservation(g, f));
    }
}

TEST_CASE("MO: mu is a monomorphism on the window") {
  auto mo = build_MO(Scalar(Q, 2), Scalar(Q, 3), 5);
  Morphism mu = mu_morphism(*mo);
  CHECK(mo->hom_dim(obj(*mo, "b"), obj(*mo, "B")) == 1);
  // hom(■, w) -> hom(•, w) for |w| <= 4 (sources of length 1, so targets fit the window).
  CHECK(precomposition_injective(*mo, mu, 4));
  // A closed ■-loop evaluates to t.
  ObjectId B = obj(*mo, "B"), W = obj(*mo, "W");
  Morphism loop = compose(ev_morphism(*mo, W), co_morphism(*mo, B));
  CHECK(loop == Morphism::identity(*mo, {mo->unit()}).scaled(Scalar(Q, 3)));
  auto mo0 = build_MO(Scalar(F2, 0), Scalar(F2, 1), 5);
  CHECK(precomposition_injective(*mo0, mu_morphism(*mo0), 4));
}

TEST_CASE("Seq: iota is a monomorphism and crossings are rejected") {
  auto seq = build_Seq(Q, 6, 2);
  Morphism iota = iota_morphism(*seq);
  CHECK(iota.source().size() == 2);
  for (ObjectId w = 0; w < seq->object_count(); ++w) {
    if (seq->word(w).size() > 4) continue;
    Matrix p = precompose_matrix(iota, {w});
    CHECK(rank(p) == p.cols());
  }
  PairingDiagram crossing{{1, 0, 1, 0}, {}, {{0, 2}, {1, 3}}, {}};
  CHECK_FALSE(seq->is_legal(crossing));
  PairingDiagram nested{{1, 1, 0, 0}, {}, {{0, 3}, {1, 2}}, {}};
  CHECK(seq->is_legal(nested));
  CHECK_FALSE(seq->has_braiding());
  ValidationReport r = validate_category(*seq, {0, 1, 2, 3, 4, 5});
  CHECK(r.ok());
}

TEST_CASE("vector functors are strict monoidal functors") {
  auto ob = build_OB(Scalar(F2, 0), 4);
  VectorFunctor th(*ob, 2);
  std::vector<ObjectId> window;
  for (ObjectId x = 0; x < ob->object_count(); ++x)
    if (ob->word(x).size() <= 2) window.push_back(x);
  ValidationReport r = validate_functor(th, window);
  CHECK(r.ok());
  for (const auto& v : r.violations) MESSAGE(v);
  CHECK(is_faithful_on_window(th, window));
  // cup after cap on k^n is n·id, numerically.
  auto obq = build_OB(Scalar(Q, 3), 2);
  VectorFunctor th3(*obq, 3);
  Morphism loop = compose(ev_morphism(*obq, obj(*obq, "w")), co_morphism(*obq, obj(*obq, "b")));
  CHECK(apply(th3, loop) == Matrix::from_ints(Q, {{3}}));

  auto mo = build_MO(Scalar(Q, 2), Scalar(Q, 3), 3);
  VectorFunctor tm(*mo, 2, 3, Matrix::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}}));
  std::vector<ObjectId> mw;
  for (ObjectId x = 0; x < mo->object_count(); ++x)
    if (mo->word(x).size() <= 2) mw.push_back(x);
  ValidationReport rm = validate_functor(tm, mw);
  CHECK(rm.ok());
  for (const auto& v : rm.violations) MESSAGE(v);

  Matrix a = Matrix::from_ints(Q, {{1, 1}, {0, 2}});
  std::vector<Scalar> deltas{Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 5)};  // traces of A^0, A^1, A^2
  auto en = build_EN(deltas, 2, 2);
  VectorFunctor te(*en, 2, 0, {}, a);
  ValidationReport re = validate_functor(te, {0, 1, 2, 3, 4, 5, 6});
  CHECK(re.ok());
  for (const auto& v : re.violations) MESSAGE(v);
}

TEST_CASE("diagram categories satisfy the category axioms on small windows") {
  CHECK(validate_category(*build_OB(Scalar(Q, -1), 3), {0, 1, 2, 3, 4, 5, 6}).ok());
  CHECK(validate_category(*build_MO(Scalar(F2, 1), Scalar(F2, 0), 2), {0, 1, 2, 3, 4}).ok());
  std::vector<Scalar> deltas{Scalar(Q, 1), Scalar(Q, -2)};
  ValidationReport r = validate_category(*build_EN(deltas, 2, 1), {0, 1, 2, 3, 4, 5, 6});
  CHECK(r.ok());
  for (const auto& v : r.violations) MESSAGE(v);
}
