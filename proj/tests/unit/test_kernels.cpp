#include "doctest.h"
#include "hk/diagrams.hpp"
#include "hk/kernels.hpp"
#include "hk/presentations.hpp"

using namespace hk;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// x^m in k[x]/x^n; zero when m >= n.
Morphism xpow(const TableCategory& c, unsigned n, unsigned m) {
  return m < n ? Morphism::basis(c, 0, 0, m) : zero_morphism(c, {0}, {0});
}

// Nilpotent shift e_i -> e_{i+1} on k^k.
Matrix shift(std::size_t k) {
  Matrix m(Q, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m.set(i + 1, i, Scalar::one(Q));
  return m;
}

}  // namespace

TEST_CASE("annihilator_generators examples") {
  auto c = dual_numbers(Q);
  Window w = full_window(*c);
  CHECK(annihilator_generators(Morphism::basis(*c, 0, 0, 0), w).empty());
  auto gx = annihilator_generators(Morphism::basis(*c, 0, 0, 1), w);
  REQUIRE(gx.size() == 1);
  CHECK(in_span(gx[0].coords(), Morphism::basis(*c, 0, 0, 1).coords()));
  CHECK(in_span(Morphism::basis(*c, 0, 0, 1).coords(), gx[0].coords()));
  auto g0 = annihilator_generators(zero_morphism(*c, {0}, {}), w);
  CHECK(g0.size() == 2);
}

TEST_CASE("canonical_sigma on truncated polynomial rings matches the ring oracle") {
  // tests/oracles/ring_kernels.py, canonical rows: all zero for n <= 5 and 0 <= m <= n.
  for (unsigned n = 1; n <= 5; ++n) {
    auto c = truncated_polynomial(Q, n);
    for (unsigned m = 0; m <= n; ++m) {
      KernelValue v = canonical_sigma({0}, xpow(*c, n, m), full_window(*c));
      CHECK(v.value.dim() == 0);
      CHECK(v.certainty == Certainty::exact);
    }
  }
  auto c = dual_numbers(Q);
  KernelValue partial = canonical_sigma({0}, Morphism::basis(*c, 0, 0, 1), Window{{}, false, "empty"});
  CHECK(partial.certainty == Certainty::window_bound);
  CHECK(partial.value.dim() == 1);  // coker of -∘x before any annihilator is used
}

TEST_CASE("sigma_theta on truncated polynomial rings matches the ring oracle") {
  // tests/oracles/ring_kernels.py, theta rows: S = k[y]/y^k with x -> y.
  const std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> expected{
      {{2, 1}, {0, 0, 1}},          {{2, 2}, {0, 0, 0}},          {{3, 1}, {0, 0, 1, 2}},
      {{3, 2}, {0, 0, 0, 1}},       {{3, 3}, {0, 0, 0, 0}},       {{4, 1}, {0, 0, 1, 2, 3}},
      {{4, 2}, {0, 0, 0, 1, 2}},    {{4, 3}, {0, 0, 0, 0, 1}},    {{4, 4}, {0, 0, 0, 0, 0}},
      {{5, 1}, {0, 0, 1, 2, 3, 4}}, {{5, 2}, {0, 0, 0, 1, 2, 3}}, {{5, 3}, {0, 0, 0, 0, 1, 2}},
      {{5, 4}, {0, 0, 0, 0, 0, 1}}, {{5, 5}, {0, 0, 0, 0, 0, 0}}};
  for (const auto& [nk, dims] : expected) {
    auto [n, k] = nk;
    auto c = truncated_polynomial(Q, n);
    auto th = polynomial_functor(*c, "shift", shift(k));
    REQUIRE(validate_functor(*th).ok());
    for (unsigned m = 0; m <= n; ++m) CHECK(sigma_theta(*th, {0}, xpow(*c, n, m)).dim() == dims[m]);
  }
}

TEST_CASE("sigma_theta examples") {
  auto c = dual_numbers(Q);
  Morphism x = Morphism::basis(*c, 0, 0, 1);
  // θ = 0: the kernel condition is vacuous.
  CHECK(sigma_theta(*dual_number_functor(*c, "theta_zero"), {0}, x).dim() == 1);
  // R ⊂ M2(k) with θ = M2(k) ⊗_R -: the displayed quotient is zero.
  auto m2 = dual_number_functor(*c, "theta_m2");
  CHECK(sigma_theta(*m2, {0}, x).dim() == 0);
  // The identity presentation is fully faithful: Σθ = Σ.
  auto reg = regular_functor(*c);
  for (std::size_t i = 0; i < 2; ++i) {
    Morphism f = Morphism::basis(*c, 0, 0, i);
    CHECK(subquotient_equal(sigma_theta(*reg, {0}, f), canonical_sigma({0}, f, full_window(*c)).value));
  }
}

TEST_CASE("homological kernel at R is included exactly for faithful functors") {
  auto c = dual_numbers(Q);
  Window w = full_window(*c);
  for (const auto& name : dual_number_functor_names()) {
    auto th = dual_number_functor(*c, name);
    bool faithful = is_faithful_on_window(*th, w.objects);
    bool included = true;
    std::vector<Morphism> fs = window_morphisms(*c, w);
    fs.push_back(zero_morphism(*c, {0}, {}));
    fs.push_back(zero_morphism(*c, {0}, {0}));
    fs.push_back(join_targets({Morphism::basis(*c, 0, 0, 1), Morphism::basis(*c, 0, 0, 1)}));
    for (const auto& f : fs)
      included = included && subquotient_included(sigma_theta(*th, {0}, f), canonical_sigma({0}, f, w).value);
    CHECK_MESSAGE(included == faithful, name);
  }
}

TEST_CASE("prexact_check examples") {
  auto c = dual_numbers(Q);
  Window w = full_window(*c);
  Morphism x = Morphism::basis(*c, 0, 0, 1), id = Morphism::basis(*c, 0, 0, 0);
  PrexactResult k2 = prexact_check(*dual_number_functor(*c, "theta_k2"), x, w);
  CHECK(k2.verdict == Verdict::certified);
  REQUIRE(k2.witness);
  CHECK(k2.witness_kind == "single");
  CHECK(in_span(k2.witness->coords(), x.coords()));
  PrexactResult k3 = prexact_check(*dual_number_functor(*c, "theta_k3"), x, w);
  CHECK(k3.verdict == Verdict::refuted);
  CHECK(k3.kernel_dim == 2);
  CHECK(k3.covered_dim == 1);
  CHECK(k3.uncovered.cols() == 1);
  CHECK_FALSE(k3.certificate.empty());
  CHECK(prexact_check(*dual_number_functor(*c, "theta_k3"), id, w).verdict == Verdict::certified);
  // Without a complete window the same failure is inconclusive.
  Window none{{}, false, "empty"};
  CHECK(prexact_check(*dual_number_functor(*c, "theta_k3"), x, none).verdict == Verdict::inconclusive);
  PrexactVerdict agg = prexact_check(*dual_number_functor(*c, "theta_k2"), window_morphisms(*c, w), w);
  CHECK(agg.aggregate() == Verdict::certified);
}

TEST_CASE("flat_check examples") {
  auto c = dual_numbers(Q);
  Window w = full_window(*c);
  auto fs = window_morphisms(*c, w);
  CHECK(flat_check(*regular_functor(*c), fs, w).flat);
  CHECK(flat_check(*dual_number_functor(*c, "theta_k2"), fs, w).flat);
  FlatVerdict k3 = flat_check(*dual_number_functor(*c, "theta_k3"), fs, w);
  CHECK_FALSE(k3.flat);

  Complex r0 = Complex::concentrated(*c, {0}, 0), x = Complex::two_term(Morphism::basis(*c, 0, 0, 1));
  std::vector<ChainMap> maps{make_chain_map(r0, r0, {{0, Morphism::basis(*c, 0, 0, 1)}}), identity_map(x),
                             make_chain_map(x, r0.shift(-1), {{1, Morphism::basis(*c, 0, 0, 1)}})};
  std::vector<Complex> tests{r0, r0.shift(1), r0.shift(-1), x, x.shift(1), x.shift(-1)};
  CHECK(flat_check_kb(kb_identity(), maps, tests).flat);
  CHECK(flat_check_kb(kb_plus_inclusion(), maps, tests).flat);
  CHECK_THROWS(flat_check_kb(kb_plus_inclusion(), {identity_map(x.shift(1))}, tests));
}

TEST_CASE("mu_nu_check agreement") {
  auto c = dual_numbers(Q);
  Window w = full_window(*c);
  std::vector<Morphism> fs = window_morphisms(*c, w);
  fs.push_back(zero_morphism(*c, {0}, {}));
  fs.push_back(join_targets({Morphism::basis(*c, 0, 0, 1), Morphism::basis(*c, 0, 0, 1)}));
  for (const char* name : {"theta_k2", "theta_k3", "theta_x0"}) {
    MuNuReport r = mu_nu_check(*dual_number_functor(*c, name), fs);
    CHECK_MESSAGE(r.discrepancies == 0, name);
    CHECK(r.entries.front().noy_dim == 0);  // f = id
  }
}

TEST_CASE("fr_plus_dim values") {
  CHECK(fr_plus_dim(2, 0) == 0);
  CHECK(fr_plus_dim(2, 1) == 1);
  CHECK(fr_plus_dim(2, 2) == 2);
  CHECK(fr_plus_dim(2, 3) == 3);
  CHECK(fr_plus_dim(3, 1) == 1);
  CHECK(fr_plus_dim(3, 2) == 2);
}

TEST_CASE("Frobenius test morphism in OB over F2") {
  FieldSpec f2 = FieldSpec::prime(2);
  auto ob = diagrams::build_OB(Scalar(f2, 0L), 4);
  Morphism f = diagrams::frobenius_test_morphism(*ob, 2);
  std::vector<ObjectId> small;
  for (ObjectId y = 0; y < ob->object_count(); ++y)
    if (ob->word(y).size() <= 4) small.push_back(y);
  KernelValue v = monoidal_sigma(f, make_window(*ob, small, "words of length <= 4"));
  CHECK(v.value.dim() == 1);
  CHECK(v.certainty == Certainty::window_bound);
  diagrams::VectorFunctor th(*ob, 2);
  CHECK(monoidal_sigma_theta(th, f).dim() == 0);
}
