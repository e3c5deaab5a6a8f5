// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "hk/diagrams.hpp"
#include "hk/kernels.hpp"
#include "hk/presentations.hpp"
#include "hk/sites.hpp"
#include "module_oracle.hpp"
#include "properties.hpp"

using namespace hk;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_ms;
  std::function<void(Outcome&)> run;
};

Morphism basis(const TableCategory& c, const char* name) {
  auto r = c.find_basis(name);
  if (!r) throw Error(std::string("no basis element ") + name);
  return Morphism::basis(c, r->source, r->target, r->index);
}

void topology_census(Outcome& out) {
  auto dn = dual_numbers(Q);
  NoySkeleton s = dual_number_noy_skeleton(*dn);
  TopologyCensus census = enumerate_topologies(*s.category);
  out.require(census.topologies.size() == 4, "expected 4 topologies, got " + std::to_string(census.topologies.size()));
  // Minimal covering sieve dimensions at (P, L): R0 everything covers, R1 the ι-sieve at P and 0 at L,
  // R2 the ι-sieve at P and everything at L, R3 only maximal sieves.
  const std::vector<std::vector<std::size_t>> mins{{0, 0}, {2, 2}, {3, 1}, {3, 2}};
  std::vector<std::string> passing;
  for (std::size_t i = 0; i < census.topologies.size() && i < mins.size(); ++i) {
    const TopologyTable& t = census.topologies[i];
    std::vector<std::size_t> m;
    for (std::size_t x = 0; x < 2; ++x) m.push_back(census.lattice.sieves[x][t.minimal(census.lattice)[x]].total_dim());
    out.require(m == mins[i], t.label + " has unexpected minimal covering sieves");
    out.require(is_topology(*s.category, census.lattice, t), t.label + " is not a topology");
    if (iota_image_test(s, census.lattice, t)) passing.push_back(t.label);
  }
  out.require(passing == std::vector<std::string>{"R0", "R2"}, "ι-image is not {R0, R2}");
  out.detail << census.topologies.size() << " topologies, ι-image {";
  for (std::size_t i = 0; i < passing.size(); ++i) out.detail << (i ? ", " : "") << passing[i];
  out.detail << "}";
}

void prexact_classification(Outcome& out, const char* name, const char* label, Verdict verdict) {
  auto t0 = std::chrono::steady_clock::now();
  auto dn = dual_numbers(Q);
  NoySkeleton s = dual_number_noy_skeleton(*dn);
  TopologyCensus census = enumerate_topologies(*s.category);
  auto th = dual_number_functor(*dn, name);
  std::string got = homological_topology(*th, s, census).label;
  out.require(got == label, std::string(name) + " gives " + got);
  Window w = full_window(*dn);
  PrexactResult r = prexact_check(*th, basis(*dn, "x"), w);
  out.require(r.verdict == verdict, std::string(name) + " prexact " + verdict_str(r.verdict));
  if (verdict == Verdict::refuted) {
    out.require(window_complete(*dn, w), "witness window is not complete");
    out.require(!r.certificate.empty() && r.uncovered.cols() > 0, "no certificate");
  }
  out.detail << name << " -> " << got << ", " << verdict_str(r.verdict);
  if (r.verdict == Verdict::refuted) out.detail << " (kernel " << r.kernel_dim << ", covered " << r.covered_dim << ")";
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.require(ms < 1000, std::string(name) + " over the 1 s budget");
}

void canonical_sigma_values(Outcome& out) {
  auto dn = dual_numbers(Q);
  KernelValue v = canonical_sigma({0}, basis(*dn, "x"), full_window(*dn));
  out.require(v.value.dim() == 0 && v.certainty == Certainty::exact, "Σ(x) on the dual numbers");
  std::size_t cases = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    auto c = truncated_polynomial(Q, n);
    for (unsigned m = 0; m <= n; ++m, ++cases) {
      Morphism f = m < n ? Morphism::basis(*c, 0, 0, m) : zero_morphism(*c, {0}, {0});
      KernelValue k = canonical_sigma({0}, f, full_window(*c));
      out.require(k.value.dim() == 0 && k.certainty == Certainty::exact,
                  "n = " + std::to_string(n) + ", m = " + std::to_string(m));
    }
  }
  out.detail << "Σ(x) = 0 exact; " << cases << " truncated-polynomial cases all 0 exact";
}

void frobenius(Outcome& out) {
  auto ob = diagrams::build_OB(Scalar(F2, 0L), 8);
  Morphism f = diagrams::frobenius_test_morphism(*ob, 2);
  std::vector<std::size_t> dims;
  for (unsigned len = 0; len <= 8; len += 2) {
    std::vector<ObjectId> objs;
    for (ObjectId y = 0; y < ob->object_count(); ++y)
      if (ob->word(y).size() <= len) objs.push_back(y);
    dims.push_back(monoidal_sigma(f, make_window(*ob, objs, "words of length <= " + std::to_string(len))).value.dim());
  }
  out.require(dims.back() == 1, "dim at length 8 is " + std::to_string(dims.back()));
  out.require(dims[dims.size() - 2] == dims.back(), "not stabilized between lengths 6 and 8");
  out.require(fr_plus_dim(2, 2) == 2, "fr_plus_dim(2, 2) != 2");
  diagrams::VectorFunctor th(*ob, 2);
  std::size_t theta = monoidal_sigma_theta(th, f).dim();
  out.require(theta == 0, "Σθ = " + std::to_string(theta));
  out.detail << "dims at lengths 0,2,4,6,8 = ";
  for (std::size_t i = 0; i < dims.size(); ++i) out.detail << (i ? "," : "") << dims[i];
  out.detail << "; Fr+ dim 2; Σθ = " << theta;
}

void module_equivalence(Outcome& out) {
  std::size_t pairs = 0;
  for (const FieldSpec& f : {Q, F2, FieldSpec::prime(3)}) {
    auto dn = dual_numbers(f);
    auto objs = testing::module_test_objects(*dn);
    for (const auto& a : objs)
      for (const auto& b : objs) {
        ++pairs;
        std::size_t noy = noy_hom(a.morphism, b.morphism).space.dim();
        std::size_t mod = testing::module_hom_dim(a.matrix, b.matrix, f);
        out.require(noy == mod, a.name + " -> " + b.name + " over " + f.name());
      }
  }
  out.detail << pairs << " hom dimensions agree";
}

void property_suite(Outcome& out) {
  testing::Settings st;
  const std::vector<std::pair<const char*, testing::PropertyStats>> runs{
      {"left exactness", testing::left_exactness(st, 11, 120)},
      {"cone long exactness", testing::cone_long_exactness(st, 12, 120)},
      {"Künneth", testing::kunneth(st, 13, 120)},
      {"homotopy invariance", testing::homotopy_invariance(st, 14, 120)},
      {"Koszul signs", testing::koszul_signs(st, 15, 120)}};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& [name, s] = runs[i];
    out.require(s.instances >= 100 && s.failures == 0, std::string(name) + ": " + testing::summary(s));
    out.detail << (i ? ", " : "") << name << " " << s.instances - s.failures << "/" << s.instances;
  }
}

void mu_nu(Outcome& out) {
  auto dn = dual_numbers(Q);
  std::vector<Morphism> fs = window_morphisms(*dn, full_window(*dn));
  fs.push_back(zero_morphism(*dn, {0}, {}));
  fs.push_back(zero_morphism(*dn, {0}, {0}));
  fs.push_back(join_targets({basis(*dn, "x"), basis(*dn, "x")}));
  for (const char* name : {"theta_k2", "theta_k3"}) {
    MuNuReport r = mu_nu_check(*dual_number_functor(*dn, name), fs);
    out.require(r.discrepancies == 0, std::string(name) + ": " + std::to_string(r.discrepancies) + " discrepancies");
    out.detail << (name[7] == '3' ? "; " : "") << name << " " << r.entries.size() << " morphisms, " << r.discrepancies
               << " discrepancies";
  }
}

void diagram_sanity(Outcome& out) {
  std::size_t checks = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    out.require(ok, what);
  };
  for (const FieldSpec& f : {Q, F2})
    for (long d : {0L, 2L, -1L}) {
      auto ob = diagrams::build_OB(Scalar(f, d), 6);
      ObjectId b = ob->require_word(ob->parse_word("b")), w = ob->require_word(ob->parse_word("w"));
      Morphism loop = compose(ev_morphism(*ob, w), co_morphism(*ob, b));
      check(loop == Morphism::identity(*ob, {ob->unit()}).scaled(Scalar(f, d)),
            "OB loop over " + f.name() + " with δ = " + std::to_string(d));
      for (const char* word : {"b", "w", "bw", "wb"}) {
        ObjectId x = ob->require_word(ob->parse_word(word)), xd = ob->dual(x);
        Morphism idx = Morphism::identity(*ob, {x}), idxd = Morphism::identity(*ob, {xd});
        check(compose(tensor(idx, ev_morphism(*ob, x)), tensor(co_morphism(*ob, x), idx)) == idx,
              std::string("snake at ") + word);
        check(compose(tensor(ev_morphism(*ob, x), idxd), tensor(idxd, co_morphism(*ob, x))) == idxd,
              std::string("dual snake at ") + word);
      }
    }
  auto injective = [&](const diagrams::DiagramCategory& c, const Morphism& m, const std::string& what) {
    for (ObjectId w = 0; w < c.object_count(); ++w) {
      if (c.word(w).size() > 4) continue;
      Matrix p = precompose_matrix(m, {w});
      check(rank(p) == p.cols(), what + " at " + c.object_name(w));
    }
  };
  for (const FieldSpec& f : {Q, F2}) {
    auto mo = diagrams::build_MO(Scalar(f, 2L), Scalar(f, 3L), 5);
    injective(*mo, diagrams::mu_morphism(*mo), "MO μ over " + f.name());
    auto seq = diagrams::build_Seq(f, 6, 2);
    injective(*seq, diagrams::iota_morphism(*seq), "Seq ι over " + f.name());
  }
  out.detail << checks << " checks";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dual-number topology census", 5000, topology_census},
      {2, "prexact classification", 0,
       [](Outcome& o) {
         prexact_classification(o, "theta_k2", "R2", Verdict::certified);
         o.detail << "; ";
         prexact_classification(o, "theta_k3", "R3", Verdict::refuted);
       }},
      {3, "canonical kernel of the dual numbers", 1000, canonical_sigma_values},
      {4, "Frobenius kernel in OB(0) over F2", 60000, frobenius},
      {5, "Noy homs match module homs", 0, module_equivalence},
      {6, "homological calculus properties", 0, property_suite},
      {7, "μ/ν agreement", 0, mu_nu},
      {8, "diagram category sanity", 10000, diagram_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_ms > 0) out.require(ms < c.budget_ms, "over the " + std::to_string(static_cast<int>(c.budget_ms / 1000)) + " s budget");
    if (!out.ok) ++failed;
    std::printf("criterion %d %s: %s (%s) [%.0f ms]\n", c.number, c.title.c_str(), out.ok ? "PASS" : "FAIL",
                out.detail.str().c_str(), ms);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
