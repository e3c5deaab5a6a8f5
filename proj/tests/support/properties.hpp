#pragma once

// Seeded random instances for the homological-calculus properties, shared by the unit suite and
// the acceptance binary. Each property runs half its instances in the dual numbers and half in a
// window of OB(2) over Q with the tensor-contraction functor V -> k^2.

#include <functional>
#include <random>
#include <sstream>

#include "hk/diagrams.hpp"
#include "hk/homotopy.hpp"
#include "hk/presentations.hpp"

namespace testing {

struct PropertyStats {
  std::size_t instances = 0, failures = 0;
  std::vector<std::string> messages;
  void record(bool ok, const std::string& what) {
    ++instances;
    if (!ok) {
      ++failures;
      if (messages.size() < 5) messages.push_back(what);
    }
  }
};

/// A category, a functor on it and the generators random objects are drawn from.
struct Setting {
  std::string name;
  const hk::Category* category;
  const hk::Functor* functor;
  std::vector<hk::ObjectId> pool;
};

class Settings {
 public:
  Settings() {
    const hk::FieldSpec q = hk::FieldSpec::rationals();
    dn_ = hk::dual_numbers(q);
    dn_theta_ = hk::dual_number_functor(*dn_, "theta_k3");
    dn_monoidal_ = hk::dual_number_functor(*dn_, "theta_x0");
    ob_ = hk::diagrams::build_OB(hk::Scalar(q, 2L), 4);
    ob_theta_ = std::make_unique<hk::diagrams::VectorFunctor>(*ob_, 2);
    std::vector<hk::ObjectId> short_words;
    for (hk::ObjectId x = 0; x < ob_->object_count(); ++x)
      if (ob_->word(x).size() <= 2) short_words.push_back(x);
    general_ = {{"dual numbers", dn_.get(), dn_theta_.get(), {0}}, {"OB(2)", ob_.get(), ob_theta_.get(), short_words}};
    monoidal_ = {{"dual numbers", dn_.get(), dn_monoidal_.get(), {0}},
                 {"OB(2)", ob_.get(), ob_theta_.get(), short_words}};
  }
  /// Any functor.
  const std::vector<Setting>& general() const { return general_; }
  /// Strictly monoidal functors.
  const std::vector<Setting>& monoidal() const { return monoidal_; }

 private:
  std::unique_ptr<hk::TableCategory> dn_;
  std::unique_ptr<hk::TableFunctor> dn_theta_, dn_monoidal_;
  std::unique_ptr<hk::diagrams::DiagramCategory> ob_;
  std::unique_ptr<hk::diagrams::VectorFunctor> ob_theta_;
  std::vector<Setting> general_, monoidal_;
};

class Sampler {
 public:
  Sampler(const Setting& s, std::uint64_t seed) : s_(s), rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  hk::Scalar coefficient() {
    static const long values[] = {-2, -1, 1, 2, 3};
    return hk::Scalar(s_.category->field(), values[below(5)]);
  }

  hk::AddObject object(std::size_t max_terms = 2) {
    hk::AddObject x;
    std::size_t n = 1 + below(max_terms);
    for (std::size_t i = 0; i < n; ++i) x.push_back(s_.pool[below(s_.pool.size())]);
    return x;
  }

  /// Random combination of the columns of basis, or of the standard basis when basis is empty.
  hk::Matrix combination(const hk::Matrix& basis) {
    const hk::FieldSpec& f = s_.category->field();
    hk::Matrix v(f, basis.cols(), 1);
    for (std::size_t j = 0; j < basis.cols(); ++j)
      if (below(3)) v.set(j, 0, coefficient());
    return basis.cols() ? basis * v : hk::Matrix(f, basis.rows(), 1);
  }

  hk::Morphism morphism(const hk::AddObject& x, const hk::AddObject& y) {
    std::size_t d = hk::hom_space(*s_.category, x, y).dim;
    return hk::morphism_from_column(*s_.category, x, y, combination(hk::Matrix::identity(s_.category->field(), d)), 0);
  }

  /// A complex with 1-3 terms; each differential is drawn from the annihilator of the previous one.
  hk::Complex complex() {
    int lo = static_cast<int>(below(3)) - 1;
    std::size_t terms = 1 + below(3);
    std::vector<hk::AddObject> objs{object()};
    std::vector<hk::Morphism> d;
    for (std::size_t i = 1; i < terms; ++i) {
      hk::AddObject next = object();
      if (d.empty()) {
        d.push_back(morphism(objs.back(), next));
      } else {
        hk::Matrix ann = hk::kernel_basis(hk::precompose_matrix(d.back(), next));
        d.push_back(hk::morphism_from_column(*s_.category, objs.back(), next, combination(ann), 0));
      }
      objs.push_back(next);
    }
    return hk::Complex(*s_.category, lo, objs, d);
  }

  /// A random chain map x -> y (not only up to homotopy).
  hk::ChainMap chain_map(const hk::Complex& x, const hk::Complex& y) {
    hk::KbHom h = hk::kb_hom(x, y);
    hk::Matrix num = h.space.numerator();
    return hk::chain_map_from_column(h, combination(num), 0);
  }

 private:
  const Setting& s_;
  std::mt19937_64 rng_;
};

inline bool exact_at(const hk::Matrix& in, const hk::Matrix& out, std::size_t dim) {
  if (in.cols() && out.rows() && !(out * in).is_zero()) return false;
  return hk::rank(in) + hk::rank(out) == dim;
}

inline std::size_t homology_dim(const hk::Functor& th, const hk::Complex& x, int i) {
  return hk::homology_map(th, hk::identity_map(x), i).cols();
}

inline void min_max(const hk::Complex& x, int& lo, int& hi) {
  lo = std::min(lo, x.lo());
  hi = std::max(hi, x.hi());
}

/// Runs body on n instances split across the settings, each with its own seed.
inline PropertyStats run_property(const std::vector<Setting>& settings, std::uint64_t seed, std::size_t n,
                                  const std::function<void(const Setting&, Sampler&, PropertyStats&)>& body) {
  PropertyStats stats;
  for (std::size_t i = 0; i < n; ++i) {
    const Setting& s = settings[i % settings.size()];
    Sampler rs(s, seed * 1000003u + i);
    try {
      body(s, rs, stats);
    } catch (const std::exception& e) {
      stats.record(false, s.name + " instance " + std::to_string(i) + ": " + e.what());
    }
  }
  return stats;
}

/// (a) 0 -> vec θ(ker α) -> vec θ(f) -> vec θ(g) is exact.
inline PropertyStats left_exactness(const Settings& st, std::uint64_t seed, std::size_t n) {
  return run_property(st.general(), seed, n, [](const Setting& s, Sampler& rs, PropertyStats& stats) {
    hk::Morphism f = rs.morphism(rs.object(), rs.object()), g = rs.morphism(rs.object(), rs.object());
    hk::NoyHom h = hk::noy_hom(f, g);
    hk::Matrix num = h.space.numerator();
    hk::Morphism alpha = hk::morphism_from_column(*s.category, f.source(), g.source(), rs.combination(num), 0);
    hk::NoyMorphism a = hk::make_noy_morphism(f, g, alpha);
    hk::NoyKernel k = hk::noy_kernel(a);
    hk::Matrix inc = hk::vec_theta_map(*s.functor, k.inclusion), out = hk::vec_theta_map(*s.functor, a);
    bool ok = hk::rank(inc) == inc.cols() && exact_at(inc, out, out.cols());
    stats.record(ok, s.name + ": left exactness fails for f = " + f.str() + ", α = " + alpha.str());
  });
}

/// (b) ... -> H^i θX -> H^i θY -> H^i θCone(u) -> H^{i+1} θX -> ... is exact.
inline PropertyStats cone_long_exactness(const Settings& st, std::uint64_t seed, std::size_t n) {
  return run_property(st.general(), seed, n, [](const Setting& s, Sampler& rs, PropertyStats& stats) {
    hk::Complex x = rs.complex(), y = rs.complex();
    hk::ChainMap u = rs.chain_map(x, y);
    hk::ChainMap in = hk::cone_inclusion(u), pr = hk::cone_projection(u);
    std::map<int, hk::Morphism> shifted;
    for (const auto& [i, m] : u.components) shifted.emplace(i - 1, m);
    hk::ChainMap u1 = hk::make_chain_map(x.shift(1), y.shift(1), shifted);
    int lo = 0, hi = 0;
    min_max(x, lo, hi);
    min_max(y, lo, hi);
    bool ok = true;
    const hk::Functor& th = *s.functor;
    for (int i = lo - 2; i <= hi + 1; ++i) {
      ok = ok && exact_at(hk::homology_map(th, u, i), hk::homology_map(th, in, i), hk::homology_map(th, in, i).cols());
      ok = ok && exact_at(hk::homology_map(th, in, i), hk::homology_map(th, pr, i), hk::homology_map(th, pr, i).cols());
      ok = ok && exact_at(hk::homology_map(th, pr, i), hk::homology_map(th, u1, i), hk::homology_map(th, u1, i).cols());
    }
    stats.record(ok, s.name + ": long exact sequence fails for u: " + x.str() + " -> " + y.str());
  });
}

/// (c) dim H^n θ(X ⊗ Y) = Σ_{a+b=n} dim H^a θX · dim H^b θY for strict monoidal θ.
inline PropertyStats kunneth(const Settings& st, std::uint64_t seed, std::size_t n) {
  return run_property(st.monoidal(), seed, n, [](const Setting& s, Sampler& rs, PropertyStats& stats) {
    hk::Complex x = rs.complex(), y = rs.complex();
    hk::Complex t = hk::tensor_complexes(x, y);
    auto hx = hk::theta_delta(*s.functor, x), hy = hk::theta_delta(*s.functor, y), ht = hk::theta_delta(*s.functor, t);
    bool ok = true;
    for (int k = x.lo() + y.lo(); k <= x.hi() + y.hi(); ++k) {
      std::size_t expect = 0;
      for (const auto& [a, sa] : hx)
        if (hy.count(k - a)) expect += sa.dim() * hy.at(k - a).dim();
      std::size_t got = ht.count(k) ? ht.at(k).dim() : 0;
      ok = ok && got == expect;
    }
    stats.record(ok, s.name + ": Künneth fails for " + x.str() + " ⊗ " + y.str());
  });
}

/// (d) Homotopic chain maps induce equal maps on θ_Δ, and adding a contractible summand Cone(id)
/// leaves θ_Δ unchanged.
inline PropertyStats homotopy_invariance(const Settings& st, std::uint64_t seed, std::size_t n) {
  return run_property(st.general(), seed, n, [](const Setting& s, Sampler& rs, PropertyStats& stats) {
    hk::Complex x = rs.complex(), y = rs.complex();
    hk::ChainMap u = rs.chain_map(x, y);
    std::map<int, hk::Morphism> h;
    for (int i = x.lo(); i <= x.hi() + 1; ++i) h.emplace(i, rs.morphism(x.at(i), y.at(i - 1)));
    std::map<int, hk::Morphism> v;
    for (int i = std::min(x.lo(), y.lo()); i <= std::max(x.hi(), y.hi()); ++i) {
      hk::Morphism m = u.at(i);
      if (h.count(i)) m = m + hk::compose(y.d(i - 1), h.at(i));
      if (h.count(i + 1)) m = m + hk::compose(h.at(i + 1), x.d(i));
      v.emplace(i, m);
    }
    hk::ChainMap w = hk::make_chain_map(x, y, v);
    bool ok = hk::is_chain_map(w);
    for (int i = x.lo() - 1; i <= x.hi() + 1 && ok; ++i)
      ok = hk::homology_map(*s.functor, u, i) == hk::homology_map(*s.functor, w, i);
    hk::Complex z = rs.complex();
    hk::Complex sum = hk::direct_sum(x, hk::cone(hk::identity_map(z)));
    int lo = 0, hi = 0;
    min_max(sum, lo, hi);
    min_max(x, lo, hi);
    for (int i = lo - 1; i <= hi + 1 && ok; ++i)
      ok = homology_dim(*s.functor, sum, i) == homology_dim(*s.functor, x, i);
    stats.record(ok, s.name + ": homotopy invariance fails for " + x.str() + " -> " + y.str());
  });
}

/// (e) The differential of X ⊗ Y (and of (X ⊗ Y) ⊗ Z) squares to zero.
inline PropertyStats koszul_signs(const Settings& st, std::uint64_t seed, std::size_t n) {
  return run_property(st.monoidal(), seed, n, [](const Setting& s, Sampler& rs, PropertyStats& stats) {
    hk::Complex x = rs.complex(), y = rs.complex();
    hk::Complex t = hk::tensor_complexes(x, y);
    bool ok = true;
    try {
      t.validate();
      if (s.category->object_count() == 1) hk::tensor_complexes(t, rs.complex()).validate();
    } catch (const hk::NotAComplex&) {
      ok = false;
    }
    stats.record(ok, s.name + ": d^2 != 0 on " + x.str() + " ⊗ " + y.str());
  });
}

inline std::string summary(const PropertyStats& s) {
  std::ostringstream os;
  os << s.instances << " instances, " << s.failures << " failures";
  for (const auto& m : s.messages) os << "; " << m;
  return os.str();
}

}  // namespace testing
