#include "hk/session.hpp"

#include <chrono>
#include <filesystem>
#include <random>
#include <sstream>

#include "hk/diagrams.hpp"
#include "hk/expr.hpp"
#include "hk/kernels.hpp"
#include "hk/presentations.hpp"

namespace hk::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

unsigned parse_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    unsigned long x = std::stoul(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<unsigned>(x);
  } catch (const std::exception&) {
    throw Error("--" + key + " expects a non-negative integer, got '" + v + "'");
  }
}

struct Context {
  const SessionConfig& cfg;
  FieldSpec field;
  std::unique_ptr<Category> owned;
  std::optional<CatFile> file;
  const Category* cat = nullptr;
  std::optional<NoySkeleton> skeleton;
  std::vector<std::unique_ptr<Functor>> owned_functors;

  explicit Context(const SessionConfig& c) : cfg(c) {}

  const diagrams::DiagramCategory* diagram() const { return dynamic_cast<const diagrams::DiagramCategory*>(cat); }
  const TableCategory* table() const { return dynamic_cast<const TableCategory*>(cat); }
  bool is_dual_numbers() const {
    auto t = table();
    return t && t->object_count() == 1 && t->hom_dim(0, 0) == 2 && t->find_basis("x");
  }
};

unsigned diagram_len(const SessionConfig& c) { return c.window_len ? c.window_len : 4; }

std::unique_ptr<Category> builtin(const SessionConfig& cfg, const FieldSpec& f, const std::string& name) {
  if (name == "dualnumbers" || name == "noy-dualnumbers") return dual_numbers(f);
  auto colon = name.find(':');
  std::string head = name.substr(0, colon), arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "truncpoly") {
    if (arg.empty()) throw Error("truncpoly:N needs N");
    return truncated_polynomial(f, parse_uint("category", arg));
  }
  if (head == "ob") return diagrams::build_OB(Scalar::parse(f, arg.empty() ? "0" : arg), diagram_len(cfg));
  if (head == "mo") {
    auto parts = split(arg, ',');
    if (parts.size() != 2) throw Error("mo:DELTA,T needs two parameters");
    return diagrams::build_MO(Scalar::parse(f, parts[0]), Scalar::parse(f, parts[1]), diagram_len(cfg));
  }
  if (head == "en") {
    std::vector<Scalar> ds;
    for (const auto& d : split(arg, ',')) ds.push_back(Scalar::parse(f, d));
    return diagrams::build_EN(ds, diagram_len(cfg), cfg.window_dots ? cfg.window_dots : 2);
  }
  if (head == "seq") return diagrams::build_Seq(f, diagram_len(cfg), arg.empty() ? 2 : static_cast<int>(parse_uint("category", arg)));
  return nullptr;
}

void load_category(Context& ctx) {
  const SessionConfig& cfg = ctx.cfg;
  std::optional<FieldSpec> override;
  if (!cfg.field.empty()) override = FieldSpec::parse(cfg.field);
  ctx.field = override.value_or(FieldSpec::rationals());
  ctx.owned = builtin(cfg, ctx.field, cfg.category);
  if (ctx.owned) {
    ctx.cat = ctx.owned.get();
  } else {
    if (!std::filesystem::exists(cfg.category))
      throw Error("unknown category '" + cfg.category + "' (not a builtin and no such file)");
    ctx.file.emplace(parse_category_file(cfg.category, override));
    ctx.cat = ctx.file->category.get();
    ctx.field = ctx.cat->field();
  }
  if (cfg.category == "noy-dualnumbers") ctx.skeleton.emplace(dual_number_noy_skeleton(*ctx.table()));
  if (!cfg.skeleton.empty()) {
    std::vector<std::pair<std::string, Morphism>> objs;
    for (const auto& s : cfg.skeleton) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw Error("--skeleton expects NAME=morphism, got '" + s + "'");
      objs.emplace_back(s.substr(0, eq), parse_morphism(*ctx.cat, s.substr(eq + 1)));
    }
    ctx.skeleton.emplace(build_noy_skeleton(*ctx.cat, objs));
  }
}

Matrix shift_matrix(const FieldSpec& f, std::size_t k) {
  Matrix m(f, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m.set(i + 1, i, Scalar::one(f));
  return m;
}

const Functor& functor(Context& ctx, const std::string& name) {
  if (ctx.file)
    if (auto f = ctx.file->find_functor(name)) return *f;
  auto keep = [&](std::unique_ptr<Functor> f) -> const Functor& {
    ctx.owned_functors.push_back(std::move(f));
    return *ctx.owned_functors.back();
  };
  const auto* t = ctx.table();
  auto names = dual_number_functor_names();
  if (ctx.is_dual_numbers() && std::find(names.begin(), names.end(), name) != names.end())
    return keep(dual_number_functor(*t, name));
  auto colon = name.find(':');
  std::string head = name.substr(0, colon), arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (name == "regular" && t && t->object_count() == 1) return keep(regular_functor(*t));
  if (head == "shift" && t && t->object_count() == 1 && t->find_basis("x")) {
    std::size_t k = parse_uint("functor", arg);
    if (k > t->hom_dim(0, 0) && ctx.cfg.command != "validate") throw Error(name + " is not a functor: x^n acts as a nonzero matrix");
    return keep(polynomial_functor(*t, name, shift_matrix(ctx.field, k)));
  }
  if (head == "vector" && ctx.diagram() && ctx.diagram()->family() == diagrams::Family::OB) {
    std::size_t n = parse_uint("functor", arg);
    if (Scalar(ctx.field, static_cast<long>(n)) != ctx.diagram()->params().delta && ctx.cfg.command != "validate")
      throw Error(name + " is not a functor: loops evaluate to " + ctx.diagram()->params().delta.str() +
                  " but to " + std::to_string(n) + " under V -> k^" + std::to_string(n));
    return keep(std::make_unique<diagrams::VectorFunctor>(*ctx.diagram(), n));
  }
  throw Error("unknown functor '" + name + "' for " + ctx.cat->name());
}

const Functor& the_functor(Context& ctx) {
  if (ctx.cfg.functors.size() != 1) throw Error(ctx.cfg.command + " needs exactly one --functor");
  return functor(ctx, ctx.cfg.functors[0]);
}

Window window(const Context& ctx) {
  if (auto d = ctx.diagram()) {
    unsigned len = ctx.cfg.window_len ? ctx.cfg.window_len : d->params().max_len;
    if (len > d->params().max_len) throw WindowError("window length exceeds the category's length bound");
    std::vector<ObjectId> objs;
    for (ObjectId x = 0; x < d->object_count(); ++x)
      if (d->word(x).size() <= len) objs.push_back(x);
    Window w = make_window(*d, objs, "words of length <= " + std::to_string(len));
    w.asserted_complete = ctx.cfg.assert_complete;
    return w;
  }
  return full_window(*ctx.cat);
}

std::vector<Morphism> random_morphisms(const Context& ctx, const Window& w) {
  std::vector<Morphism> out;
  std::vector<std::pair<ObjectId, ObjectId>> pairs;
  for (ObjectId s : w.objects)
    for (ObjectId t : w.objects)
      if (ctx.cat->hom_dim(s, t)) pairs.emplace_back(s, t);
  if (pairs.empty()) return out;
  std::mt19937_64 rng(ctx.cfg.seed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  while (out.size() < ctx.cfg.samples) {
    auto [s, t] = pairs[rng() % pairs.size()];
    Morphism m(*ctx.cat, {s}, {t});
    for (std::size_t i = 0; i < ctx.cat->hom_dim(s, t); ++i)
      m.add_block(0, 0, SparseVec{{static_cast<std::uint32_t>(i), Scalar::one(ctx.field)}}, Scalar(ctx.field, coeff(rng)));
    if (!m.is_zero()) out.push_back(m);
  }
  return out;
}

/// The --morphism list, or every window basis morphism when none is given, plus random samples.
std::vector<Morphism> morphisms(const Context& ctx, const Window& w) {
  std::vector<Morphism> fs;
  for (const auto& m : ctx.cfg.morphisms) fs.push_back(parse_morphism(*ctx.cat, m));
  if (fs.empty()) fs = window_morphisms(*ctx.cat, w);
  auto extra = random_morphisms(ctx, w);
  fs.insert(fs.end(), extra.begin(), extra.end());
  return fs;
}

AddObject object_A(const Context& ctx) {
  if (!ctx.cfg.object.empty()) return parse_object(*ctx.cat, ctx.cfg.object);
  return {ctx.cat->is_monoidal() ? ctx.cat->unit() : 0};
}

ordered_json window_json(const Context& ctx, const Window& w) {
  return {{"description", w.description},
          {"objects", w.objects.size()},
          {"complete", window_complete(*ctx.cat, w) || w.asserted_complete},
          {"note", completeness_note(*ctx.cat, w)}};
}

std::string sub_str(const Category& c, const AddObject& x, const AddObject& y, const Matrix& m, std::size_t j) {
  return morphism_from_column(c, x, y, m, j).str();
}

ordered_json sample_json(const Context& ctx) {
  if (!ctx.cfg.samples) return nullptr;
  return {{"seed", ctx.cfg.seed}, {"count", ctx.cfg.samples}};
}

// ---------------------------------------------------------------------------------------------

void cmd_hom(Context& ctx, ordered_json& out) {
  AddObject x = parse_object(*ctx.cat, ctx.cfg.source), y = parse_object(*ctx.cat, ctx.cfg.target);
  HomSpace h = hom_space(*ctx.cat, x, y);
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < h.dim; ++i) {
    Matrix e(ctx.field, h.dim, 1);
    e.set(i, 0, Scalar::one(ctx.field));
    basis.push_back(sub_str(*ctx.cat, x, y, e, 0));
  }
  out["source"] = object_str(*ctx.cat, x);
  out["target"] = object_str(*ctx.cat, y);
  out["dim"] = h.dim;
  out["basis"] = basis;
}

void cmd_compose(Context& ctx, ordered_json& out) {
  if (ctx.cfg.morphisms.size() < 2) throw Error("compose needs at least two --morphism (outermost first)");
  std::vector<Morphism> ms;
  for (const auto& m : ctx.cfg.morphisms) ms.push_back(parse_morphism(*ctx.cat, m));
  Morphism acc = ms.back();
  for (std::size_t i = ms.size() - 1; i-- > 0;) acc = compose(ms[i], acc);
  ordered_json fs = ordered_json::array();
  for (const auto& m : ms) fs.push_back(m.str());
  out["factors"] = fs;
  out["source"] = object_str(*ctx.cat, acc.source());
  out["target"] = object_str(*ctx.cat, acc.target());
  out["composite"] = acc.str();
  out["zero"] = acc.is_zero();
}

void cmd_noy_hom(Context& ctx, ordered_json& out) {
  Morphism f = parse_morphism(*ctx.cat, ctx.cfg.source), g = parse_morphism(*ctx.cat, ctx.cfg.target);
  NoyHom h = noy_hom(f, g);
  out["source"] = f.str() + " : " + object_str(*ctx.cat, f.source()) + " -> " + object_str(*ctx.cat, f.target());
  out["target"] = g.str() + " : " + object_str(*ctx.cat, g.source()) + " -> " + object_str(*ctx.cat, g.target());
  out["dim"] = h.space.dim();
  ordered_json reps = ordered_json::array();
  for (std::size_t j = 0; j < h.space.dim(); ++j) reps.push_back(sub_str(*ctx.cat, h.source0, h.target0, h.space.reps, j));
  out["representatives"] = reps;
}

void cmd_kb_hom(Context& ctx, ordered_json& out) {
  Complex x = parse_complex(*ctx.cat, ctx.cfg.source), y = parse_complex(*ctx.cat, ctx.cfg.target);
  KbHom h = kb_hom(x, y);
  out["source"] = x.str();
  out["target"] = y.str();
  out["dim"] = h.space.dim();
}

void cmd_sigma(Context& ctx, ordered_json& out) {
  Window w = window(ctx);
  AddObject a = object_A(ctx);
  out["window"] = window_json(ctx, w);
  out["object"] = object_str(*ctx.cat, a);
  if (auto s = sample_json(ctx); !s.is_null()) out["samples"] = s;
  ordered_json rows = ordered_json::array();
  for (const Morphism& f : morphisms(ctx, w)) {
    KernelValue v = canonical_sigma(a, f, w);
    rows.push_back({{"morphism", morphism_label(f)}, {"dim", v.value.dim()}, {"certainty", certainty_str(v.certainty)}});
  }
  out["results"] = rows;
}

void cmd_sigma_theta(Context& ctx, ordered_json& out) {
  const Functor& th = the_functor(ctx);
  Window w = window(ctx);
  AddObject a = object_A(ctx);
  out["functor"] = th.name();
  out["object"] = object_str(*ctx.cat, a);
  if (auto s = sample_json(ctx); !s.is_null()) out["samples"] = s;
  ordered_json rows = ordered_json::array();
  for (const Morphism& f : morphisms(ctx, w))
    rows.push_back({{"morphism", morphism_label(f)}, {"dim", sigma_theta(th, a, f).dim()}});
  out["results"] = rows;
}

int cmd_prexact(Context& ctx, ordered_json& out) {
  const Functor& th = the_functor(ctx);
  Window w = window(ctx);
  out["functor"] = th.name();
  out["window"] = window_json(ctx, w);
  if (auto s = sample_json(ctx); !s.is_null()) out["samples"] = s;
  PrexactVerdict v = prexact_check(th, morphisms(ctx, w), w);
  ordered_json rows = ordered_json::array();
  for (const auto& r : v.results) {
    ordered_json row{{"morphism", morphism_label(r.f)},
                     {"verdict", verdict_str(r.verdict)},
                     {"kernel_dim", r.kernel_dim},
                     {"covered_dim", r.covered_dim}};
    if (r.witness) {
      row["witness_kind"] = r.witness_kind;
      row["witness"] = morphism_label(*r.witness);
    }
    if (r.uncovered.cols()) {
      ordered_json v = ordered_json::array();
      for (const auto& e : r.uncovered.column_entries(0)) v.push_back(e.str());
      row["uncovered"] = v;
    }
    if (!r.certificate.empty()) row["certificate"] = r.certificate;
    rows.push_back(row);
  }
  out["results"] = rows;
  out["verdict"] = verdict_str(v.aggregate());
  return v.aggregate() == Verdict::inconclusive ? 2 : 0;
}

int cmd_flat(Context& ctx, ordered_json& out) {
  const Functor& th = the_functor(ctx);
  Window w = window(ctx);
  out["functor"] = th.name();
  out["window"] = window_json(ctx, w);
  if (auto s = sample_json(ctx); !s.is_null()) out["samples"] = s;
  FlatVerdict v = flat_check(th, morphisms(ctx, w), w);
  ordered_json rows = ordered_json::array();
  for (const auto& r : v.results) rows.push_back({{"morphism", r.morphism}, {"preserved", r.preserved}, {"note", r.note}});
  out["results"] = rows;
  // A preserved weak kernel stays preserved on larger windows; a failure is conclusive only on a
  // complete window.
  Verdict verdict = v.flat ? Verdict::certified : v.complete ? Verdict::refuted : Verdict::inconclusive;
  out["flat"] = v.flat;
  out["verdict"] = verdict_str(verdict);
  return verdict == Verdict::inconclusive ? 2 : 0;
}

ordered_json covering_json(const Category& c, const SieveLattice& l, const TopologyTable& t) {
  ordered_json cov = ordered_json::object();
  for (ObjectId x = 0; x < t.covering.size(); ++x) {
    ordered_json list = ordered_json::array();
    for (std::size_t i : t.covering[x]) list.push_back(describe_sieve(c, l.sieves[x][i]));
    cov[c.object_name(x)] = list;
  }
  return cov;
}

const Category& site_category(const Context& ctx) {
  if (ctx.skeleton) return *ctx.skeleton->category;
  if (!ctx.table()) throw Error("topologies need a finite table presentation or a --skeleton");
  return *ctx.cat;
}

void skeleton_json(const Context& ctx, ordered_json& out) {
  if (!ctx.skeleton) return;
  ordered_json objs = ordered_json::object();
  const auto& s = *ctx.skeleton;
  for (ObjectId x = 0; x < s.objects.size(); ++x) {
    const Morphism& f = s.objects[x];
    objs[s.category->object_name(x)] = morphism_label(f) + " : " + object_str(f.category(), f.source()) + " -> " +
                                       object_str(f.category(), f.target());
  }
  out["skeleton"] = objs;
  out["assumption"] =
      "the listed Noy objects are pairwise non-isomorphic indecomposables and exhaust the sieves that matter";
}

void cmd_topologies(Context& ctx, ordered_json& out) {
  const Category& c = site_category(ctx);
  skeleton_json(ctx, out);
  TopologyCensus census = enumerate_topologies(c);
  ordered_json sieves = ordered_json::object();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    ordered_json list = ordered_json::array();
    for (const auto& s : census.lattice.sieves[x]) list.push_back(describe_sieve(c, s));
    sieves[c.object_name(x)] = list;
  }
  out["sieves"] = sieves;
  out["candidates"] = census.candidates;
  out["count"] = census.topologies.size();
  ordered_json tops = ordered_json::array();
  ordered_json iota = ordered_json::array();
  for (const auto& t : census.topologies) {
    ordered_json row{{"label", t.label}};
    ordered_json mins = ordered_json::object();
    auto m = t.minimal(census.lattice);
    for (ObjectId x = 0; x < m.size(); ++x) mins[c.object_name(x)] = describe_sieve(c, census.lattice.sieves[x][m[x]]);
    row["minimal"] = mins;
    row["covering"] = covering_json(c, census.lattice, t);
    if (ctx.skeleton) {
      bool in = iota_image_test(*ctx.skeleton, census.lattice, t);
      row["iota_image"] = in;
      if (in) iota.push_back(t.label);
    }
    tops.push_back(row);
  }
  out["topologies"] = tops;
  if (ctx.skeleton) out["iota_image"] = iota;
}

void cmd_topology_of(Context& ctx, ordered_json& out) {
  const Functor& th = the_functor(ctx);
  const Category& c = site_category(ctx);
  skeleton_json(ctx, out);
  out["functor"] = th.name();
  TopologyCensus census = enumerate_topologies(c);
  TopologyTable t;
  std::optional<std::size_t> idx;
  if (ctx.skeleton) {
    HomologicalTopology h = homological_topology(th, *ctx.skeleton, census);
    t = h.table;
    idx = h.index;
    out["kind"] = "homological topology of vec θ";
  } else {
    t = topology_of_functor(th, census.lattice);
    idx = match_topology(census, t);
    out["kind"] = "topology of θ";
  }
  out["label"] = idx ? census.topologies[*idx].label : "not a topology";
  out["covering"] = covering_json(c, census.lattice, t);
  if (ctx.skeleton && idx) out["iota_image"] = iota_image_test(*ctx.skeleton, census.lattice, t);
  out["monoidal_functor"] = th.is_monoidal();
}

void cmd_hsigma(Context& ctx, ordered_json& out) {
  if (!ctx.cat->is_monoidal()) throw MissingData("hsigma needs a monoidal category");
  Window w = window(ctx);
  out["window"] = window_json(ctx, w);
  ordered_json rows = ordered_json::array();
  std::vector<const Functor*> ths;
  for (const auto& n : ctx.cfg.functors) ths.push_back(&functor(ctx, n));
  for (const auto& text : ctx.cfg.morphisms) {
    Morphism f = parse_morphism(*ctx.cat, text);
    KernelValue v = monoidal_sigma(f, w);
    ordered_json row{{"morphism", text},
                     {"source", object_str(*ctx.cat, f.source())},
                     {"target", object_str(*ctx.cat, f.target())},
                     {"dim", v.value.dim()},
                     {"certainty", certainty_str(v.certainty)}};
    if (!v.note.empty()) row["note"] = v.note;
    ordered_json per = ordered_json::object();
    for (const Functor* th : ths) per[th->name()] = monoidal_sigma_theta(*th, f).dim();
    if (!ths.empty()) row["functor_dims"] = per;
    rows.push_back(row);
  }
  if (rows.empty()) throw Error("hsigma needs --morphism");
  out["results"] = rows;
}

void cmd_mu_nu(Context& ctx, ordered_json& out) {
  Window w = window(ctx);
  out["window"] = window_json(ctx, w);
  if (auto s = sample_json(ctx); !s.is_null()) out["samples"] = s;
  auto fs = morphisms(ctx, w);
  if (ctx.cfg.functors.empty()) throw Error("mu-nu needs --functor");
  ordered_json per = ordered_json::array();
  std::size_t total = 0;
  for (const auto& n : ctx.cfg.functors) {
    const Functor& th = functor(ctx, n);
    MuNuReport r = mu_nu_check(th, fs);
    ordered_json rows = ordered_json::array();
    for (const auto& e : r.entries)
      rows.push_back({{"morphism", e.morphism},
                      {"noy", e.noy_dim},
                      {"sigma", e.sigma_dim},
                      {"kb", e.kb_dim},
                      {"ambient", e.ambient_dim},
                      {"agree", e.agree}});
    per.push_back({{"functor", th.name()}, {"discrepancies", r.discrepancies}, {"results", rows}});
    total += r.discrepancies;
  }
  out["functors"] = per;
  out["discrepancies"] = total;
}

void cmd_fr_plus(Context& ctx, ordered_json& out) {
  out["p"] = ctx.cfg.p;
  out["n"] = ctx.cfg.n;
  out["dim"] = fr_plus_dim(ctx.cfg.p, ctx.cfg.n);
}

void cmd_validate(Context& ctx, ordered_json& out) {
  Window w = window(ctx);
  ValidationReport r = validate_category(*ctx.cat, w.objects);
  out["window"] = window_json(ctx, w);
  out["checks"] = r.checks;
  out["ok"] = r.ok();
  out["violations"] = r.violations;
  ordered_json fs = ordered_json::object();
  for (const auto& n : ctx.cfg.functors) {
    ValidationReport fr = validate_functor(functor(ctx, n), w.objects);
    fs[n] = {{"ok", fr.ok()}, {"violations", fr.violations}};
  }
  if (!ctx.cfg.functors.empty()) out["functors"] = fs;
}

}  // namespace

void set_config(SessionConfig& c, const std::string& key, const std::string& v) {
  if (key == "command") c.command = v;
  else if (key == "field") c.field = v;
  else if (key == "category") c.category = v;
  else if (key == "functor") c.functors.push_back(v);
  else if (key == "object") c.object = v;
  else if (key == "source") c.source = v;
  else if (key == "target") c.target = v;
  else if (key == "morphism") c.morphisms.push_back(v);
  else if (key == "skeleton") c.skeleton.push_back(v);
  else if (key == "window-len") c.window_len = parse_uint(key, v);
  else if (key == "window-dots") c.window_dots = parse_uint(key, v);
  else if (key == "seed") c.seed = parse_uint(key, v);
  else if (key == "samples") c.samples = parse_uint(key, v);
  else if (key == "p") c.p = parse_uint(key, v);
  else if (key == "n") c.n = parse_uint(key, v);
  else if (key == "json") c.json = v == "1" || v == "true";
  else if (key == "verbose") c.verbose = v == "1" || v == "true";
  else if (key == "assert-complete") c.assert_complete = v == "1" || v == "true";
  else throw Error("unknown configuration key '" + key + "'");
}

std::vector<std::string> command_names() {
  return {"hom",  "compose", "noy-hom", "kb-hom", "sigma", "sigma-theta", "prexact", "flat",
          "topologies", "topology-of", "hsigma", "mu-nu", "fr-plus", "validate", "export"};
}

std::vector<std::string> builtin_category_names() {
  return {"dualnumbers", "noy-dualnumbers", "truncpoly:N", "ob:DELTA", "mo:DELTA,T", "en:D0,D1,...", "seq:BOUND"};
}

Report run_command(const SessionConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto names = command_names();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end())
    throw Error("unknown command '" + cfg.command + "'");
  Report rep;
  ordered_json& out = rep.body;
  out["command"] = cfg.command;
  if (cfg.command == "fr-plus") {
    Context ctx(cfg);
    cmd_fr_plus(ctx, out);
  } else {
    Context ctx(cfg);
    load_category(ctx);
    out["category"] = ctx.cat->name();
    out["field"] = ctx.field.name();
    const std::string& c = cfg.command;
    if (c == "hom") cmd_hom(ctx, out);
    else if (c == "compose") cmd_compose(ctx, out);
    else if (c == "noy-hom") cmd_noy_hom(ctx, out);
    else if (c == "kb-hom") cmd_kb_hom(ctx, out);
    else if (c == "sigma") cmd_sigma(ctx, out);
    else if (c == "sigma-theta") cmd_sigma_theta(ctx, out);
    else if (c == "prexact") rep.exit_code = cmd_prexact(ctx, out);
    else if (c == "flat") rep.exit_code = cmd_flat(ctx, out);
    else if (c == "topologies") cmd_topologies(ctx, out);
    else if (c == "topology-of") cmd_topology_of(ctx, out);
    else if (c == "hsigma") cmd_hsigma(ctx, out);
    else if (c == "mu-nu") cmd_mu_nu(ctx, out);
    else if (c == "validate") cmd_validate(ctx, out);
    else if (c == "export") {
      auto d = ctx.diagram();
      if (!d) throw Error("export needs a diagram category");
      out["text"] = diagrams::export_presentation(*d, ctx.cfg.window_len ? ctx.cfg.window_len : d->params().max_len);
    }
  }
  if (cfg.verbose)
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_leaf(const ordered_json& v) {
  if (!v.is_structured()) return true;
  if (v.is_array()) {
    for (const auto& e : v)
      if (e.is_structured()) return false;
    return true;
  }
  return false;
}

std::string leaf_text(const ordered_json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void render_text(const ordered_json& j, const std::string& pad, std::ostream& os);

void render_item(const std::string& key, const ordered_json& v, const std::string& lead, const std::string& pad,
                 std::ostream& os) {
  if (is_leaf(v)) {
    os << lead << key << ": " << leaf_text(v) << "\n";
  } else {
    os << lead << key << ":\n";
    render_text(v, pad + "  ", os);
  }
}

void render_text(const ordered_json& j, const std::string& pad, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_item(k, v, pad, pad, os);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        bool first = true;
        for (const auto& [k, v] : e.items()) {
          render_item(k, v, first ? pad + "- " : pad + "  ", pad + "  ", os);
          first = false;
        }
      } else if (is_leaf(e)) {
        os << pad << "- " << leaf_text(e) << "\n";
      } else {
        os << pad << "-\n";
        render_text(e, pad + "  ", os);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  if (body.contains("text") && body.size() <= 4 && body["command"] == "export") return body["text"].get<std::string>();
  render_text(body, "", os);
  return os.str();
}

std::string Report::json() const { return body.dump(2) + "\n"; }

}  // namespace hk::cli
