#include "hk/catfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hk/diagrams.hpp"

namespace hk::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

struct Line {
  int number;
  std::string text;
};

struct Section {
  std::string kind;
  std::vector<std::string> args;
  int line;
  std::vector<Line> body;
};

/// A functor with a document-chosen name.
class NamedFunctor : public Functor {
 public:
  NamedFunctor(std::unique_ptr<Functor> inner, std::string name) : inner_(std::move(inner)), name_(std::move(name)) {}
  const Category& source() const override { return inner_->source(); }
  std::string name() const override { return name_; }
  std::size_t dim(ObjectId x) const override { return inner_->dim(x); }
  Matrix basis_image(ObjectId s, ObjectId t, std::size_t i) const override { return inner_->basis_image(s, t, i); }
  bool is_monoidal() const override { return inner_->is_monoidal(); }

 private:
  std::unique_ptr<Functor> inner_;
  std::string name_;
};

class Parser {
 public:
  Parser(const std::string& text, const std::optional<FieldSpec>& field) : field_override_(field) { split(text); }

  CatFile run() {
    FieldSpec f = field();
    CatFile out;
    if (top_.count("generate")) {
      out.generated = true;
      out.category = generate(f);
    } else {
      std::string name = top_.count("name") ? top_.at("name").text : "unnamed";
      auto c = std::make_unique<TableCategory>(name, f);
      build_table(*c);
      table_ = c.get();
      out.category = std::move(c);
    }
    cat_ = out.category.get();
    if (errors_.empty() && table_) {
      try {
        out.validation = validate_category(*table_);
      } catch (const Error& e) {
        error(0, std::string("incomplete structure: ") + e.what());
      }
      for (const auto& v : out.validation.violations) error(0, "axiom violation: " + v);
    }
    if (errors_.empty())
      for (const auto& s : sections_)
        if (s.kind == "functor") read_functor(s, out);
    if (!errors_.empty()) {
      std::string msg;
      for (const auto& e : errors_) msg += (msg.empty() ? "" : "\n") + e;
      throw ParseError(msg, first_error_line_);
    }
    return out;
  }

 private:
  void error(int line, const std::string& msg) {
    if (errors_.empty()) first_error_line_ = line;
    errors_.push_back(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
  }

  void split(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
      ++n;
      std::string t = trim(raw.substr(0, raw.find('#')));
      if (t.empty()) continue;
      if (t.front() == '[') {
        if (t.back() != ']') {
          error(n, "unterminated section header");
          continue;
        }
        auto words = split_ws(t.substr(1, t.size() - 2));
        if (words.empty()) {
          error(n, "empty section header");
          continue;
        }
        Section s{words[0], {words.begin() + 1, words.end()}, n, {}};
        static const std::set<std::string> known{"objects", "hom",     "identity", "compose", "monoidal",
                                                 "tensor",  "dual",    "braiding", "functor"};
        if (!known.count(s.kind)) error(n, "unknown section [" + s.kind + "]");
        if (s.kind == "tensor") s.kind = "monoidal";
        sections_.push_back(std::move(s));
      } else if (sections_.empty()) {
        auto eq = t.find('=');
        if (eq == std::string::npos) {
          error(n, "expected 'key = value' before the first section");
          continue;
        }
        top_[trim(t.substr(0, eq))] = Line{n, trim(t.substr(eq + 1))};
      } else {
        sections_.back().body.push_back({n, t});
      }
    }
  }

  FieldSpec field() {
    if (field_override_) return *field_override_;
    if (!top_.count("field")) return FieldSpec::rationals();
    try {
      return FieldSpec::parse(top_.at("field").text);
    } catch (const Error& e) {
      error(top_.at("field").number, e.what());
      return FieldSpec::rationals();
    }
  }

  unsigned top_uint(const std::string& key, unsigned dflt) {
    if (!top_.count(key)) return dflt;
    try {
      return static_cast<unsigned>(std::stoul(top_.at(key).text));
    } catch (const std::exception&) {
      error(top_.at(key).number, "expected a non-negative integer for " + key);
      return dflt;
    }
  }

  Scalar top_scalar(const FieldSpec& f, const std::string& key, long dflt) {
    if (!top_.count(key)) return Scalar(f, dflt);
    try {
      return Scalar::parse(f, top_.at(key).text);
    } catch (const Error& e) {
      error(top_.at(key).number, e.what());
      return Scalar(f, dflt);
    }
  }

  std::unique_ptr<Category> generate(const FieldSpec& f) {
    for (const auto& s : sections_)
      if (s.kind != "functor") error(s.line, "generated categories accept only [functor] sections");
    const Line& g = top_.at("generate");
    unsigned len = top_uint("max_len", 4);
    Scalar delta = top_scalar(f, "delta", 0), t = top_scalar(f, "t", 0);
    try {
      if (g.text == "OB") return diagrams::build_OB(delta, len);
      if (g.text == "MO") return diagrams::build_MO(delta, t, len);
      if (g.text == "EN") {
        std::vector<Scalar> ds;
        if (top_.count("deltas"))
          for (const auto& d : split_on(top_.at("deltas").text, ',')) ds.push_back(Scalar::parse(f, d));
        return diagrams::build_EN(ds, len, top_uint("max_dots", 2));
      }
      if (g.text == "Seq") return diagrams::build_Seq(f, len, static_cast<int>(top_uint("index_bound", 2)));
      error(g.number, "unknown family '" + g.text + "' (expected OB, MO, EN or Seq)");
    } catch (const Error& e) {
      error(g.number, e.what());
    }
    return diagrams::build_OB(Scalar(f, 0L), 0);
  }

  std::optional<ObjectId> object(int line, const std::string& name) {
    auto x = cat_ ? cat_->find_object(name) : table_build_->find_object(name);
    if (!x) error(line, "unknown object '" + name + "'");
    return x;
  }

  std::optional<BasisRef> basis(int line, const std::string& name) {
    auto b = table_build_->find_basis(name);
    if (!b) error(line, "unknown basis morphism '" + name + "'");
    return b;
  }

  std::optional<SparseVec> expr(int line, const std::string& text, ObjectId s, ObjectId t) {
    try {
      return parse_linear_expr(table_build_->field(), text, [&](std::string_view name) -> std::uint32_t {
        auto b = table_build_->find_basis(name);
        if (!b) throw Error("unknown basis morphism '" + std::string(name) + "'");
        if (b->source != s || b->target != t)
          throw ShapeError("'" + std::string(name) + "' is not in hom(" + table_build_->object_name(s) + ", " +
                           table_build_->object_name(t) + ")");
        return static_cast<std::uint32_t>(b->index);
      });
    } catch (const Error& e) {
      error(line, e.what());
      return std::nullopt;
    }
  }

  void build_table(TableCategory& c) {
    table_build_ = &c;
    for (const auto& s : sections_)
      if (s.kind == "objects")
        for (const auto& l : s.body)
          for (const auto& w : split_ws(l.text)) {
            if (c.find_object(w)) error(l.number, "duplicate object '" + w + "'");
            else c.add_object(w);
          }
    if (!c.object_count()) error(0, "no objects declared");
    std::set<std::string> names;
    for (const auto& s : sections_) {
      if (s.kind != "hom") continue;
      if (s.args.size() != 2) {
        error(s.line, "expected [hom SOURCE TARGET]");
        continue;
      }
      auto a = object(s.line, s.args[0]), b = object(s.line, s.args[1]);
      if (!a || !b) continue;
      std::vector<std::string> bn;
      for (const auto& l : s.body)
        for (const auto& w : split_ws(l.text)) {
          if (!names.insert(w).second) error(l.number, "duplicate basis name '" + w + "'");
          bn.push_back(w);
        }
      if (c.hom_dim(*a, *b)) error(s.line, "hom(" + s.args[0] + ", " + s.args[1] + ") declared twice");
      c.set_hom_basis(*a, *b, bn);
    }
    for (const auto& s : sections_) {
      if (s.kind != "identity") continue;
      if (s.args.size() != 1) {
        error(s.line, "expected [identity X]");
        continue;
      }
      auto x = object(s.line, s.args[0]);
      if (!x) continue;
      std::string body;
      for (const auto& l : s.body) body += " " + l.text;
      if (auto v = expr(s.line, trim(body), *x, *x)) c.set_identity(*x, *v);
    }
    for (ObjectId x = 0; x < c.object_count(); ++x)
      if (!c.has_identity(x)) error(0, "missing [identity " + c.object_name(x) + "]");
    for (const auto& s : sections_) {
      if (s.kind == "compose") read_compose(c, s);
      if (s.kind == "monoidal") read_monoidal(c, s);
      if (s.kind == "dual") read_dual(c, s);
      if (s.kind == "braiding") read_braiding(c, s);
    }
    std::size_t missing = 0;
    const auto n = static_cast<ObjectId>(c.object_count());
    for (ObjectId x = 0; x < n; ++x)
      for (ObjectId y = 0; y < n; ++y)
        for (ObjectId z = 0; z < n; ++z)
          for (std::size_t g = 0; g < c.hom_dim(y, z); ++g)
            for (std::size_t f = 0; f < c.hom_dim(x, y); ++f)
              if (!c.has_composition(x, y, z, g, f) && missing++ < 20)
                error(0, "missing composition '" + c.basis_name(y, z, g) + " " + c.basis_name(x, y, f) +
                             "' in [compose]; structure constants are never defaulted");
    if (missing > 20) error(0, std::to_string(missing - 20) + " further compositions missing");
  }

  // "lhs = rhs" with lhs split into words.
  bool equation(const Line& l, std::vector<std::string>& lhs, std::string& rhs) {
    auto eq = l.text.find('=');
    if (eq == std::string::npos) {
      error(l.number, "expected '... = ...'");
      return false;
    }
    lhs = split_ws(l.text.substr(0, eq));
    rhs = trim(l.text.substr(eq + 1));
    return true;
  }

  void read_compose(TableCategory& c, const Section& s) {
    for (const auto& l : s.body) {
      std::vector<std::string> lhs;
      std::string rhs;
      if (!equation(l, lhs, rhs)) continue;
      if (lhs.size() != 2) {
        error(l.number, "expected 'g f = expr'");
        continue;
      }
      auto g = basis(l.number, lhs[0]), f = basis(l.number, lhs[1]);
      if (!g || !f) continue;
      if (f->target != g->source) {
        error(l.number, "'" + lhs[0] + "' and '" + lhs[1] + "' are not composable");
        continue;
      }
      if (c.has_composition(f->source, f->target, g->target, g->index, f->index))
        error(l.number, "composition '" + lhs[0] + " " + lhs[1] + "' given twice");
      if (auto v = expr(l.number, rhs, f->source, g->target))
        c.set_composition(f->source, f->target, g->target, g->index, f->index, *v);
    }
  }

  void read_monoidal(TableCategory& c, const Section& s) {
    for (const auto& l : s.body) {
      std::vector<std::string> lhs;
      std::string rhs;
      if (!equation(l, lhs, rhs)) continue;
      if (lhs.size() == 1 && lhs[0] == "unit") {
        if (auto u = object(l.number, rhs)) c.set_unit(*u);
      } else if (lhs.size() == 2) {
        auto a = object(l.number, lhs[0]), b = object(l.number, lhs[1]), ab = object(l.number, rhs);
        if (a && b && ab) c.set_object_tensor(*a, *b, *ab);
      } else if (lhs.size() == 3 && lhs[1] == "*") {
        auto a = basis(l.number, lhs[0]), b = basis(l.number, lhs[2]);
        if (!a || !b) continue;
        if (!c.has_object_tensor(a->source, b->source) || !c.has_object_tensor(a->target, b->target)) {
          error(l.number, "object tensor products for '" + lhs[0] + " * " + lhs[2] + "' must be declared first");
          continue;
        }
        ObjectId s0 = c.tensor_objects(a->source, b->source), t0 = c.tensor_objects(a->target, b->target);
        if (auto v = expr(l.number, rhs, s0, t0))
          c.set_basis_tensor(a->source, a->target, a->index, b->source, b->target, b->index, *v);
      } else {
        error(l.number, "expected 'unit = X', 'A B = C' or 'a * b = expr'");
      }
    }
  }

  void read_dual(TableCategory& c, const Section& s) {
    for (const auto& l : s.body) {
      auto parts = split_on(l.text, ';');
      std::string xs, xds, evs, cos;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) continue;
        std::string k = trim(parts[i].substr(0, eq)), v = trim(parts[i].substr(eq + 1));
        if (i == 0) xs = k, xds = v;
        else if (k == "ev") evs = v;
        else if (k == "co") cos = v;
      }
      if (xs.empty() || evs.empty() || cos.empty()) {
        error(l.number, "expected 'X = Xdual ; ev = expr ; co = expr'");
        continue;
      }
      auto x = object(l.number, xs), xd = object(l.number, xds);
      if (!x || !xd || !c.is_monoidal()) {
        if (x && xd) error(l.number, "[dual] needs [monoidal] data with a unit");
        continue;
      }
      if (!c.has_object_tensor(*xd, *x) || !c.has_object_tensor(*x, *xd)) {
        error(l.number, "object tensor products for the dual pair must be declared");
        continue;
      }
      auto ev = expr(l.number, evs, c.tensor_objects(*xd, *x), c.unit());
      auto co = expr(l.number, cos, c.unit(), c.tensor_objects(*x, *xd));
      if (ev && co) c.set_dual(*x, *xd, *ev, *co);
    }
  }

  void read_braiding(TableCategory& c, const Section& s) {
    for (const auto& l : s.body) {
      std::vector<std::string> lhs;
      std::string rhs;
      if (!equation(l, lhs, rhs)) continue;
      if (lhs.size() != 2) {
        error(l.number, "expected 'A B = expr'");
        continue;
      }
      auto a = object(l.number, lhs[0]), b = object(l.number, lhs[1]);
      if (!a || !b) continue;
      if (!c.has_object_tensor(*a, *b) || !c.has_object_tensor(*b, *a)) {
        error(l.number, "object tensor products for the braiding must be declared");
        continue;
      }
      if (auto v = expr(l.number, rhs, c.tensor_objects(*a, *b), c.tensor_objects(*b, *a))) c.set_braiding(*a, *b, *v);
    }
  }

  void read_functor(const Section& s, CatFile& out) {
    if (s.args.size() != 1) {
      error(s.line, "expected [functor NAME]");
      return;
    }
    const FieldSpec& f = cat_->field();
    std::map<std::string, Line> entries;
    for (const auto& l : s.body) {
      auto eq = l.text.find('=');
      if (eq == std::string::npos) {
        error(l.number, "expected 'key = value'");
        continue;
      }
      std::string k = trim(l.text.substr(0, eq));
      if (entries.count(k)) error(l.number, "duplicate entry '" + k + "'");
      entries[k] = Line{l.number, trim(l.text.substr(eq + 1))};
    }
    if (out.find_functor(s.args[0])) error(s.line, "duplicate functor '" + s.args[0] + "'");
    if (out.generated) {
      read_vector_functor(s, entries, out);
      return;
    }
    auto th = std::make_unique<TableFunctor>(*table_, s.args[0]);
    std::map<ObjectId, std::size_t> dims;
    for (const auto& [k, l] : entries) {
      if (k == "monoidal") {
        th->set_monoidal(l.text == "true");
        if (l.text != "true" && l.text != "false") error(l.number, "monoidal must be true or false");
      } else if (!l.text.empty() && l.text.front() != '[') {
        auto x = object(l.number, k);
        if (!x) continue;
        try {
          dims[*x] = std::stoul(l.text);
          th->set_dim(*x, dims[*x]);
        } catch (const std::exception&) {
          error(l.number, "expected a dimension for object '" + k + "'");
        }
      }
    }
    for (ObjectId x = 0; x < table_->object_count(); ++x)
      if (!dims.count(x)) error(s.line, "functor '" + s.args[0] + "' has no dimension for " + table_->object_name(x));
    if (!errors_.empty()) return;
    std::set<std::string> seen;
    for (const auto& [k, l] : entries) {
      if (l.text.empty() || l.text.front() != '[') continue;
      auto b = basis(l.number, k);
      if (!b) continue;
      seen.insert(k);
      try {
        th->set_image(b->source, b->target, b->index,
                      parse_matrix_literal(f, l.text, dims[b->target], dims[b->source]));
      } catch (const Error& e) {
        error(l.number, e.what());
      }
    }
    for (ObjectId a = 0; a < table_->object_count(); ++a)
      for (ObjectId b = 0; b < table_->object_count(); ++b)
        for (std::size_t i = 0; i < table_->hom_dim(a, b); ++i)
          if (!seen.count(table_->basis_name(a, b, i)))
            error(s.line, "functor '" + s.args[0] + "' has no image for '" + table_->basis_name(a, b, i) + "'");
    if (!errors_.empty()) return;
    ValidationReport r;
    try {
      r = validate_functor(*th);
    } catch (const Error& e) {
      r.violations.push_back(e.what());
    }
    for (const auto& v : r.violations) error(s.line, "functor '" + s.args[0] + "': " + v);
    out.functors.push_back(std::move(th));
  }

  void read_vector_functor(const Section& s, const std::map<std::string, Line>& entries, CatFile& out) {
    const auto& dc = static_cast<const diagrams::DiagramCategory&>(*cat_);
    const FieldSpec& f = dc.field();
    if (!entries.count("vector")) {
      error(s.line, "functors on generated categories are given by 'vector = n'");
      return;
    }
    try {
      std::size_t n = std::stoul(entries.at("vector").text), m = 0;
      if (entries.count("vector_w")) m = std::stoul(entries.at("vector_w").text);
      Matrix mu, endo;
      if (entries.count("mu")) mu = parse_matrix_literal(f, entries.at("mu").text, m, n);
      if (entries.count("dot")) endo = parse_matrix_literal(f, entries.at("dot").text, n, n);
      auto th = std::make_unique<diagrams::VectorFunctor>(dc, n, m, mu, endo);
      out.functors.push_back(std::make_unique<NamedFunctor>(std::move(th), s.args[0]));
    } catch (const std::exception& e) {
      error(s.line, e.what());
    }
  }

  std::optional<FieldSpec> field_override_;
  std::map<std::string, Line> top_;
  std::vector<Section> sections_;
  std::vector<std::string> errors_;
  int first_error_line_ = 0;
  TableCategory* table_build_ = nullptr;
  TableCategory* table_ = nullptr;
  const Category* cat_ = nullptr;
};

}  // namespace

const Functor* CatFile::find_functor(std::string_view name) const {
  for (const auto& f : functors)
    if (f->name() == name) return f.get();
  return nullptr;
}

SparseVec parse_linear_expr(const FieldSpec& f, std::string_view text,
                            const std::function<std::uint32_t(std::string_view)>& lookup) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw Error("empty expression");
  if (tokens.size() == 1 && tokens[0] == "0") return {};
  SparseVec acc;
  bool negate = false, expect_term = true;
  for (const auto& tok : tokens) {
    if (!expect_term) {
      if (tok != "+" && tok != "-") throw Error("expected '+' or '-' before '" + tok + "'");
      negate = tok == "-";
      expect_term = true;
      continue;
    }
    std::string t = tok;
    if (t.size() > 1 && t[0] == '-' && t[1] != '-') {
      negate = !negate;
      t = t.substr(1);
    }
    Scalar c = Scalar::one(f);
    std::string name = t;
    auto star = t.rfind('*');
    if (star != std::string::npos) {
      c = Scalar::parse(f, t.substr(0, star));
      name = t.substr(star + 1);
    }
    if (name.empty()) throw Error("missing basis name in '" + tok + "'");
    if (negate) c = -c;
    sparse_axpy(acc, c, SparseVec{{lookup(name), Scalar::one(f)}});
    negate = false;
    expect_term = false;
  }
  if (expect_term) throw Error("expression ends with an operator");
  return acc;
}

Matrix parse_matrix_literal(const FieldSpec& f, std::string_view text, std::size_t rows, std::size_t cols) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw Error("matrix literal must be written [ ... ]");
  std::string inner = trim(t.substr(1, t.size() - 2));
  Matrix m(f, rows, cols);
  if (inner.empty()) {
    if (rows && cols) throw ShapeError("empty matrix literal for a " + std::to_string(rows) + "x" +
                                       std::to_string(cols) + " image");
    return m;
  }
  auto row_texts = split_on(inner, ';');
  if (row_texts.size() != rows)
    throw ShapeError("matrix has " + std::to_string(row_texts.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    std::string r = row_texts[i];
    for (char& ch : r)
      if (ch == ',') ch = ' ';
    auto entries = split_ws(r);
    if (entries.size() != cols)
      throw ShapeError("matrix row " + std::to_string(i) + " has " + std::to_string(entries.size()) +
                       " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar::parse(f, entries[j]));
  }
  return m;
}

CatFile parse_category_text(const std::string& text, const std::optional<FieldSpec>& field) {
  return Parser(text, field).run();
}

CatFile parse_category_file(const std::string& path, const std::optional<FieldSpec>& field) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open category file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_category_text(os.str(), field);
}

}  // namespace hk::cli
