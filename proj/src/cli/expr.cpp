#include "hk/expr.hpp"

#include <regex>

#include "hk/diagrams.hpp"

namespace hk::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits at top-level occurrences of sep (outside brackets and parentheses).
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      char ch = s[i];
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (ch != sep || depth) continue;
    }
    out.push_back(trim(s.substr(start, i - start)));
    start = i + 1;
  }
  return out;
}

bool is_name_char(char ch) {
  return !std::isspace(static_cast<unsigned char>(ch)) && std::string_view("+-*,;[]().|@").find(ch) == std::string_view::npos;
}

class ExprParser {
 public:
  ExprParser(const Category& c, std::string_view text) : c_(c), s_(text) {}

  Morphism parse() {
    Morphism m = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(s_.substr(i_)) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("in morphism '" + std::string(s_) + "': " + msg, 0);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char ch) {
    skip();
    return i_ < s_.size() && s_[i_] == ch;
  }
  bool eat(char ch) {
    if (!peek(ch)) return false;
    ++i_;
    return true;
  }
  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }

  Morphism sum() {
    bool neg = eat('-');
    Morphism acc = product();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc = add(acc, product());
      else if (peek('-') && !(i_ + 1 < s_.size() && s_[i_ + 1] == '>')) {
        ++i_;
        acc = add(acc, -product());
      } else break;
    }
    return acc;
  }

  Morphism add(const Morphism& a, const Morphism& b) {
    if (a.source() != b.source() || a.target() != b.target())
      fail("cannot add morphisms " + object_str(c_, a.source()) + " -> " + object_str(c_, a.target()) + " and " +
           object_str(c_, b.source()) + " -> " + object_str(c_, b.target()));
    return a + b;
  }

  std::optional<Scalar> scalar_prefix() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
    if (j == i_) return std::nullopt;
    std::size_t k = j;
    while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
    if (k >= s_.size() || s_[k] != '*') return std::nullopt;
    Scalar a = Scalar::parse(c_.field(), s_.substr(i_, j - i_));
    i_ = k + 1;
    return a;
  }

  Morphism product() {
    auto coeff = scalar_prefix();
    Morphism m = factor();
    while (eat('.')) {
      Morphism f = factor();
      if (m.source() != f.target())
        fail("cannot compose: " + object_str(c_, m.source()) + " is not " + object_str(c_, f.target()));
      m = compose(m, f);
    }
    return coeff ? m.scaled(*coeff) : m;
  }

  std::string name() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (is_name_char(s_[j]) || (s_[j] == '-' && j > i_ && s_[j - 1] == 'X'))) ++j;
    if (j == i_) fail("expected a morphism at '" + std::string(s_.substr(i_)) + "'");
    std::string n(s_.substr(i_, j - i_));
    i_ = j;
    return n;
  }

  // Raw text up to the matching ')'.
  std::string call_args() {
    int depth = 1;
    std::size_t j = i_;
    for (; j < s_.size(); ++j) {
      if (s_[j] == '(') ++depth;
      if (s_[j] == ')' && --depth == 0) break;
    }
    if (j >= s_.size()) fail("unbalanced parentheses");
    std::string a(s_.substr(i_, j - i_));
    i_ = j + 1;
    return a;
  }

  Morphism factor() {
    if (eat('(')) {
      Morphism m = sum();
      expect(')');
      return m;
    }
    if (peek('[')) return block();
    std::string n = name();
    if (eat('(')) return call(n, call_args());
    return basis(n);
  }

  ObjectId single_object(const std::string& text) {
    AddObject o = parse_object(c_, text);
    if (o.size() != 1) fail("expected a single generator object, got '" + text + "'");
    return o[0];
  }

  const diagrams::DiagramCategory& diagram(const std::string& what) {
    auto d = dynamic_cast<const diagrams::DiagramCategory*>(&c_);
    if (!d) fail(what + " needs a diagram category");
    return *d;
  }

  Morphism call(const std::string& f, const std::string& args) {
    if (f == "id") return Morphism::identity(c_, parse_object(c_, args));
    if (f == "zero") {
      auto arrow = args.find("->");
      if (arrow == std::string::npos) fail("zero(X -> Y) needs an arrow");
      return zero_morphism(c_, parse_object(c_, args.substr(0, arrow)), parse_object(c_, args.substr(arrow + 2)));
    }
    if (f == "ev") return ev_morphism(c_, single_object(args));
    if (f == "co") return co_morphism(c_, single_object(args));
    auto parts = split_top(args, ',');
    if (f == "braid") {
      if (parts.size() != 2) fail("braid(x, y) takes two objects");
      return braiding_morphism(c_, single_object(parts[0]), single_object(parts[1]));
    }
    if (f == "tensor") {
      if (parts.size() != 2) fail("tensor(f, g) takes two morphisms");
      return tensor(parse_morphism(c_, parts[0]), parse_morphism(c_, parts[1]));
    }
    if (f == "frobenius") {
      const auto& d = diagram("frobenius(p)");
      return diagrams::frobenius_test_morphism(d, static_cast<unsigned>(std::stoul(trim(args))));
    }
    fail("unknown function '" + f + "'");
  }

  Morphism basis(const std::string& n) {
    if (auto t = dynamic_cast<const TableCategory*>(&c_))
      if (auto b = t->find_basis(n)) return Morphism::basis(c_, b->source, b->target, b->index);
    static const std::regex hid("h([0-9]+)_([0-9]+)_([0-9]+)");
    std::smatch m;
    if (std::regex_match(n, m, hid)) {
      auto s = static_cast<ObjectId>(std::stoul(m[1])), t = static_cast<ObjectId>(std::stoul(m[2]));
      std::size_t i = std::stoul(m[3]);
      if (s >= c_.object_count() || t >= c_.object_count() || i >= c_.hom_dim(s, t))
        fail("basis reference '" + n + "' is out of range");
      return Morphism::basis(c_, s, t, i);
    }
    if (auto d = dynamic_cast<const diagrams::DiagramCategory*>(&c_)) {
      if (n == "mu" && d->family() == diagrams::Family::MO) return diagrams::mu_morphism(*d);
      if (n == "dot" && d->family() == diagrams::Family::EN) return diagrams::dot_morphism(*d);
      if (n == "iota" && d->family() == diagrams::Family::Seq) return diagrams::iota_morphism(*d);
    }
    fail("unknown basis morphism '" + n + "'");
  }

  Morphism block() {
    expect('[');
    std::size_t close = i_;
    int depth = 1;
    for (; close < s_.size(); ++close) {
      if (s_[close] == '[' || s_[close] == '(') ++depth;
      if ((s_[close] == ']' || s_[close] == ')') && --depth == 0) break;
    }
    if (close >= s_.size()) fail("unbalanced brackets");
    std::string inner(s_.substr(i_, close - i_));
    i_ = close + 1;
    std::vector<std::vector<std::optional<Morphism>>> cells;
    for (const auto& row : split_top(inner, ';')) {
      cells.emplace_back();
      for (const auto& e : split_top(row, ','))
        cells.back().push_back(e == "0" ? std::nullopt : std::optional<Morphism>(parse_morphism(c_, e)));
    }
    std::size_t cols = cells.front().size();
    for (const auto& r : cells)
      if (r.size() != cols) fail("block rows have different lengths");
    std::vector<std::optional<AddObject>> src(cols), tgt(cells.size());
    for (std::size_t r = 0; r < cells.size(); ++r)
      for (std::size_t k = 0; k < cols; ++k) {
        if (!cells[r][k]) continue;
        const Morphism& m = *cells[r][k];
        if (src[k] && *src[k] != m.source()) fail("block column " + std::to_string(k) + " has mixed sources");
        if (tgt[r] && *tgt[r] != m.target()) fail("block row " + std::to_string(r) + " has mixed targets");
        src[k] = m.source();
        tgt[r] = m.target();
      }
    AddObject x, y;
    for (std::size_t k = 0; k < cols; ++k) {
      if (!src[k]) fail("block column " + std::to_string(k) + " is entirely zero; write zero(X -> Y) entries");
      x = concat(x, *src[k]);
    }
    for (std::size_t r = 0; r < cells.size(); ++r) {
      if (!tgt[r]) fail("block row " + std::to_string(r) + " is entirely zero; write zero(X -> Y) entries");
      y = concat(y, *tgt[r]);
    }
    std::vector<Morphism> rows;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::vector<Morphism> parts;
      for (std::size_t k = 0; k < cols; ++k)
        parts.push_back(cells[r][k] ? *cells[r][k] : zero_morphism(c_, *src[k], *tgt[r]));
      rows.push_back(join_sources(parts));
    }
    return join_targets(rows);
  }

  const Category& c_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

AddObject parse_object(const Category& c, std::string_view text) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return {};
  AddObject out;
  for (const auto& part : split_top(t, '+')) {
    auto x = c.find_object(part);
    if (!x) throw ParseError("unknown object '" + part + "' in " + c.name(), 0);
    out.push_back(*x);
  }
  return out;
}

Morphism parse_morphism(const Category& c, std::string_view text) { return ExprParser(c, text).parse(); }

Complex parse_complex(const Category& c, std::string_view text) {
  std::string t = trim(text);
  int lo = 0;
  auto at = t.rfind('@');
  if (at != std::string::npos) {
    try {
      lo = std::stoi(t.substr(at + 1));
    } catch (const std::exception&) {
      throw ParseError("bad degree in complex '" + t + "'", 0);
    }
    t = trim(t.substr(0, at));
  }
  auto parts = split_top(t, '|');
  if (parts.size() == 1) {
    bool is_object = true;
    for (const auto& p : split_top(parts[0], '+'))
      if (!c.find_object(p) && p != "0" && !p.empty()) is_object = false;
    if (is_object) return Complex::concentrated(c, parse_object(c, parts[0]), lo);
  }
  std::vector<Morphism> d;
  std::vector<AddObject> objs;
  for (const auto& p : parts) {
    d.push_back(parse_morphism(c, p));
    if (!objs.empty() && objs.back() != d.back().source())
      throw ShapeError("differentials of complex '" + t + "' do not compose");
    if (objs.empty()) objs.push_back(d.back().source());
    objs.push_back(d.back().target());
  }
  Complex x(c, lo, objs, d);
  x.validate();
  return x;
}

}  // namespace hk::cli
