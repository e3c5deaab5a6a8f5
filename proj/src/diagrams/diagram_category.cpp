#include <algorithm>
#include <functional>
#include <sstream>

#include "hk/diagrams.hpp"

namespace hk::diagrams {

namespace {

bool is_square(Letter l) { return l == 2 || l == 3; }

void enumerate_words(const std::vector<Letter>& alphabet, unsigned max_len, std::vector<Word>& out) {
  out.push_back({});
  std::size_t begin = 0;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
}

// Cyclic boundary coordinate: bottom left to right, then top right to left.
unsigned cyclic(unsigned pos, unsigned s, unsigned t) { return pos < s ? pos : s + (t - 1 - (pos - s)); }

bool chords_cross(unsigned a, unsigned b, unsigned c, unsigned d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

std::string PairingDiagram::key() const {
  std::string k;
  k.reserve(pairs.size() * 4);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    k.push_back(static_cast<char>(pairs[i].first));
    k.push_back(static_cast<char>(pairs[i].second));
    if (!dots.empty()) {
      k.push_back(static_cast<char>(dots[i] & 0xff));
      k.push_back(static_cast<char>(dots[i] >> 8));
    }
  }
  return k;
}

unsigned PairingDiagram::total_dots() const {
  unsigned s = 0;
  for (auto d : dots) s += d;
  return s;
}

DiagramCategory::DiagramCategory(DiagramParams p) : params_(std::move(p)) {
  if (params_.max_len < 1) throw Error("diagram window needs max_len >= 1");
  if (params_.max_len > 12) throw WindowError("diagram window max_len > 12 is not supported");
  if (params_.family == Family::EN && params_.deltas.size() < params_.max_dots + 1)
    throw Error("EN needs loop values δ_0..δ_D for D = max_dots");
  if (params_.family == Family::Seq && params_.index_bound < 0) throw Error("Seq index bound must be >= 0");
  enumerate_words(alphabet(), params_.max_len, words_);
  for (ObjectId i = 0; i < words_.size(); ++i) word_ids_[words_[i]] = i;
}

std::vector<Letter> DiagramCategory::alphabet() const {
  switch (params_.family) {
    case Family::OB:
    case Family::EN:
      return {0, 1};
    case Family::MO:
      return {0, 1, 2, 3};
    case Family::Seq: {
      std::vector<Letter> a;
      for (int i = -params_.index_bound; i <= params_.index_bound; ++i) a.push_back(i);
      return a;
    }
  }
  return {};
}

std::string DiagramCategory::letter_str(Letter l) const {
  if (params_.family == Family::Seq) return "X" + std::to_string(l);
  static const char* names[] = {"•", "∘", "■", "□"};
  return names[l];
}

std::string DiagramCategory::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) s += letter_str(l);
  return s;
}

Word DiagramCategory::parse_word(std::string_view text) const {
  Word w;
  std::string t(text);
  if (t == "1" || t == "∅" || t == "e") return w;
  std::size_t i = 0;
  auto bad = [&] { return Error("cannot parse word '" + t + "' for " + name()); };
  while (i < t.size()) {
    if (t[i] == ' ' || t[i] == ',') {
      ++i;
      continue;
    }
    if (params_.family == Family::Seq) {
      if (t[i] != 'X') throw bad();
      std::size_t j = i + 1;
      if (j < t.size() && t[j] == '-') ++j;
      std::size_t k = j;
      while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
      if (k == j) throw bad();
      w.push_back(std::stoi(t.substr(i + 1, k - i - 1)));
      i = k;
      continue;
    }
    bool mo = params_.family == Family::MO;
    if (t.compare(i, 3, "•") == 0) {
      w.push_back(0);
      i += 3;
    } else if (t.compare(i, 3, "∘") == 0) {
      w.push_back(1);
      i += 3;
    } else if (mo && t.compare(i, 3, "■") == 0) {
      w.push_back(2);
      i += 3;
    } else if (mo && t.compare(i, 3, "□") == 0) {
      w.push_back(3);
      i += 3;
    } else if (t[i] == 'b') {
      w.push_back(0);
      ++i;
    } else if (t[i] == 'w') {
      w.push_back(1);
      ++i;
    } else if (mo && t[i] == 'B') {
      w.push_back(2);
      ++i;
    } else if (mo && t[i] == 'W') {
      w.push_back(3);
      ++i;
    } else {
      throw bad();
    }
  }
  return w;
}

std::string DiagramCategory::name() const {
  std::ostringstream os;
  switch (params_.family) {
    case Family::OB:
      os << "OB(delta=" << params_.delta.str() << ")";
      break;
    case Family::MO:
      os << "MO(delta=" << params_.delta.str() << ",t=" << params_.t.str() << ")";
      break;
    case Family::EN: {
      os << "EN(";
      for (std::size_t i = 0; i < params_.deltas.size(); ++i) os << (i ? "," : "") << params_.deltas[i].str();
      os << ";dots<=" << params_.max_dots << ")";
      break;
    }
    case Family::Seq:
      os << "Seq(|i|<=" << params_.index_bound << ")";
      break;
  }
  os << " over " << params_.field.name() << ", words of length <= " << params_.max_len;
  return os.str();
}

std::string DiagramCategory::object_name(ObjectId x) const { return word_str(words_.at(x)); }

std::optional<ObjectId> DiagramCategory::find_object(std::string_view name) const {
  try {
    return find_word(parse_word(name));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<ObjectId> DiagramCategory::find_word(const Word& w) const {
  auto it = word_ids_.find(w);
  if (it == word_ids_.end()) return std::nullopt;
  return it->second;
}

ObjectId DiagramCategory::require_word(const Word& w) const {
  auto x = find_word(w);
  if (!x) throw WindowError("word " + word_str(w) + " lies outside the window of " + name());
  return *x;
}

bool DiagramCategory::pair_allowed(const Word& src, const Word& tgt, unsigned a, unsigned b) const {
  const unsigned s = static_cast<unsigned>(src.size());
  bool a_bottom = a < s, b_bottom = b < s;
  Letter la = a_bottom ? src[a] : tgt[a - s];
  Letter lb = b_bottom ? src[b] : tgt[b - s];
  switch (params_.family) {
    case Family::OB:
    case Family::EN:
      return a_bottom == b_bottom ? la != lb : la == lb;
    case Family::MO:
      if (a_bottom == b_bottom) {
        if ((la < 2) == (lb < 2)) return la != lb;
        // A V-strand turning into a W-strand: • with □ below, ∘ with ■ above.
        return a_bottom ? (la == 0 || la == 3) && (lb == 0 || lb == 3) : (la == 1 || la == 2) && (lb == 1 || lb == 2);
      }
      if (la == lb) return true;
      // a is bottom, b is top since a < b
      return (la == 0 && lb == 2) || (la == 3 && lb == 1);
    case Family::Seq:
      if (a_bottom != b_bottom) return la == lb;
      // a is to the left of b on the same line
      return a_bottom ? la == lb + 1 : la + 1 == lb;
  }
  return false;
}

bool DiagramCategory::is_legal(const PairingDiagram& d) const {
  const unsigned s = static_cast<unsigned>(d.source.size()), t = static_cast<unsigned>(d.target.size());
  if ((s + t) % 2 || d.pairs.size() != (s + t) / 2) return false;
  if (params_.family == Family::EN ? d.dots.size() != d.pairs.size() : !d.dots.empty()) return false;
  if (params_.family == Family::EN && d.total_dots() > params_.max_dots) return false;
  std::vector<bool> seen(s + t, false);
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    auto [a, b] = d.pairs[i];
    if (a >= b || b >= s + t || seen[a] || seen[b]) return false;
    if (i && d.pairs[i - 1].first >= a) return false;
    seen[a] = seen[b] = true;
    if (!pair_allowed(d.source, d.target, a, b)) return false;
  }
  if (params_.family == Family::Seq)
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
      for (std::size_t j = i + 1; j < d.pairs.size(); ++j)
        if (chords_cross(cyclic(d.pairs[i].first, s, t), cyclic(d.pairs[i].second, s, t),
                         cyclic(d.pairs[j].first, s, t), cyclic(d.pairs[j].second, s, t)))
          return false;
  return true;
}

const DiagramCategory::HomBasis& DiagramCategory::basis_for(ObjectId s, ObjectId t) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find({s, t});
  if (it != cache_.end()) return *it->second;
  auto hb = std::make_unique<HomBasis>();
  const Word &src = words_.at(s), &tgt = words_.at(t);
  const unsigned n = static_cast<unsigned>(src.size() + tgt.size());
  const unsigned ns = static_cast<unsigned>(src.size()), nt = static_cast<unsigned>(tgt.size());
  if (n % 2 == 0) {
    std::vector<bool> used(n, false);
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    bool seq = params_.family == Family::Seq;
    std::function<void()> rec = [&]() {
      unsigned a = 0;
      while (a < n && used[a]) ++a;
      if (a == n) {
        PairingDiagram d{src, tgt, pairs, {}};
        if (params_.family != Family::EN) {
          hb->diagrams.push_back(std::move(d));
          return;
        }
        const std::size_t k = pairs.size();
        std::vector<std::uint16_t> dots(k, 0);
        std::function<void(std::size_t, unsigned)> deco = [&](std::size_t i, unsigned left) {
          if (i == k) {
            PairingDiagram e = d;
            e.dots = dots;
            hb->diagrams.push_back(std::move(e));
            return;
          }
          for (unsigned v = 0; v <= left; ++v) {
            dots[i] = static_cast<std::uint16_t>(v);
            deco(i + 1, left - v);
          }
          dots[i] = 0;
        };
        deco(0, params_.max_dots);
        return;
      }
      used[a] = true;
      for (unsigned b = a + 1; b < n; ++b) {
        if (used[b] || !pair_allowed(src, tgt, a, b)) continue;
        if (seq) {
          bool crosses = false;
          for (auto& p : pairs)
            if (chords_cross(cyclic(a, ns, nt), cyclic(b, ns, nt), cyclic(p.first, ns, nt),
                             cyclic(p.second, ns, nt))) {
              crosses = true;
              break;
            }
          if (crosses) continue;
        }
        used[b] = true;
        pairs.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
        rec();
        pairs.pop_back();
        used[b] = false;
      }
      used[a] = false;
    };
    rec();
  }
  for (std::size_t i = 0; i < hb->diagrams.size(); ++i) hb->index.emplace(hb->diagrams[i].key(), i);
  auto& ref = *hb;
  cache_.emplace(std::make_pair(s, t), std::move(hb));
  return ref;
}

const std::vector<PairingDiagram>& DiagramCategory::hom_basis(ObjectId s, ObjectId t) const {
  return basis_for(s, t).diagrams;
}

std::size_t DiagramCategory::hom_dim(ObjectId src, ObjectId tgt) const { return basis_for(src, tgt).diagrams.size(); }

std::string DiagramCategory::basis_name(ObjectId src, ObjectId tgt, std::size_t i) const {
  const auto& d = hom_basis(src, tgt).at(i);
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    os << (k ? "," : "") << int(d.pairs[k].first) << "-" << int(d.pairs[k].second);
    if (!d.dots.empty() && d.dots[k]) os << ":" << d.dots[k];
  }
  os << "}";
  return os.str();
}

std::size_t DiagramCategory::basis_index(const PairingDiagram& d) const {
  ObjectId s = require_word(d.source), t = require_word(d.target);
  if (params_.family == Family::EN && d.total_dots() > params_.max_dots)
    throw WindowError("diagram exceeds the dot budget " + std::to_string(params_.max_dots));
  const auto& hb = basis_for(s, t);
  auto it = hb.index.find(d.key());
  if (it == hb.index.end()) throw Error("not a basis diagram of " + word_str(d.source) + " -> " + word_str(d.target));
  return it->second;
}

Morphism DiagramCategory::diagram_morphism(const PairingDiagram& d) const {
  return Morphism::basis(*this, require_word(d.source), require_word(d.target), basis_index(d));
}

PairingDiagram DiagramCategory::compose_diagrams(const PairingDiagram& g, const PairingDiagram& f,
                                                 Scalar& factor) const {
  if (f.target != g.source) throw ShapeError("diagram composition: words do not match");
  const unsigned sx = static_cast<unsigned>(f.source.size()), sy = static_cast<unsigned>(f.target.size()),
                 sz = static_cast<unsigned>(g.target.size());
  const unsigned total = sx + sy + sz;
  const bool en = params_.family == Family::EN;
  // Nodes: bottom 0..sx-1, middle sx..sx+sy-1, top sx+sy..; f lives on bottom+middle, g on middle+top.
  std::vector<int> pf(total, -1), pg(total, -1);
  std::vector<unsigned> ef(total, 0), eg(total, 0);
  for (std::size_t k = 0; k < f.pairs.size(); ++k) {
    unsigned a = f.pairs[k].first, b = f.pairs[k].second;
    pf[a] = static_cast<int>(b);
    pf[b] = static_cast<int>(a);
    if (en) ef[a] = ef[b] = f.dots[k];
  }
  for (std::size_t k = 0; k < g.pairs.size(); ++k) {
    unsigned a = g.pairs[k].first + sx, b = g.pairs[k].second + sx;
    pg[a] = static_cast<int>(b);
    pg[b] = static_cast<int>(a);
    if (en) eg[a] = eg[b] = g.dots[k];
  }
  auto boundary = [&](unsigned v) { return v < sx || v >= sx + sy; };
  auto out_pos = [&](unsigned v) { return v < sx ? v : v - sy; };
  std::vector<bool> visited(total, false);
  std::vector<std::tuple<unsigned, unsigned, unsigned>> result;
  for (unsigned start = 0; start < total; ++start) {
    if (!boundary(start) || visited[start]) continue;
    unsigned cur = start, d = 0;
    bool use_f = start < sx;
    visited[cur] = true;
    while (true) {
      int nxt = use_f ? pf[cur] : pg[cur];
      if (nxt < 0) throw Error("malformed diagram during composition");
      d += use_f ? ef[cur] : eg[cur];
      cur = static_cast<unsigned>(nxt);
      visited[cur] = true;
      if (boundary(cur)) break;
      use_f = !use_f;
    }
    unsigned a = out_pos(start), b = out_pos(cur);
    result.emplace_back(std::min(a, b), std::max(a, b), d);
  }
  factor = Scalar::one(params_.field);
  for (unsigned m = sx; m < sx + sy; ++m) {
    if (visited[m]) continue;
    unsigned cur = m, d = 0;
    bool use_f = true, square = false;
    do {
      visited[cur] = true;
      square = square || is_square(f.target[cur - sx]);
      d += use_f ? ef[cur] : eg[cur];
      cur = static_cast<unsigned>(use_f ? pf[cur] : pg[cur]);
      use_f = !use_f;
    } while (cur != m);
    switch (params_.family) {
      case Family::OB:
        factor *= params_.delta;
        break;
      case Family::MO:
        factor *= square ? params_.t : params_.delta;
        break;
      case Family::EN:
        if (d > params_.max_dots)
          throw WindowError("closed loop with " + std::to_string(d) + " dots exceeds the dot budget " +
                            std::to_string(params_.max_dots));
        factor *= params_.deltas[d];
        break;
      case Family::Seq:
        throw Error("closed loop in a Seq composite");
    }
  }
  std::sort(result.begin(), result.end());
  PairingDiagram out{f.source, g.target, {}, {}};
  for (auto& [a, b, d] : result) {
    out.pairs.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    if (en) out.dots.push_back(static_cast<std::uint16_t>(d));
  }
  if (en && out.total_dots() > params_.max_dots)
    throw WindowError("composite carries " + std::to_string(out.total_dots()) + " dots, beyond the dot budget " +
                      std::to_string(params_.max_dots));
  return out;
}

SparseVec DiagramCategory::compose_basis(ObjectId x, ObjectId y, ObjectId z, std::size_t g, std::size_t f) const {
  const auto& df = hom_basis(x, y).at(f);
  const auto& dg = hom_basis(y, z).at(g);
  Scalar factor;
  PairingDiagram d = compose_diagrams(dg, df, factor);
  if (factor.is_zero()) return {};
  const auto& hb = basis_for(x, z);
  auto it = hb.index.find(d.key());
  if (it == hb.index.end()) throw Error("composite is not a basis diagram");
  return {{static_cast<std::uint32_t>(it->second), factor}};
}

SparseVec DiagramCategory::identity(ObjectId x) const {
  const Word& w = words_.at(x);
  PairingDiagram d{w, w, {}, {}};
  for (unsigned k = 0; k < w.size(); ++k)
    d.pairs.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(w.size() + k)});
  if (params_.family == Family::EN) d.dots.assign(w.size(), 0);
  return {{static_cast<std::uint32_t>(basis_index(d)), Scalar::one(params_.field)}};
}

ObjectId DiagramCategory::tensor_objects(ObjectId a, ObjectId b) const {
  Word w = words_.at(a);
  const Word& v = words_.at(b);
  w.insert(w.end(), v.begin(), v.end());
  return require_word(w);
}

PairingDiagram DiagramCategory::juxtapose(const PairingDiagram& a, const PairingDiagram& b) const {
  const unsigned s1 = static_cast<unsigned>(a.source.size()), s2 = static_cast<unsigned>(b.source.size()),
                 t1 = static_cast<unsigned>(a.target.size());
  PairingDiagram out;
  out.source = a.source;
  out.source.insert(out.source.end(), b.source.begin(), b.source.end());
  out.target = a.target;
  out.target.insert(out.target.end(), b.target.begin(), b.target.end());
  auto ma = [&](unsigned p) { return p < s1 ? p : s1 + s2 + (p - s1); };
  auto mb = [&](unsigned p) { return p < s2 ? s1 + p : s1 + s2 + t1 + (p - s2); };
  std::vector<std::tuple<unsigned, unsigned, unsigned>> v;
  for (std::size_t k = 0; k < a.pairs.size(); ++k) {
    unsigned x = ma(a.pairs[k].first), y = ma(a.pairs[k].second);
    v.emplace_back(std::min(x, y), std::max(x, y), a.dots.empty() ? 0 : a.dots[k]);
  }
  for (std::size_t k = 0; k < b.pairs.size(); ++k) {
    unsigned x = mb(b.pairs[k].first), y = mb(b.pairs[k].second);
    v.emplace_back(std::min(x, y), std::max(x, y), b.dots.empty() ? 0 : b.dots[k]);
  }
  std::sort(v.begin(), v.end());
  for (auto& [x, y, d] : v) {
    out.pairs.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)});
    if (params_.family == Family::EN) out.dots.push_back(static_cast<std::uint16_t>(d));
  }
  return out;
}

SparseVec DiagramCategory::tensor_basis(ObjectId x, ObjectId y, std::size_t i, ObjectId x2, ObjectId y2,
                                        std::size_t j) const {
  PairingDiagram d = juxtapose(hom_basis(x, y).at(i), hom_basis(x2, y2).at(j));
  return {{static_cast<std::uint32_t>(basis_index(d)), Scalar::one(params_.field)}};
}

Word DiagramCategory::dual_word(const Word& w) const {
  Word d(w.rbegin(), w.rend());
  for (Letter& l : d) {
    if (params_.family == Family::Seq) {
      ++l;
      if (l > params_.index_bound) throw WindowError("dual letter X" + std::to_string(l) + " beyond the index bound");
    } else {
      l = l ^ 1;
    }
  }
  return d;
}

ObjectId DiagramCategory::dual(ObjectId x) const { return require_word(dual_word(words_.at(x))); }

SparseVec DiagramCategory::ev(ObjectId x) const {
  const Word& w = words_.at(x);
  const unsigned n = static_cast<unsigned>(w.size());
  PairingDiagram d;
  d.source = dual_word(w);
  d.source.insert(d.source.end(), w.begin(), w.end());
  for (unsigned k = 0; k < n; ++k) d.pairs.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(2 * n - 1 - k)});
  std::sort(d.pairs.begin(), d.pairs.end());
  if (params_.family == Family::EN) d.dots.assign(n, 0);
  return {{static_cast<std::uint32_t>(basis_index(d)), Scalar::one(params_.field)}};
}

SparseVec DiagramCategory::co(ObjectId x) const {
  const Word& w = words_.at(x);
  const unsigned n = static_cast<unsigned>(w.size());
  PairingDiagram d;
  d.target = w;
  Word dw = dual_word(w);
  d.target.insert(d.target.end(), dw.begin(), dw.end());
  for (unsigned k = 0; k < n; ++k) d.pairs.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(2 * n - 1 - k)});
  std::sort(d.pairs.begin(), d.pairs.end());
  if (params_.family == Family::EN) d.dots.assign(n, 0);
  return {{static_cast<std::uint32_t>(basis_index(d)), Scalar::one(params_.field)}};
}

SparseVec DiagramCategory::braiding(ObjectId x, ObjectId y) const {
  if (params_.family == Family::Seq) throw MissingData("Seq has no braiding");
  const Word &a = words_.at(x), &b = words_.at(y);
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  std::vector<unsigned> perm;
  for (unsigned k = 0; k < b.size(); ++k) perm.push_back(static_cast<unsigned>(a.size()) + k);
  for (unsigned k = 0; k < a.size(); ++k) perm.push_back(k);
  PairingDiagram d = permutation_diagram(w, perm);
  if (params_.family == Family::EN) d.dots.assign(d.pairs.size(), 0);
  return {{static_cast<std::uint32_t>(basis_index(d)), Scalar::one(params_.field)}};
}

PairingDiagram permutation_diagram(const Word& w, const std::vector<unsigned>& perm) {
  if (perm.size() != w.size()) throw ShapeError("permutation length mismatch");
  PairingDiagram d;
  d.source = w;
  for (unsigned k = 0; k < perm.size(); ++k) d.target.push_back(w.at(perm[k]));
  const unsigned s = static_cast<unsigned>(w.size());
  for (unsigned k = 0; k < perm.size(); ++k) d.pairs.push_back({static_cast<std::uint8_t>(perm[k]), static_cast<std::uint8_t>(s + k)});
  std::sort(d.pairs.begin(), d.pairs.end());
  return d;
}

namespace {

DiagramParams base_params(Family fam, const FieldSpec& f, unsigned max_len) {
  DiagramParams p;
  p.family = fam;
  p.field = f;
  p.delta = Scalar::zero(f);
  p.t = Scalar::zero(f);
  p.max_len = max_len;
  return p;
}

}  // namespace

std::unique_ptr<DiagramCategory> build_OB(const Scalar& delta, unsigned max_len) {
  DiagramParams p = base_params(Family::OB, delta.field(), max_len);
  p.delta = delta;
  return std::make_unique<DiagramCategory>(p);
}

std::unique_ptr<DiagramCategory> build_MO(const Scalar& delta, const Scalar& t, unsigned max_len) {
  require_same_field(delta.field(), t.field());
  DiagramParams p = base_params(Family::MO, delta.field(), max_len);
  p.delta = delta;
  p.t = t;
  return std::make_unique<DiagramCategory>(p);
}

std::unique_ptr<DiagramCategory> build_EN(const std::vector<Scalar>& deltas, unsigned max_len, unsigned max_dots) {
  if (deltas.empty()) throw Error("EN needs at least δ_0");
  DiagramParams p = base_params(Family::EN, deltas[0].field(), max_len);
  p.deltas = deltas;
  p.max_dots = max_dots;
  return std::make_unique<DiagramCategory>(p);
}

std::unique_ptr<DiagramCategory> build_Seq(const FieldSpec& f, unsigned max_len, int index_bound) {
  DiagramParams p = base_params(Family::Seq, f, max_len);
  p.index_bound = index_bound;
  return std::make_unique<DiagramCategory>(p);
}

Morphism mu_morphism(const DiagramCategory& mo) {
  if (mo.family() != Family::MO) throw Error("μ lives in MO");
  return mo.diagram_morphism(PairingDiagram{{0}, {2}, {{0, 1}}, {}});
}

Morphism dot_morphism(const DiagramCategory& en) {
  if (en.family() != Family::EN) throw Error("ε lives in EN");
  return en.diagram_morphism(PairingDiagram{{0}, {0}, {{0, 1}}, {1}});
}

Morphism iota_morphism(const DiagramCategory& seq) {
  if (seq.family() != Family::Seq) throw Error("ι lives in Seq");
  PairingDiagram co{{}, {0, 1}, {{0, 1}}, {}};
  PairingDiagram mid{{0, 2, 1, 1}, {0, 1}, {{0, 4}, {1, 2}, {3, 5}}, {}};
  Morphism a = seq.diagram_morphism(co), b = seq.diagram_morphism(mid);
  return join_sources({a, b});
}

Morphism frobenius_test_morphism(const DiagramCategory& ob, unsigned p) {
  if (ob.family() != Family::OB) throw Error("the Frobenius test morphism lives in OB");
  if (p < 2) throw Error("the Frobenius test morphism needs p >= 2");
  Word x0(p, 1);
  x0.insert(x0.end(), p, 0);
  ObjectId x = ob.require_word(x0);
  Morphism id = Morphism::identity(ob, {x});
  std::vector<Morphism> comps;
  for (unsigned block = 0; block < 2; ++block)
    for (unsigned i = 0; i + 1 < p; ++i) {
      std::vector<unsigned> perm(2 * p);
      for (unsigned k = 0; k < 2 * p; ++k) perm[k] = k;
      std::swap(perm[block * p + i], perm[block * p + i + 1]);
      comps.push_back(id - ob.diagram_morphism(permutation_diagram(x0, perm)));
    }
  return join_targets(comps);
}

}  // namespace hk::diagrams
