#include <functional>
#include <sstream>

#include "hk/diagrams.hpp"

namespace hk::diagrams {

VectorFunctor::VectorFunctor(const DiagramCategory& c, std::size_t n, std::size_t m, Matrix mu, Matrix endo)
    : cat_(&c), n_(n), m_(m), mu_(std::move(mu)), endo_(std::move(endo)) {
  const FieldSpec& f = c.field();
  if (c.family() == Family::Seq) throw Error("no vector functor on Seq");
  if (c.family() == Family::MO) {
    if (mu_.rows() != m_ || mu_.cols() != n_) throw ShapeError("MO vector functor needs an m x n matrix for μ");
    require_same_field(f, mu_.field());
  }
  if (c.family() == Family::EN) {
    if (endo_.rows() != n_ || endo_.cols() != n_) throw ShapeError("EN vector functor needs an n x n matrix for the dot");
    require_same_field(f, endo_.field());
  }
}

std::string VectorFunctor::name() const {
  std::ostringstream os;
  os << "tensor contraction V -> k^" << n_;
  if (cat_->family() == Family::MO) os << ", W -> k^" << m_;
  return os.str();
}

std::size_t VectorFunctor::letter_dim(Letter l) const { return l >= 2 ? m_ : n_; }

std::size_t VectorFunctor::dim(ObjectId x) const {
  std::size_t d = 1;
  for (Letter l : cat_->word(x)) d *= letter_dim(l);
  return d;
}

Matrix VectorFunctor::diagram_image(const PairingDiagram& d) const {
  const FieldSpec& f = cat_->field();
  const unsigned s = static_cast<unsigned>(d.source.size());
  const unsigned total = static_cast<unsigned>(d.source.size() + d.target.size());
  auto letter = [&](unsigned pos) { return pos < s ? d.source[pos] : d.target[pos - s]; };
  auto up = [](Letter l) { return l == 0 || l == 2; };
  // Per pair: (from position, to position, strand matrix S[to][from]).
  struct Strand {
    unsigned from, to;
    Matrix m;
  };
  std::vector<Strand> strands;
  std::vector<Matrix> powers{Matrix::identity(f, n_)};
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    unsigned a = d.pairs[k].first, b = d.pairs[k].second;
    auto is_from = [&](unsigned pos) { return (pos < s) == up(letter(pos)); };
    unsigned from = is_from(a) ? a : b, to = from == a ? b : a;
    if (is_from(to) || !is_from(from)) throw Error("strand without a consistent orientation");
    Letter lf = letter(from), lt = letter(to);
    Matrix m;
    if (cat_->family() == Family::MO && (lf >= 2) != (lt >= 2)) {
      m = mu_;
    } else if (cat_->family() == Family::EN) {
      unsigned dots = d.dots[k];
      while (powers.size() <= dots) powers.push_back(powers.back() * endo_);
      m = powers[dots];
    } else {
      m = Matrix::identity(f, letter_dim(lf));
    }
    strands.push_back({from, to, std::move(m)});
  }
  std::size_t rows = 1, cols = 1;
  for (Letter l : d.target) rows *= letter_dim(l);
  for (Letter l : d.source) cols *= letter_dim(l);
  Matrix out(f, rows, cols);
  std::vector<std::size_t> digit(total, 0);
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& acc) {
    if (k == strands.size()) {
      std::size_t i = 0, j = 0;
      for (unsigned p = 0; p < s; ++p) j = j * letter_dim(letter(p)) + digit[p];
      for (unsigned p = s; p < total; ++p) i = i * letter_dim(letter(p)) + digit[p];
      out.add_to(i, j, acc);
      return;
    }
    const Strand& st = strands[k];
    for (std::size_t a = 0; a < st.m.rows(); ++a)
      for (std::size_t b = 0; b < st.m.cols(); ++b) {
        if (st.m.entry_is_zero(a, b)) continue;
        digit[st.to] = a;
        digit[st.from] = b;
        rec(k + 1, acc * st.m.at(a, b));
      }
  };
  rec(0, Scalar::one(f));
  return out;
}

Matrix VectorFunctor::basis_image(ObjectId s, ObjectId t, std::size_t i) const {
  return diagram_image(cat_->hom_basis(s, t).at(i));
}

}  // namespace hk::diagrams
