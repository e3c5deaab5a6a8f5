#include <random>

#include "doctest.h"
#include "hk/linalg.hpp"

using namespace hk;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(f, d(rng) * (d(rng) % 2)));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK((Scalar(f7, 3) * Scalar(f7, 5)).mod_value() == 1);
  CHECK(Scalar(f7, 3).inverse() == Scalar(f7, 5));
  CHECK(Scalar(f7, -1).mod_value() == 6);
  CHECK(Scalar::parse(Q, "-3/6") == Scalar(Q, mpq_class(-1, 2)));
  CHECK(Scalar::parse(f7, "1/2") == Scalar(f7, 4));
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(f7, 1), FieldMismatch);
  CHECK_THROWS(Scalar::zero(f7).inverse());
  CHECK(FieldSpec::parse("F3") == FieldSpec::prime(3));
  CHECK(FieldSpec::parse("Q") == Q);
}

TEST_CASE("row_reduce examples") {
  CHECK(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == 1);
  Echelon e = row_reduce(Matrix::identity(Q, 3));
  CHECK(e.rref == Matrix::identity(Q, 3));
  CHECK(e.rank() == 3);
  CHECK(rank(Matrix::from_ints(F2, {{1, 1}, {1, 0}})) == 2);
  CHECK(rank(Matrix::from_ints(F2, {{1, 1}, {1, 1}})) == 1);
  CHECK_THROWS_AS(Matrix::from_ints(Q, {{1}}) * Matrix::from_ints(F2, {{1}}), FieldMismatch);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix(Q, 2, 2)).cols() == 2);
  Matrix k = kernel_basis(Matrix::from_ints(Q, {{0, 1}, {0, 0}}));
  CHECK(k == Matrix::from_ints(Q, {{1}, {0}}));
  Matrix k2 = kernel_basis(Matrix::from_ints(F2, {{1, 1, 0}, {0, 1, 1}}));
  CHECK(k2 == Matrix::from_ints(F2, {{1}, {1}, {1}}));
}

TEST_CASE("homology_mid examples") {
  CHECK(homology_mid(Matrix(Q, 2, 2), Matrix(Q, 2, 2)).dim() == 2);
  Matrix n = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
  CHECK(homology_mid(n, n).dim() == 0);
  CHECK(homology_mid(Matrix(Q, 2, 2), n).dim() == 1);
  Matrix id = Matrix::identity(Q, 2);
  CHECK_THROWS_AS(homology_mid(id, id), NotAComplex);
}

TEST_CASE("empty matrices") {
  Matrix e(Q, 0, 3);
  CHECK(rank(e) == 0);
  CHECK(kernel_basis(e).cols() == 3);
  Matrix e2(Q, 3, 0);
  CHECK(kernel_basis(e2).cols() == 0);
  CHECK(homology_mid(Matrix(Q, 0, 0), Matrix(Q, 0, 0)).dim() == 0);
  CHECK(homology_mid(Matrix(Q, 2, 0), Matrix(Q, 0, 2)).dim() == 2);
}

TEST_CASE("rank-nullity and span properties on seeded matrices") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec& f = trial % 2 ? Q : FieldSpec::prime(trial % 3 ? 3 : 5);
    std::size_t r = rng() % 6, c = rng() % 6;
    Matrix m = random_matrix(f, r, c, rng);
    Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == c);
    if (k.cols()) CHECK((m * k).is_zero());
    // Permuting columns preserves rank; permuting rows preserves the kernel span.
    std::vector<std::size_t> perm(c);
    for (std::size_t j = 0; j < c; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(rank(m.columns(perm)) == rank(m));
    Matrix mt = m.transpose();
    std::vector<std::size_t> rp(r);
    for (std::size_t j = 0; j < r; ++j) rp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    Matrix pm = mt.columns(rp).transpose();
    CHECK(same_span(kernel_basis(pm), k));
    // Two-step homology: g f = 0 by construction g = h (I - f f^+) style: take g with ker g ⊇ im f.
    Matrix fm = random_matrix(f, c, rng() % 4, rng);
    Matrix coker = kernel_basis(fm.transpose()).transpose();  // rows annihilate im f
    SubQuotient h = homology_mid(fm, coker);
    CHECK(h.dim() == kernel_basis(coker).cols() - rank(fm));
    CHECK(h.dim() == 0);
  }
}

TEST_CASE("solve, preimage and subquotients") {
  Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  auto x = solve(a, Matrix::from_ints(Q, {{5}, {6}}));
  REQUIRE(x);
  CHECK(a * *x == Matrix::from_ints(Q, {{5}, {6}}));
  CHECK_FALSE(solve(Matrix::from_ints(Q, {{1, 1}, {1, 1}}), Matrix::from_ints(Q, {{1}, {0}})));
  Matrix p = preimage(Matrix::from_ints(Q, {{0, 1}, {0, 0}}), Matrix(Q, 2, 0));
  CHECK(same_span(p, Matrix::from_ints(Q, {{1}, {0}})));
  SubQuotient sq = make_subquotient(Q, 3, Matrix::identity(Q, 3), Matrix::from_ints(Q, {{1}, {1}, {0}}));
  CHECK(sq.dim() == 2);
  CHECK(sq.is_zero_class(Matrix::from_ints(Q, {{2}, {2}, {0}})));
  CHECK_FALSE(sq.is_zero_class(Matrix::from_ints(Q, {{1}, {0}, {0}})));
  CHECK(span_intersection(Matrix::from_ints(Q, {{1, 0}, {0, 1}, {0, 0}}), Matrix::from_ints(Q, {{1}, {1}, {1}})).cols() ==
        0);
}
