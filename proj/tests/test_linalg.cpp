#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "loophecke/linalg.hpp"

namespace {

using lh::Matrix;
using lh::Rational;
using lh::SpanBasis;

const Rational kQ0(0);
const Rational kQ1(1);

Matrix<Rational> ints(const std::vector<std::vector<long>>& rows) {
  return Matrix<Rational>::from_ints(rows, kQ0);
}

std::vector<Rational> vec(const std::vector<long>& v) {
  std::vector<Rational> r;
  for (long x : v) r.push_back(Rational(x));
  return r;
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, long rows, long cols) {
  std::uniform_int_distribution<long> d(-5, 5);
  Matrix<Rational> m(rows, cols, kQ0);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("kronecker identities") {
  auto i2 = Matrix<Rational>::identity(2, kQ0);
  CHECK(lh::kronecker(i2, i2) == Matrix<Rational>::identity(4, kQ0));

  auto d = ints({{1, 0}, {0, -1}});
  auto dd = lh::kronecker(d, d);
  CHECK(dd == ints({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("kronecker spectrum multiplicativity for the Burau block at t=2") {
  // sigma block [[1-t, t], [1, 0]] at t=2 has spectrum {1, -2}; the square
  // tensor has spectrum {1, -2, 4} = {1*1, 1*(-2), (-2)*(-2)}.
  auto b = ints({{-1, 2}, {1, 0}});
  auto bb = lh::kronecker(b, b);
  auto cp = lh::char_poly(bb);
  for (long lam : {1L, -2L, 4L}) CHECK(lh::eval_poly(cp, Rational(lam)).is_zero());
  // full factorization (x-1)(x+2)^2(x-4): eigenvalue -2 occurs twice
  std::vector<Rational> expect = {Rational(16), Rational(-4), Rational(-12),
                                  Rational(-1), Rational(1)};
  CHECK(cp == expect);
}

TEST_CASE("span insertion maintains RREF") {
  SpanBasis<Rational> span(3);
  CHECK_FALSE(span.insert(vec({0, 0, 0})));
  CHECK(span.insert(vec({1, 0, 0})));
  CHECK(span.dim() == 1);
  CHECK(span.insert(vec({0, 2, 0})));
  CHECK_FALSE(span.insert(vec({1, 1, 0})));
  CHECK(span.dim() == 2);
  // normalized pivots
  CHECK(span.rows()[1][1] == kQ1);
  CHECK(span.contains(vec({5, -3, 0})));
  CHECK_FALSE(span.contains(vec({0, 0, 1})));
  CHECK_THROWS_AS(span.insert(vec({1, 0})), lh::DimensionMismatch);
}

TEST_CASE("span reinsertion of basis rows is a no-op") {
  std::mt19937_64 rng(7);
  SpanBasis<Rational> span(6);
  for (int k = 0; k < 10; ++k) {
    auto m = random_matrix(rng, 1, 6);
    span.insert(m.flat());
  }
  auto rows = span.rows();
  auto pivots = span.pivots();
  for (const auto& r : rows) CHECK_FALSE(span.insert(r));
  CHECK(span.rows() == rows);
  CHECK(span.pivots() == pivots);
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    auto m = random_matrix(rng, 4, 6);
    auto ker = lh::kernel_basis(m);
    CHECK(lh::rank(m) + long(ker.size()) == m.cols());
    for (const auto& x : ker) {
      // m x = 0
      for (long i = 0; i < m.rows(); ++i) {
        Rational s(0);
        for (long j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("matrix inverse") {
  auto m = ints({{1, 2}, {3, 5}});
  auto mi = lh::inverse(m);
  CHECK(m * mi == Matrix<Rational>::identity(2, kQ0));
  CHECK_THROWS_AS(lh::inverse(ints({{1, 2}, {2, 4}})), lh::ScalarError);
}

TEST_CASE("trace form radical of textbook algebras") {
  // Full 2x2 matrix algebra: semisimple, radical 0.
  std::vector<Matrix<Rational>> full = {
      ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}}),
      ints({{0, 0}, {1, 0}}), ints({{0, 0}, {0, 1}})};
  CHECK(lh::trace_form_radical(full).dim() == 0);

  // Upper-triangular 2x2 matrices: radical = strictly upper part.
  std::vector<Matrix<Rational>> upper = {
      ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}}), ints({{0, 0}, {0, 1}})};
  auto rad = lh::trace_form_radical(upper);
  CHECK(rad.dim() == 1);
  // the radical coordinate vector selects exactly the nilpotent basis element
  CHECK(rad.rows()[0] == vec({0, 1, 0}));

  // Ideal property: b*r and r*b stay inside the radical subspace.
  Matrix<Rational> r = ints({{0, 1}, {0, 0}});
  for (const auto& b : upper) {
    for (const auto& prod : {b * r, r * b}) {
      // coordinates of prod in the basis: entries (0,0), (0,1), (1,1)
      std::vector<Rational> coords = {prod.at(0, 0), prod.at(0, 1), prod.at(1, 1)};
      bool zero = prod.is_zero();
      CHECK((zero || rad.contains(coords)));
    }
  }

  CHECK_THROWS_AS(lh::trace_form_radical(std::vector<Matrix<Rational>>{}),
                  lh::EmptyBasis);
}

TEST_CASE("subspace product dimensions") {
  std::vector<Matrix<Rational>> full = {
      ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}}),
      ints({{0, 0}, {1, 0}}), ints({{0, 0}, {0, 1}})};
  auto id = Matrix<Rational>::identity(2, kQ0);
  CHECK(lh::subspace_product_dim(id, full, id) == 4);

  auto e = ints({{1, 0}, {0, 0}});
  auto f = ints({{0, 0}, {0, 1}});
  // e * A * f is the one-dimensional corner; e * (f A f) * f with orthogonal
  // central idempotents of a diagonal algebra vanishes.
  std::vector<Matrix<Rational>> diag = {ints({{1, 0}, {0, 0}}), ints({{0, 0}, {0, 1}})};
  CHECK(lh::subspace_product_dim(e, diag, f) == 0);
  CHECK(lh::subspace_product_dim(e, full, f) == 1);
}

TEST_CASE("block matrices respect gradings") {
  // sectors: indices {0,2} -> 0, {1,3} -> 1
  auto g = std::make_shared<lh::Grading>(
      lh::Grading::from_sectors({0, 1, 0, 1}, 2));
  CHECK(g->packed_len == 8);

  auto m = ints({{1, 0, 2, 0}, {0, 3, 0, 4}, {5, 0, 6, 0}, {0, 7, 0, 8}});
  auto bm = lh::BlockMatrix<Rational>::from_dense(m, g);
  CHECK(bm.block(0) == ints({{1, 2}, {5, 6}}));
  CHECK(bm.block(1) == ints({{3, 4}, {7, 8}}));
  CHECK(bm.to_dense() == m);
  CHECK((bm * bm).to_dense() == m * m);
  CHECK(bm.trace() == m.trace());
  CHECK(long(bm.flatten_packed().size()) == g->packed_len);

  auto bad = ints({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(lh::BlockMatrix<Rational>::from_dense(bad, g), lh::GradingViolation);
}

TEST_CASE("kronecker mixed product over GF(p)") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(0, 50);
  lh::GFp proto = lh::GFp::from_long(0, lh::kPrimeA);
  auto rand_gfp = [&](long r, long c) {
    Matrix<lh::GFp> m(r, c, proto);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j) m.at(i, j) = proto.make(d(rng));
    return m;
  };
  for (int iter = 0; iter < 10; ++iter) {
    auto a = rand_gfp(2, 3), b = rand_gfp(3, 2), c = rand_gfp(3, 2), e = rand_gfp(2, 3);
    CHECK(lh::kronecker(a, c) * lh::kronecker(b, e) ==
          lh::kronecker(a * b, c * e));
  }
}
