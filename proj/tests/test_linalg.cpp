#include <gtest/gtest.h>

#include <random>
#include <set>

#include "common.hpp"

using namespace gtest_util;

namespace {

// Row space size by enumerating all combinations: |span| = p^rank.
std::size_t brute_rank(const Matrix<GF>& m) {
  const GF& f = m.field();
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coef(m.rows(), 0);
  for (;;) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(coef[r], m.at(r, c)));
    span.insert(v);
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == f.p() - 1) coef[i++] = 0;
    if (i == coef.size()) break;
    ++coef[i];
  }
  std::size_t rk = 0, size = 1;
  while (size < span.size()) {
    size *= f.p();
    ++rk;
  }
  return rk;
}

}  // namespace

TEST(PrimeField, InversesAndNegatives) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    GF f(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 200); ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    }
    EXPECT_EQ(f.from_int(-1), p - 1);
  }
}

TEST(PrimeField, DivisionByZeroThrows) {
  GF f(5);
  EXPECT_THROW(f.inv(0), std::exception);
}

TEST(RationalField, ParsesFractions) {
  RationalField q;
  EXPECT_EQ(q.from_string("6/4"), mpq_class(3, 2));
  EXPECT_EQ(q.from_string("-2"), mpq_class(-2));
  EXPECT_THROW(q.from_string("1/0"), std::exception);
}

TEST(Rank, MatchesRowSpaceEnumerationOverSmallFields) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t = 0; t < 60; ++t) {
      GF f(p);
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      auto m = random_matrix(f, r, c, rng);
      EXPECT_EQ(rank(m), brute_rank(m)) << "p=" << p;
      EXPECT_EQ(rref(m).rank, rank(m));
    }
}

TEST(Rank, Gf2BitRowsOnWideMatrices) {
  // rows longer than one 64-bit word; m and its transpose pack differently
  std::mt19937_64 rng(2);
  GF f(2);
  for (int t = 0; t < 40; ++t) {
    auto m = random_matrix(f, 5 + rng() % 70, 5 + rng() % 140, rng);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    auto ns = nullspace_basis(m);
    EXPECT_EQ(ns.rows() + rank(m), m.cols());
    EXPECT_TRUE(is_zero_vec(f, (m * ns.transpose()).data()));
  }
}

TEST(Rref, IsReducedAndIdempotent) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 7u}) {
    GF f(p);
    for (int t = 0; t < 30; ++t) {
      auto m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
      auto r = rref(m);
      for (std::size_t i = 0; i < r.rank; ++i) {
        EXPECT_EQ(r.reduced.at(i, r.pivots[i]), 1u);
        for (std::size_t k = 0; k < r.reduced.rows(); ++k)
          if (k != i) EXPECT_EQ(r.reduced.at(k, r.pivots[i]), 0u);
      }
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    }
  }
}

TEST(Kernels, RankNullityAndAnnihilation) {
  std::mt19937_64 rng(4);
  RationalField q;
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(q, 1 + rng() % 5, 1 + rng() % 5, rng);
    auto ns = nullspace_basis(m);
    auto lk = left_kernel(m);
    EXPECT_EQ(ns.rows() + rank(m), m.cols());
    EXPECT_EQ(lk.rows() + rank(m), m.rows());
    EXPECT_TRUE(is_zero_vec(q, (m * ns.transpose()).data()));
    EXPECT_TRUE(is_zero_vec(q, (lk * m).data()));
  }
}

TEST(Solve, FindsSolutionsAndDetectsInconsistency) {
  std::mt19937_64 rng(5);
  GF f(3);
  for (int t = 0; t < 40; ++t) {
    auto m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5, rng);
    auto x = random_matrix(f, m.cols(), 2, rng);
    auto b = m * x;
    auto s = solve(m, b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(m * *s, b);
  }
  Matrix<GF> z(f, 2, 2);
  Matrix<GF> b(f, 2, 1);
  b.at(0, 0) = 1;
  EXPECT_FALSE(solve(z, b).has_value());
  EXPECT_THROW(solve(z, Matrix<GF>(f, 3, 1)), DimensionMismatch);
}

TEST(Rational, HilbertMatrixHasFullRank) {
  RationalField q;
  for (std::size_t n = 1; n <= 6; ++n) {
    Matrix<RationalField> h(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h.at(i, j) = mpq_class(1, static_cast<long>(i + j + 1));
    EXPECT_EQ(rank(h), n);
  }
}

TEST(EchelonBasis, CoordinatesReconstructVectors) {
  std::mt19937_64 rng(6);
  for (std::uint32_t p : {2u, 5u}) {
    GF f(p);
    EchelonBasis<GF> eb(f, 12);
    std::vector<Vec<GF>> added;
    for (int t = 0; t < 8; ++t) {
      auto m = random_matrix(f, 1, 12, rng);
      if (eb.add(m.row(0))) added.push_back(m.row_vec(0));
    }
    EXPECT_EQ(eb.matrix().rows(), eb.size());
    // coordinates refer to the rows in insertion order
    Matrix<GF> basis(f, 0, 12);
    for (std::size_t k = 0; k < eb.size(); ++k) basis.append_row(eb.basis_row(k));
    for (const auto& v : added) {
      EXPECT_TRUE(eb.contains(v));
      auto c = eb.coordinates(v);
      EXPECT_EQ(vec_mul(f, c, basis), v);
      EXPECT_TRUE(is_zero_vec(f, eb.reduce(v)));
    }
  }
}

TEST(Matrix, ShapeErrors) {
  GF f(2);
  Matrix<GF> a(f, 2, 3), b(f, 2, 3);
  EXPECT_THROW(a * b, DimensionMismatch);
  EXPECT_THROW(a + Matrix<GF>(f, 3, 3), DimensionMismatch);
  EXPECT_THROW(a + Matrix<GF>(GF(3), 2, 3), FieldMismatch);
}
