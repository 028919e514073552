#include <gtest/gtest.h>

#include <random>

#include "fpd/matrix.hpp"
#include "fpd/prime_field.hpp"

using fpd::F2;
using fpd::F3;
using fpd::Matrix;
using fpd::Rational;
using fpd::RationalMatrix;

namespace {

Rational det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    const Rational term = m(0, c) * det(m.submatrix(rows, cols));
    total += (c % 2 ? -term : term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const RationalMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs)
        if (det(m.submatrix(r, c)) != 0) return k;
  }
  return 0;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), sparse(0, 2);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sparse(rng)) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        m(r, c) = x;
      }
  return m;
}

}  // namespace

TEST(Rank, EmptyMatrixHasRankZero) { EXPECT_EQ(fpd::rank(RationalMatrix(0, 0)), 0u); }

TEST(Rank, IdentityHasFullRank) {
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(fpd::rank(RationalMatrix::identity(k)), k);
}

TEST(Rank, DependentRows) { EXPECT_EQ(fpd::rank(RationalMatrix{{1, 2}, {2, 4}}), 1u); }

TEST(Kernel, IdentityHasTrivialKernel) {
  EXPECT_EQ(fpd::kernel_basis(RationalMatrix::identity(4)).cols(), 0u);
}

TEST(Kernel, ZeroMatrixKernelIsEverything) {
  const auto k = fpd::kernel_basis(RationalMatrix(3, 3));
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(fpd::rank(k), 3u);
}

TEST(Kernel, SingleRowOnes) {
  const auto k = fpd::kernel_basis(RationalMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_NE(k(0, 0), 0);
}

TEST(Kernel, NoRowsGivesIdentity) {
  EXPECT_EQ(fpd::kernel_basis(RationalMatrix(0, 3)), RationalMatrix::identity(3));
}

TEST(Solve, ConsistentAndInconsistent) {
  const RationalMatrix a{{1, 0}, {0, 2}, {0, 0}};
  const auto x = fpd::solve(a, RationalMatrix{{3}, {4}, {0}});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (RationalMatrix{{3}, {4}, {0}}));
  EXPECT_FALSE(fpd::solve(a, RationalMatrix{{0}, {0}, {1}}));
}

TEST(RankProperty, MatchesMinorsOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
    EXPECT_EQ(fpd::rank(m), minor_rank(m)) << m;
  }
}

TEST(RankProperty, RankNullity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, rng() % 6, 1 + rng() % 6);
    const auto k = fpd::kernel_basis(m);
    EXPECT_EQ(fpd::rank(m) + k.cols(), m.cols());
    if (m.rows()) {
      EXPECT_TRUE((m * k).is_zero());
    }
    EXPECT_EQ(fpd::rank(k), k.cols());
  }
}

TEST(RankProperty, InvariantUnderTransposeAndRowPermutation) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    EXPECT_EQ(fpd::rank(m), fpd::rank(m.transpose()));
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(fpd::rank(m), fpd::rank(m.submatrix(rows, cols)));
  }
}

TEST(PrimeField, Arithmetic) {
  EXPECT_EQ(F3(2) + F3(2), F3(1));
  EXPECT_EQ(F3(0) - F3(1), F3(2));
  EXPECT_EQ(F3(2) * F3(2), F3(1));
  EXPECT_EQ(F3(1) / F3(2), F3(2));
  EXPECT_EQ(F2(1) + F2(1), F2(0));
  EXPECT_EQ(F3(-4), F3(2));
}

TEST(PrimeField, RankDependsOnCharacteristic) {
  const Matrix<F2> m2{{1, 1}, {1, -1}};
  const Matrix<F3> m3{{1, 1}, {1, -1}};
  EXPECT_EQ(fpd::rank(m2), 1u);
  EXPECT_EQ(fpd::rank(m3), 2u);
}
