#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "fpd/error.hpp"
#include "fpd/spectral.hpp"

using namespace fpd;

namespace {

double eigen_radius(const IntMatrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = static_cast<double>(m(r, c));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  double best = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) best = std::max(best, std::abs(solver.eigenvalues()[i]));
  return best;
}

}  // namespace

TEST(QuadraticSurd, Normalizes) {
  const QuadraticSurd s(1, 1, 8);
  EXPECT_EQ(s.radicand(), 2);
  EXPECT_EQ(s.surd_coefficient(), 2);
  const QuadraticSurd r(1, 3, 4);
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational_part(), 7);
  EXPECT_TRUE(QuadraticSurd(5, 0, 7).is_rational());
  EXPECT_EQ(QuadraticSurd(5, 0, 7), QuadraticSurd(5));
}

TEST(QuadraticSurd, Strings) {
  EXPECT_EQ(QuadraticSurd(3).to_string(), "3");
  EXPECT_EQ(QuadraticSurd(Rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ(QuadraticSurd(2, 1, 5).to_string(), "2 + sqrt(5)");
  EXPECT_EQ(QuadraticSurd(Rational(3, 2), Rational(1, 2), 5).to_string(), "3/2 + 1/2*sqrt(5)");
  EXPECT_NEAR(static_cast<double>(QuadraticSurd(Rational(3, 2), Rational(1, 2), 5).to_long_double()),
              (3 + std::sqrt(5.0)) / 2, 1e-15);
}

TEST(SpectralRadius, ZeroMatrix) {
  const auto rho = spectral_radius(IntMatrix(3, 3));
  EXPECT_EQ(rho.value, 0);
  ASSERT_TRUE(rho.exact);
  EXPECT_EQ(*rho.exact, QuadraticSurd(0));
}

TEST(SpectralRadius, EmptyMatrix) {
  const auto rho = spectral_radius(IntMatrix(0, 0));
  EXPECT_EQ(rho.value, 0);
}

TEST(SpectralRadius, GoldenBlock) {
  const auto rho = spectral_radius(IntMatrix{{1, 1}, {1, 2}});
  ASSERT_TRUE(rho.exact);
  EXPECT_EQ(*rho.exact, QuadraticSurd(Rational(3, 2), Rational(1, 2), 5));
  EXPECT_NEAR(static_cast<double>(rho.value), (3 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(SpectralRadius, TriangularIsMaxDiagonal) {
  const auto rho = spectral_radius(IntMatrix{{2, 5, 1}, {0, 7, 3}, {0, 0, 4}});
  ASSERT_TRUE(rho.exact);
  EXPECT_EQ(*rho.exact, QuadraticSurd(7));
}

TEST(SpectralRadius, LargeCycleIsIterated) {
  const auto rho = spectral_radius(IntMatrix{{0, 1, 0}, {0, 0, 1}, {8, 0, 0}});
  EXPECT_NEAR(static_cast<double>(rho.value), 2.0, 1e-9);
  EXPECT_LE(rho.bound, 1e-10L);
}

TEST(SpectralRadius, MatchesEigenOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 6), entry(0, 3), sparse(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = sparse(rng) == 0 ? entry(rng) : 0;
    const auto rho = spectral_radius(m);
    const double expected = eigen_radius(m);
    EXPECT_NEAR(static_cast<double>(rho.value), expected, 1e-7) << m;
    if (rho.exact)
      EXPECT_NEAR(static_cast<double>(rho.exact->to_long_double()), expected, 1e-7) << m;
  }
}

TEST(SpectralRadius, Errors) {
  EXPECT_THROW(spectral_radius(IntMatrix{{1, -1}, {0, 1}}), ValidationError);
  EXPECT_THROW(spectral_radius(IntMatrix(2, 3)), ValidationError);
  EXPECT_THROW(spectral_radius(IntMatrix{{1}}, 0), ValidationError);
  EXPECT_THROW(spectral_radius(IntMatrix{{1}}, -1e-3L), ValidationError);
}
