#include "repalg/qlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using repalg::Rational;
using namespace repalg::qla;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

// Rank-k matrix as a product of random r x k and k x c factors.
QMatrix low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
}

}  // namespace

TEST(QLinalg, SmallRanks) {
  EXPECT_EQ(rank(QMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(QMatrix{{1, 2}, {3, 4}}), 2u);
  EXPECT_EQ(rank(QMatrix(3, 4)), 0u);
}

TEST(QLinalg, RrefPivots) {
  const RrefResult r = rref(QMatrix{{0, 2, 4}, {1, 1, 1}});
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced, (QMatrix{{1, 0, -1}, {0, 1, 2}}));
}

TEST(QLinalg, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = random_matrix(rng, 5, 5, -4, 4);
    if (rank(m) < 5) continue;
    EXPECT_EQ(m * inverse(m), QMatrix::identity(5));
  }
  EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(QLinalg, SolveAndKernel) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = low_rank(rng, 6, 8, 4);
    const QVector x0 = random_matrix(rng, 8, 1, -5, 5).column(0);
    const QVector b = m * x0;
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size(), 8 - rank(m));
    for (const QVector& v : ker) EXPECT_EQ(m * v, QVector(6));
  }
  EXPECT_FALSE(solve(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2}).has_value());
}

TEST(QLinalg, CertifiedRankMatchesExact) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = static_cast<std::size_t>(t % 7);
    const QMatrix m = low_rank(rng, 7, 9, k);
    EXPECT_EQ(rank_certified(m), rank(m));
    EXPECT_EQ(rank(m.transpose()), rank(m));
  }
}
