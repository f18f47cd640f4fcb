#include "repalg/modp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace repalg;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, modp::kPrime - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(Modp, MulInv) {
  std::mt19937_64 rng(1);
  for (std::uint32_t a : random_residues(rng, 200)) {
    if (a == 0) continue;
    EXPECT_EQ(modp::mul(a, modp::inv(a)), 1u);
  }
  EXPECT_EQ(modp::mul(modp::kPrime - 1, modp::kPrime - 1), 1u);
}

TEST(Modp, AxpyKernelsAgree) {
  if (!modp::avx2_available()) GTEST_SKIP() << "no AVX2 on this machine";
  std::mt19937_64 rng(2);
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
    const auto src = random_residues(rng, n);
    auto a = random_residues(rng, n);
    auto b = a;
    const std::uint32_t f = random_residues(rng, 1)[0];
    modp::axpy_scalar(a.data(), src.data(), f, n);
    modp::axpy_avx2(b.data(), src.data(), f, n);
    EXPECT_EQ(a, b) << "n=" << n;
  }
}

TEST(Modp, RankKernelsAgree) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 5 + static_cast<std::size_t>(t), c = 12;
    auto data = random_residues(rng, r * c);
    // Force dependent rows.
    for (std::size_t j = 0; j < c; ++j) data[c + j] = data[j];
    const std::size_t scalar = modp::rank_dense(data, r, c, modp::Kernel::Scalar);
    EXPECT_LE(scalar, r - 1);
    if (modp::avx2_available()) EXPECT_EQ(modp::rank_dense(data, r, c, modp::Kernel::Avx2), scalar);
  }
}

TEST(Modp, DispatchOverride) {
  modp::set_kernel(modp::Kernel::Scalar);
  EXPECT_EQ(modp::active_kernel(), modp::Kernel::Scalar);
  modp::reset_kernel();
  EXPECT_EQ(modp::active_kernel(), modp::avx2_available() ? modp::Kernel::Avx2 : modp::Kernel::Scalar);
}

TEST(Modp, RationalMatrixRank) {
  const qla::QMatrix m{{Rational(1, 2), 1}, {1, 2}};
  EXPECT_EQ(modp::rank(m), std::optional<std::size_t>(1));
  const qla::QMatrix bad{{Rational(1, static_cast<std::int64_t>(modp::kPrime))}};
  EXPECT_FALSE(modp::rank(bad).has_value());
}
