#include "repalg/rational.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

using repalg::Rational;

TEST(Rational, LowestTermsAndSign) {
  const Rational a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, OverflowSpillsAndDemotes) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_inline());
  const Rational back = sq / big;
  EXPECT_TRUE(back.is_inline());
  EXPECT_EQ(back, big);
  EXPECT_EQ((sq - sq), Rational(0));
  EXPECT_TRUE((sq - sq).is_inline());
}

TEST(Rational, AgreesWithGmpOnRandomOps) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-(1LL << 40), 1LL << 40);
  for (int r = 0; r < 2000; ++r) {
    const std::int64_t an = d(rng), bn = d(rng);
    std::int64_t ad = d(rng), bd = d(rng);
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 1;
    const Rational a(an, ad), b(bn, bd);
    mpq_class qa(static_cast<long>(an), static_cast<long>(ad)), qb(static_cast<long>(bn), static_cast<long>(bd));
    qa.canonicalize();
    qb.canonicalize();
    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
  }
}

TEST(Rational, ReduceMod) {
  std::uint64_t out = 0;
  ASSERT_TRUE(Rational(1, 2).reduce_mod(7, out));
  EXPECT_EQ(out, 4u);
  EXPECT_FALSE(Rational(1, 7).reduce_mod(7, out));
  ASSERT_TRUE(Rational(-1).reduce_mod(7, out));
  EXPECT_EQ(out, 6u);
}
