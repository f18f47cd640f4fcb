#include "repalg/filtration.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::filtration;

namespace {

// sum_k s_pk(x_a) s_kq(x_b) in degree 2.
TruncPoly product_entry(const AlgebraContext& ctx, int p, int q, int a, int b) {
  TruncPoly r = ctx.zero();
  for (int k = 1; k <= ctx.m(); ++k) r += ctx.s(p, k, a) * ctx.s(k, q, b);
  return poly::graded_part(r, 2);
}

}  // namespace

TEST(Filtration, EtaOfKijIsACommutatorForm) {
  AlgebraContext ctx(2, 2, 2);
  const EtaMatrix e = eta_k(ctx, words::magnus_Kij(1, 2, 2), 1);
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; q <= 2; ++q) {
      if (p == 2 && q == 2) continue;
      EXPECT_EQ(e.columns[ctx.var(p, q, 1)], product_entry(ctx, p, q, 1, 2) - product_entry(ctx, p, q, 2, 1));
      EXPECT_TRUE(e.columns[ctx.var(p, q, 2)].is_zero());
    }
  EXPECT_EQ(eta_k_left(ctx, words::magnus_Kij(1, 2, 2), 1), -e);
}

TEST(Filtration, MembershipAndErrors) {
  AlgebraContext ctx(2, 3, 3);
  EXPECT_TRUE(is_in_D(ctx, words::AutPair::identity(3), 2));
  EXPECT_TRUE(is_in_D(ctx, words::magnus_Kijl(1, 2, 3, 3), 1));
  EXPECT_FALSE(is_in_D(ctx, words::nielsen('U', 3), 1));
  EXPECT_THROW(eta_k(ctx, words::nielsen('U', 3), 1), std::domain_error);
  EXPECT_THROW(is_in_D(ctx, words::magnus_Kij(1, 2, 3), 3), std::invalid_argument);
  EXPECT_TRUE(eta_k(ctx, words::AutPair::identity(3), 1).is_zero());
}

TEST(Filtration, EtaIsAdditiveOnD1) {
  AlgebraContext ctx(2, 3, 2);
  words::Rng rng(41);
  for (int r = 0; r < 15; ++r) {
    const auto a = words::to_aut(words::random_aut_word(rng, 3, 3, "K"), 3);
    const auto b = words::to_aut(words::random_aut_word(rng, 3, 3, "K"), 3);
    const EtaMatrix sum = eta_k(ctx, a * b, 1);
    const EtaMatrix ea = eta_k(ctx, a, 1), eb = eta_k(ctx, b, 1);
    for (std::size_t v = 0; v < sum.columns.size(); ++v) EXPECT_EQ(sum.columns[v], ea.columns[v] + eb.columns[v]);
  }
}

TEST(Filtration, Tau1) {
  const Tau1Value t = tau1(words::magnus_Kij(2, 1, 3));
  qla::QMatrix e(3, 3);
  e.at(wedge_index(1, 2, 3), 1) = -1;
  EXPECT_EQ(t.matrix, e);
  EXPECT_TRUE(is_IA(words::magnus_Kijl(1, 2, 3, 3)));
  EXPECT_FALSE(is_IA(words::nielsen('P', 3)));
  EXPECT_THROW(tau1(words::nielsen('S', 3)), std::domain_error);
  EXPECT_EQ(wedge_index(1, 2, 4), 0u);
  EXPECT_EQ(wedge_index(3, 4, 4), 5u);
}

TEST(Filtration, Tau1IsAHomomorphism) {
  words::Rng rng(42);
  for (int r = 0; r < 20; ++r) {
    const auto a = words::to_aut(words::random_aut_word(rng, 4, 3, "K"), 4);
    const auto b = words::to_aut(words::random_aut_word(rng, 4, 3, "K"), 4);
    EXPECT_EQ(tau1(a * b).matrix, tau1(a).matrix + tau1(b).matrix);
  }
}
