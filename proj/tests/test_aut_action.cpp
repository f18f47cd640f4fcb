#include "repalg/aut_action.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::action;

TEST(AutAction, RightActionComposes) {
  algebra::AlgebraContext ctx(2, 2, 3);
  words::Rng rng(31);
  for (int r = 0; r < 20; ++r) {
    const words::AutPair a = words::to_aut(words::random_aut_word(rng, 2, 3, "PQSU"), 2);
    const words::AutPair b = words::to_aut(words::random_aut_word(rng, 2, 3, "PQSU"), 2);
    const TruncPoly f = ctx.s(1, 2, 1) * ctx.s(2, 1, 2) + ctx.s(1, 1, 2);
    EXPECT_EQ(act_right(ctx, (a * b).fwd(), f), act_right(ctx, b.fwd(), act_right(ctx, a.fwd(), f)));
    EXPECT_EQ(act_left(ctx, a * b, f), act_left(ctx, a, act_left(ctx, b, f)));
  }
}

TEST(AutAction, ActionOnGeneratorsMatchesWordMatrix) {
  algebra::AlgebraContext ctx(3, 2, 2);
  const words::AutPair u = words::nielsen('U', 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == 3 && j == 3) continue;
      EXPECT_EQ(act_right(ctx, u.fwd(), ctx.s(i, j, 1)), ctx.s_entry(words::parse_word("x1 x2", 2), i, j));
    }
}

TEST(AutAction, SSigmaNeedsIdealElement) {
  algebra::AlgebraContext ctx(2, 2, 2);
  EXPECT_THROW(s_sigma(ctx, words::nielsen('S', 2).fwd(), ctx.one()), std::domain_error);
}

TEST(AutAction, RhoKIsAHomomorphism) {
  algebra::AlgebraContext ctx(2, 2, 3);
  words::Rng rng(32);
  for (int r = 0; r < 15; ++r) {
    const words::AutPair a = words::to_aut(words::random_aut_word(rng, 2, 3, "PQSU"), 2);
    const words::AutPair b = words::to_aut(words::random_aut_word(rng, 2, 3, "PQSU"), 2);
    for (int k = 2; k <= 4; ++k)
      EXPECT_EQ(rho_k(ctx, a * b, k), compose(rho_k(ctx, a, k), rho_k(ctx, b, k)));
    EXPECT_EQ(compose(rho_k(ctx, a, 3), rho_k(ctx, a.inverse(), 3)), QuotientAuto::identity(ctx, 3));
  }
  EXPECT_THROW(rho_k(ctx, words::nielsen('S', 2), 5), std::invalid_argument);
}

TEST(AutAction, LinearPartOfSwap) {
  algebra::AlgebraContext ctx(2, 2, 2);
  const qla::QMatrix lp = linear_part(ctx, rho_k(ctx, words::nielsen('P', 2), 2));
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) {
    const std::uint32_t w = (v + 3) % 6;
    EXPECT_EQ(lp.at(w, v), Rational(1));
  }
  EXPECT_EQ(qla::rank(lp), 6u);
}
