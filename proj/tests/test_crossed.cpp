#include "repalg/crossed.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::crossed;

namespace {

TruncPoly bracket(const AlgebraContext& ctx, int i, int j, int a, int b) {
  TruncPoly r = ctx.zero();
  for (int k = 1; k <= ctx.m(); ++k) r += ctx.s(i, k, a) * ctx.s(k, j, b);
  return poly::graded_part(r, 2);
}

words::AutWord token(char g) { return {words::AutToken{g, {}, 1}}; }

}  // namespace

TEST(Crossed, ThetaOfS) {
  AlgebraContext ctx(2, 2, 2);
  const Gr12Map th = theta(ctx, words::nielsen('S', 2));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (i == 2 && j == 2) continue;
      EXPECT_EQ(th.columns[ctx.var(i, j, 1)], -bracket(ctx, i, j, 1, 1));
      EXPECT_TRUE(th.columns[ctx.var(i, j, 2)].is_zero());
    }
}

TEST(Crossed, PermutationsHaveZeroTheta) {
  for (int n : {2, 3}) {
    AlgebraContext ctx(3, n, 2);
    EXPECT_TRUE(theta(ctx, words::nielsen('P', n)).is_zero());
    EXPECT_TRUE(theta(ctx, words::nielsen('Q', n)).is_zero());
  }
}

TEST(Crossed, SectionAndInverse) {
  AlgebraContext ctx(2, 2, 3);
  const J3Auto r = action::rho_k(ctx, words::nielsen('U', 2), 3);
  EXPECT_EQ(compose(r, inverse(ctx, r)), J3Auto::identity(ctx, 3));
  const J3Auto s = section(ctx, degree1_block(ctx, r));
  EXPECT_TRUE(degree2_part(s).is_zero());
  EXPECT_EQ(degree1_block(ctx, s), degree1_block(ctx, r));
  EXPECT_THROW(section(ctx, qla::QMatrix(ctx.nvars(), ctx.nvars())), std::domain_error);
}

TEST(Crossed, CocycleLawOnRandomPairs) {
  AlgebraContext ctx(2, 3, 2);
  words::Rng rng(51);
  for (int r = 0; r < 30; ++r) {
    const auto s = words::to_aut(words::random_aut_word(rng, 3, 3, "PQSUK"), 3);
    const auto t = words::to_aut(words::random_aut_word(rng, 3, 3, "PQSUK"), 3);
    EXPECT_EQ(theta(ctx, s * t), theta(ctx, s) + act_on_hom(ctx, s, theta(ctx, t)));
  }
}

TEST(Crossed, ActionOnHomIsAnAction) {
  AlgebraContext ctx(2, 2, 2);
  const Gr12Map phi = theta(ctx, words::nielsen('U', 2));
  const auto a = words::nielsen('S', 2), b = words::nielsen('P', 2);
  EXPECT_EQ(act_on_hom(ctx, a * b, phi), act_on_hom(ctx, a, act_on_hom(ctx, b, phi)));
  EXPECT_EQ(act_on_hom(ctx, words::AutPair::identity(2), phi), phi);
}

TEST(Crossed, GeneratorTables) {
  for (int m : {2, 3})
    for (int n : {2, 3}) {
      AlgebraContext ctx(m, n, 2);
      LambdaMap fu = LambdaMap::zero(n);
      fu.mat.at(0, 0) = -1;  // -x1* (x) x1^x2
      EXPECT_EQ(project_f1(ctx, theta(ctx, words::nielsen('U', n))), fu);
      EXPECT_EQ(fK_value(token('U'), n), fu);
      for (char g : {'P', 'Q', 'S'}) {
        EXPECT_EQ(project_f1(ctx, theta(ctx, words::nielsen(g, n))), LambdaMap::zero(n));
        EXPECT_EQ(fK_value(token(g), n), LambdaMap::zero(n));
      }
      // f_2 = delta_x - f_M on generators.
      EXPECT_EQ(project_f2(ctx, theta(ctx, words::nielsen('S', n))), -HQVec::basis(n, 1));
      EXPECT_EQ(project_f2(ctx, theta(ctx, words::nielsen('U', n))), -HQVec::basis(n, 2));
      EXPECT_EQ(project_f2(ctx, theta(ctx, words::nielsen('P', n))), HQVec::zero(n));
    }
}

TEST(Crossed, PrincipalCocycle) {
  const int n = 3;
  EXPECT_EQ(delta_x(words::nielsen('S', n)), -HQVec::basis(n, 1) - HQVec::basis(n, 1));
  EXPECT_EQ(delta_x(words::nielsen('U', n)), -HQVec::basis(n, 2));
  words::Rng rng(52);
  for (int r = 0; r < 30; ++r) {
    const auto s = words::to_aut(words::random_aut_word(rng, n, 4, "PQSU"), n);
    const auto t = words::to_aut(words::random_aut_word(rng, n, 4, "PQSU"), n);
    EXPECT_EQ(delta_x(s * t), delta_x(s) + act(s, delta_x(t)));
  }
}

TEST(Crossed, CocycleExtensionOfFM) {
  const int n = 2;
  words::Rng rng(53);
  const std::function<HQVec(const words::AutWord&)> f = [&](const words::AutWord& w) { return fM_value(w, n); };
  const std::function<HQVec(const words::AutPair&, const HQVec&)> a = [](const words::AutPair& g, const HQVec& v) {
    return act(g, v);
  };
  for (int r = 0; r < 30; ++r) {
    const words::AutWord s = words::random_aut_word(rng, n, 3, "PQSU");
    const words::AutWord t = words::random_aut_word(rng, n, 3, "PQSU");
    EXPECT_TRUE(verify_cocycle(f, s, t, a, n));
  }
  EXPECT_THROW(fK_value(words::parse_aut_word("K12"), 2), std::invalid_argument);
}

TEST(Crossed, TextForms) {
  EXPECT_EQ(to_string(-HQVec::basis(3, 1) + HQVec::basis(3, 3)), "-1 x1 + 1 x3");
  EXPECT_EQ(to_string(HQVec::zero(2)), "0");
}
