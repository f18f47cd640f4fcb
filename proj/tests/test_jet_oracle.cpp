#include "repalg/jet_oracle.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::jet;

TEST(JetOracle, RepresentationsAreInSL) {
  AlgebraContext ctx(3, 2, 3);
  for (const JetRep& rho : {random_jet_rep(ctx, 1, 2, 3), commuting_jet_rep(ctx, 2, 3)}) {
    const TruncPoly one = TruncPoly::constant(rho.space, 1);
    for (const PolyMatrix& a : rho.mats) {
      EXPECT_EQ(algebra::det(a), one);
      EXPECT_EQ(a * unipotent_inverse(a), PolyMatrix::identity(3, rho.space));
    }
  }
}

TEST(JetOracle, CommutingRepsCommute) {
  AlgebraContext ctx(3, 3, 3);
  const JetRep rho = commuting_jet_rep(ctx, 3, 3);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) EXPECT_EQ(rho.image(a) * rho.image(b), rho.image(b) * rho.image(a));
}

TEST(JetOracle, EvaluateMatchesProduct) {
  AlgebraContext ctx(2, 3, 3);
  const JetRep rho = random_jet_rep(ctx, 4, 1, 3);
  const TruncPoly one = TruncPoly::constant(rho.space, 1);
  words::Rng rng(71);
  for (int r = 0; r < 20; ++r) {
    const words::Word w = words::random_word(rng, 3, 6);
    const PolyMatrix p = jet_word_product(rho, w);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        EXPECT_EQ(evaluate(ctx.s_entry(w, i, j), rho), i == j ? p.at(i, j) - one : p.at(i, j));
  }
}

TEST(JetOracle, TrivialRepKillsTheIdeal) {
  AlgebraContext ctx(2, 2, 3);
  const JetRep rho = trivial_jet_rep(ctx, 2, 3);
  EXPECT_TRUE(evaluate(ctx.s_entry(words::parse_word("x1 x2^-1", 2), 1, 2), rho).is_zero());
}

TEST(JetOracle, EvaluateTruncatesAtSmallerCap) {
  AlgebraContext ctx(2, 2, 3);
  const JetRep rho = random_jet_rep(ctx, 5, 1, 2);
  const TruncPoly f = ctx.s_entry(words::parse_word("[x1,x2]", 2), 1, 2);
  EXPECT_EQ(evaluate(f, rho).cap(), 2);
  AlgebraContext other(3, 2, 3);
  EXPECT_THROW(evaluate(other.s(1, 1, 1), rho), std::invalid_argument);
}

TEST(JetOracle, IndependenceOfT2) {
  AlgebraContext ctx(2, 2, 2);
  const RankReport r = tk_independence(ctx, 2, 9);
  EXPECT_TRUE(r.full());
  EXPECT_EQ(r.expected, 21u);
  EXPECT_GE(r.rows, r.expected);
}

TEST(JetOracle, DependentFamilyIsDetected) {
  AlgebraContext ctx(2, 2, 2);
  std::vector<TruncPoly> fs;
  for (const poly::Monomial& mono : ctx.basis_Tk(2)) fs.push_back(TruncPoly::monomial(ctx.space(), mono, 1));
  fs.push_back(fs[0] + fs[1]);
  const std::size_t r = stacked_rank(fs, 2, 40, [&](std::uint64_t s) { return random_jet_rep(ctx, s, 1, 2); }, 3);
  EXPECT_EQ(r, 21u);
}
