#include "repalg/rep_algebra.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::algebra;

TEST(RepAlgebra, VariableIndexing) {
  AlgebraContext ctx(3, 2, 2);
  EXPECT_EQ(ctx.nvars(), 16u);
  EXPECT_EQ(ctx.var(1, 1, 1), 0u);
  EXPECT_EQ(ctx.var(3, 2, 1), 7u);
  EXPECT_EQ(ctx.var(1, 1, 2), 8u);
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) {
    const poly::VarId id = poly::algebra_var(v, 3);
    EXPECT_EQ(ctx.var(id.i, id.j, id.l), v);
  }
}

TEST(RepAlgebra, EliminatedEntryHasDeterminantOne) {
  for (int m : {2, 3, 4}) {
    AlgebraContext ctx(m, 1, 4);
    EXPECT_EQ(det(ctx.generator_matrix(1)), ctx.one());
    EXPECT_EQ(ctx.generator_matrix(1) * ctx.generator_inverse(1), PolyMatrix::identity(m, ctx.space()));
  }
}

TEST(RepAlgebra, SmmForSL2) {
  // (1 + a)(1 + d) - b c = 1 gives d = (1 + b c)/(1 + a) - 1.
  AlgebraContext ctx(2, 1, 3);
  const TruncPoly a = ctx.s(1, 1, 1), b = ctx.s(1, 2, 1), c = ctx.s(2, 1, 1);
  const TruncPoly expected = (ctx.one() + b * c) * poly::inverse_of_unit(ctx.one() + a) - ctx.one();
  EXPECT_EQ(ctx.smm_polynomial(1), expected);
}

TEST(RepAlgebra, DeterminantMethodsAgree) {
  AlgebraContext ctx(3, 2, 3);
  words::Rng rng(8);
  for (int r = 0; r < 10; ++r) {
    const PolyMatrix a = ctx.word_matrix(words::random_word(rng, 2, 5));
    EXPECT_EQ(det_cofactor(a), det_elimination(a));
    EXPECT_EQ(adjugate_cofactor(a), adjugate_elimination(a));
  }
}

TEST(RepAlgebra, DimensionCounts) {
  EXPECT_EQ(dim_Tk(2, 2, 2), 21u);
  for (int m : {2, 3})
    for (int n : {1, 2, 3})
      for (int k = 1; k <= 3; ++k) {
        AlgebraContext ctx(m, n, 3);
        EXPECT_EQ(ctx.basis_Tk(k).size(), dim_Tk(m, n, k));
        EXPECT_EQ(dim_symmetric_sum(m, n, k), dim_Tk(m, n, k));
        EXPECT_EQ(ctx.basis_Tk_prime(k).size(), dim_Tk(m, n, k));
      }
}

TEST(RepAlgebra, PrimeBasisIsABasis) {
  for (int m : {2, 3}) {
    AlgebraContext ctx(m, 2, 3);
    for (int k = 1; k <= 3; ++k) {
      const qla::QMatrix c = tk_prime_change_of_basis(ctx, k);
      EXPECT_EQ(qla::rank(c), c.cols()) << "m=" << m << " k=" << k;
    }
  }
}

TEST(RepAlgebra, CommutatorEntriesStartInDegreeTwo) {
  AlgebraContext ctx(2, 2, 3);
  const words::Word c = words::parse_word("[x1,x2]", 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_GE(ctx.s_entry(c, i, j).min_degree(), 2);
  EXPECT_EQ(ctx.s_entry(c, 1, 2).min_degree(), 2);
}

TEST(RepAlgebra, CoordsRoundTrip) {
  AlgebraContext ctx(2, 2, 3);
  const TruncPoly f = ctx.s_entry(words::parse_word("[x1,x2] x1", 2), 1, 2);
  EXPECT_THROW(ctx.coords(f, 2), std::domain_error);
  const TruncPoly c = ctx.s_entry(words::parse_word("[x1,x2]", 2), 1, 2);
  const GradedVec g = ctx.coords(c, 2);
  EXPECT_EQ(g.degree, 2);
  EXPECT_EQ(g.part, poly::graded_part(c, 2));
  EXPECT_THROW(BasisIndex(ctx.basis_Tk(1)).position(ctx.basis_Tk(2).front()), std::out_of_range);
}

TEST(RepAlgebra, RejectsBadInput) {
  EXPECT_THROW(AlgebraContext(1, 2, 2), std::invalid_argument);
  AlgebraContext ctx(2, 2, 2);
  EXPECT_THROW(ctx.word_matrix(words::parse_word("x3", 3)), std::invalid_argument);
}
