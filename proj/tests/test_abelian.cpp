#include "repalg/abelian.hpp"

#include <gtest/gtest.h>

using namespace repalg;
using namespace repalg::abelian;

namespace {

const HAlgebraContext& ctx22() {
  static const HAlgebraContext h(2, 2, 3);
  return h;
}

}  // namespace

TEST(Abelian, YCounts) {
  EXPECT_EQ(ctx22().gr2H_dim(), 18u);
  for (int m : {2, 3})
    for (int n : {2, 3}) {
      HAlgebraContext h(m, n, 3);
      EXPECT_EQ(h.gr2H_dim(), gr2H_dim_formula(m, n));
      EXPECT_EQ(h.gr1H_dim(), static_cast<std::size_t>((m * m - 1) * n));
      EXPECT_EQ(h.relation_rank() + h.gr2H_dim(), h.free().basis_Tk(2).size());
    }
  EXPECT_EQ(lambda_multiplicity_counted(3), 20u);
  EXPECT_EQ(index_set_I(2).size(), 3u);
}

TEST(Abelian, Labels) {
  const YElement t{YElement::Kind::T, 1, 2, 2, 1, 1, 2};
  EXPECT_EQ(t.label(), "t(1,2,2,1;1,2)");
  const YElement v{YElement::Kind::V, 1, 1, 1, 1, 1, 2};
  EXPECT_EQ(v.label(), "v(1,1;1,2)");
  EXPECT_THROW(ctx22().y_position(YElement{YElement::Kind::V, 2, 2, 1, 1, 1, 1}), std::out_of_range);
}

TEST(Abelian, ReductionIsAProjection) {
  const HAlgebraContext& h = ctx22();
  words::Rng rng(61);
  for (std::size_t i = 0; i < h.gr2H_dim(); ++i) {
    qla::QVector y(h.gr2H_dim());
    y[i] = Rational(static_cast<std::int64_t>(rng.uniform(1, 5)));
    EXPECT_EQ(h.reduce_to_Y(h.lift(y)), y);
  }
  for (const TruncPoly& r : h.relations_R()) EXPECT_EQ(h.reduce_to_Y(r), qla::QVector(h.gr2H_dim()));
}

TEST(Abelian, BinomialWordMatrixMatchesQuotient) {
  const HAlgebraContext& h = ctx22();
  const AlgebraContext& ctx = h.free();
  words::Rng rng(62);
  for (int r = 0; r < 25; ++r) {
    const words::Word w = words::random_word(rng, 2, 7);
    const algebra::PolyMatrix a = abelian_word_matrix(ctx, words::abelianize(w, 2));
    const algebra::PolyMatrix b = ctx.word_matrix(w);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        EXPECT_EQ(poly::graded_part(a.at(i, j), 1), poly::graded_part(b.at(i, j), 1));
        EXPECT_EQ(h.canonical(poly::graded_part(a.at(i, j), 2)), h.canonical(poly::graded_part(b.at(i, j), 2)))
            << w.to_string();
      }
  }
}

TEST(Abelian, ThetaHOfS) {
  for (int m : {2, 3}) {
    HAlgebraContext h(m, 2, 3);
    qla::QVector expect(h.gr2H_dim());
    expect[h.y_position({YElement::Kind::V, 1, 1, 1, 1, 1, 1})] = -1;
    for (int k = 2; k <= m; ++k) expect[h.y_position({YElement::Kind::U, 1, k, k, 1, 1, 1})] = -1;
    const Gr12Map th = theta_H(h, words::nielsen('S', 2));
    EXPECT_EQ(h.reduce_to_Y(th.columns[h.free().var(1, 1, 1)]), expect);
  }
}

TEST(Abelian, FHTable) {
  const HAlgebraContext& h = ctx22();
  EXPECT_EQ(project_fH(h, theta_H(h, words::nielsen('S', 2))), -crossed::HQVec::basis(2, 1));
  EXPECT_EQ(project_fH(h, theta_H(h, words::nielsen('U', 2))), -crossed::HQVec::basis(2, 2));
  EXPECT_EQ(project_fH(h, theta_H(h, words::nielsen('P', 2))), crossed::HQVec::zero(2));
  EXPECT_EQ(project_fH(h, theta_H(h, words::nielsen('Q', 2))), crossed::HQVec::zero(2));
}

TEST(Abelian, ThetaHCocycleAndRecursion) {
  const HAlgebraContext& h = ctx22();
  words::Rng rng(63);
  for (int r = 0; r < 20; ++r) {
    const words::AutWord sw = words::random_aut_word(rng, 2, 3, "PQSU");
    const words::AutWord tw = words::random_aut_word(rng, 2, 3, "PQSU");
    const auto s = words::to_aut(sw, 2), t = words::to_aut(tw, 2);
    EXPECT_EQ(theta_H(h, s * t), theta_H(h, s) + act_on_hom_H(h, s, theta_H(h, t)));
    EXPECT_EQ(fH_value(h, words::concat(sw, tw)), fH_value(h, sw) + crossed::act(s, fH_value(h, tw)));
  }
}

TEST(Abelian, RejectsBadCap) { EXPECT_THROW(HAlgebraContext(2, 2, 5), std::invalid_argument); }
