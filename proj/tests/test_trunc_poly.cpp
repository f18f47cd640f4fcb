#include "repalg/trunc_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace repalg;
using namespace repalg::poly;

namespace {

const PolySpace kSpace{Namespace::Algebra, 6, 4};

TruncPoly random_poly(std::mt19937_64& rng, const PolySpace& sp, bool ideal) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(ideal ? 1 : 0, sp.cap), var(0, static_cast<int>(sp.nvars) - 1);
  std::vector<Term> ts;
  for (int t = 0; t < 5; ++t) {
    std::vector<std::uint32_t> vs;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) vs.push_back(static_cast<std::uint32_t>(var(rng)));
    ts.push_back({Monomial::from_vars(vs), Rational(coef(rng))});
  }
  return TruncPoly::from_terms(sp, ts);
}

}  // namespace

TEST(TruncPoly, RingLaws) {
  std::mt19937_64 rng(21);
  for (int r = 0; r < 100; ++r) {
    const TruncPoly a = random_poly(rng, kSpace, false), b = random_poly(rng, kSpace, false),
                    c = random_poly(rng, kSpace, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(TruncPoly, TruncatesAboveCap) {
  const TruncPoly x = TruncPoly::variable(kSpace, 0);
  TruncPoly p = TruncPoly::constant(kSpace, 1);
  for (int i = 0; i < 4; ++i) p *= x;
  EXPECT_EQ(p.max_degree(), 4);
  EXPECT_TRUE((p * x).is_zero());
  EXPECT_EQ(p.with_cap(3), TruncPoly(PolySpace{Namespace::Algebra, 6, 3}));
}

TEST(TruncPoly, InverseOfUnit) {
  std::mt19937_64 rng(22);
  for (int r = 0; r < 50; ++r) {
    const TruncPoly u = TruncPoly::constant(kSpace, Rational(r % 3 + 1)) + random_poly(rng, kSpace, true);
    EXPECT_EQ(u * inverse_of_unit(u), TruncPoly::constant(kSpace, 1));
  }
  EXPECT_THROW(inverse_of_unit(TruncPoly::variable(kSpace, 1)), std::domain_error);
}

TEST(TruncPoly, SubstitutionIsARingMap) {
  std::mt19937_64 rng(23);
  const PolySpace target{Namespace::Jet, 3, 4};
  std::vector<TruncPoly> images;
  for (std::uint32_t v = 0; v < kSpace.nvars; ++v) images.push_back(random_poly(rng, target, true));
  for (int r = 0; r < 30; ++r) {
    const TruncPoly a = random_poly(rng, kSpace, false), b = random_poly(rng, kSpace, false);
    EXPECT_EQ(substitute(a * b, images), substitute(a, images) * substitute(b, images));
    EXPECT_EQ(substitute(a + b, images), substitute(a, images) + substitute(b, images));
  }
  images[0] = TruncPoly::constant(target, 1);
  EXPECT_THROW(substitute(TruncPoly::variable(kSpace, 0), images), std::domain_error);
}

TEST(TruncPoly, GradedPartsAndDegrees) {
  std::mt19937_64 rng(24);
  const TruncPoly a = random_poly(rng, kSpace, false);
  TruncPoly sum(kSpace);
  for (int k = 0; k <= kSpace.cap; ++k) sum += graded_part(a, k);
  EXPECT_EQ(sum, a);
  EXPECT_EQ(TruncPoly(kSpace).min_degree(), kInfiniteDegree);
}

TEST(TruncPoly, CanonicalText) {
  const PolySpace sp{Namespace::Algebra, 3, 3};
  const TruncPoly f = TruncPoly::variable(sp, 0) * TruncPoly::variable(sp, 1) - TruncPoly::variable(sp, 2);
  EXPECT_EQ(f.to_string(algebra_namer(2)), "-1 s(2,1;x1) + 1 s(1,1;x1)*s(1,2;x1)");
  EXPECT_EQ(TruncPoly(sp).to_string(algebra_namer(2)), "0");
}
