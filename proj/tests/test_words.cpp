#include "repalg/words.hpp"

#include <gtest/gtest.h>

using namespace repalg::words;

namespace {
Word w(const char* s, int n = 4) { return parse_word(s, n); }
}  // namespace

TEST(Words, FreeReduction) {
  EXPECT_EQ(w("x1 x2 x2^-1 x1^-1"), Word());
  EXPECT_EQ(w("x1 x2 x2^-1 x1^-1").to_string(), "1");
  EXPECT_EQ(w("x1^3 x1^-1").to_string(), "x1 x1");
  EXPECT_EQ(w("[x1,x2]"), mul(mul(w("x1"), w("x2")), mul(w("x1^-1"), w("x2^-1"))));
  EXPECT_THROW(parse_word("x5", 4), std::invalid_argument);
  EXPECT_THROW(parse_word("x1 (", 4), std::invalid_argument);
}

TEST(Words, GroupLaws) {
  Rng rng(5);
  for (int r = 0; r < 200; ++r) {
    const Word a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, inv(a)), Word());
    EXPECT_EQ(inv(mul(a, b)), mul(inv(b), inv(a)));
    EXPECT_EQ(parse_word(a.to_string(), 3), a);
  }
}

TEST(Words, AbelianizeCommutatorIsZero) {
  EXPECT_EQ(abelianize(w("[x1,x2] x3^2 x1"), 3), (AbelianVector{1, 0, 2}));
  EXPECT_EQ(abelianize(left_normed(std::vector<Word>{w("x1"), w("x2"), w("x3")}), 3), (AbelianVector{0, 0, 0}));
}

TEST(Words, ComposeIsRightAction) {
  const AutPair s = nielsen('S', 2), u = nielsen('U', 2);
  const Word x = w("x1 x2^-1", 2);
  EXPECT_EQ(apply_endo(compose(s.fwd(), u.fwd()), x), apply_endo(u.fwd(), apply_endo(s.fwd(), x)));
  EXPECT_EQ((s * u).fwd(), compose(s.fwd(), u.fwd()));
}

TEST(Words, NielsenGenerators) {
  const int n = 3;
  EXPECT_EQ(nielsen('P', n).fwd().image(1), w("x2", n));
  EXPECT_EQ(nielsen('Q', n).fwd().image(3), w("x1", n));
  EXPECT_EQ(nielsen('S', n).fwd().image(1), w("x1^-1", n));
  EXPECT_EQ(nielsen('U', n).fwd().image(1), w("x1 x2", n));
  for (char g : {'P', 'Q', 'S', 'U'}) {
    const AutPair a = nielsen(g, n);
    EXPECT_EQ(a * a.inverse(), AutPair::identity(n));
  }
  EXPECT_THROW(nielsen('U', 1), std::invalid_argument);
  EXPECT_THROW(AutPair(nielsen('U', 2).fwd(), nielsen('U', 2).fwd()), std::invalid_argument);
}

TEST(Words, MagnusGenerators) {
  EXPECT_EQ(magnus_Kij(1, 2, 3).fwd().image(1), w("x2^-1 x1 x2", 3));
  EXPECT_EQ(magnus_Kijl(1, 2, 3, 3).fwd().image(1), w("x1 [x2,x3]", 3));
  EXPECT_THROW(magnus_Kij(1, 1, 3), std::invalid_argument);
}

TEST(Words, AutWordParsing) {
  const AutWord a = parse_aut_word("K12 S^-1 U^2 K(1,2,3) id");
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0].indices, (std::vector<int>{1, 2}));
  EXPECT_EQ(a[1].power, -1);
  EXPECT_EQ(a[2].power, 2);
  EXPECT_EQ(to_aut(a, 3) * to_aut(inverse(a), 3), AutPair::identity(3));
  EXPECT_EQ(parse_aut_word(to_string(a)), a);
  EXPECT_THROW(parse_aut_word("Z"), std::invalid_argument);
  EXPECT_TRUE(parse_aut_word("id").empty());
}

TEST(Words, RngIsDeterministic) {
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(random_word(a, 3, 6), random_word(b, 3, 6));
}
