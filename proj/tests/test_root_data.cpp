#include <gtest/gtest.h>

#include "zastava/root_data.hpp"

using namespace zastava;

TEST(RootDatum, A1) {
  RootDatum d = parse_datum("A1");
  EXPECT_EQ(d.cartan(0, 0), 2);
  EXPECT_EQ(d.dcheck(0), 1);
  EXPECT_EQ(d.pairing(0, 0), 2);
}

TEST(RootDatum, A2Pairing) {
  RootDatum d = parse_datum("A2");
  EXPECT_EQ(d.pairing(0, 1), -1);
  EXPECT_EQ(d.cartan(0, 1), -1);
}

TEST(RootDatum, AffineA1) {
  RootDatum d = parse_datum("A1-affine");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.cartan_matrix(), (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  EXPECT_EQ(d.labels(), (std::vector<int>{0, 1}));
}

TEST(RootDatum, InvariantsForAllTypes) {
  for (const char* tag : {"A1", "A2", "A4", "B2", "B3", "C2", "C3", "D4", "D5", "A1-affine", "A3-affine", "B3-affine",
                          "C2-affine", "C3-affine", "D4-affine"}) {
    RootDatum d = parse_datum(tag);
    Scalar min_diag = d.pairing(0, 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_EQ(d.cartan(i, i), 2) << tag;
      EXPECT_EQ(d.pairing(i, i), 2 * d.dcheck(i)) << tag;
      min_diag = std::min(min_diag, d.pairing(i, i));
      for (std::size_t j = 0; j < d.size(); ++j) {
        EXPECT_EQ(d.pairing(i, j), d.pairing(j, i)) << tag;
        EXPECT_EQ(d.pairing(i, j), d.dcheck(i) * d.cartan(i, j)) << tag;
        if (i != j) {
          EXPECT_LE(d.cartan(i, j), 0) << tag;
          EXPECT_EQ(d.cartan(i, j) == 0, d.cartan(j, i) == 0) << tag;
        }
      }
    }
    EXPECT_EQ(min_diag, 2) << tag;
  }
}

// The affine Cartan matrix is singular: the null vector gives the imaginary root.
TEST(RootDatum, AffineCartanIsDegenerate) {
  for (const char* tag : {"A2-affine", "B3-affine", "C3-affine", "D4-affine"}) {
    RootDatum d = parse_datum(tag);
    ScalarMatrix C(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) C(i, j) = d.cartan(i, j);
    EXPECT_EQ(det(C), 0) << tag;
    ScalarMatrix fin(d.size() - 1, d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i)
      for (std::size_t j = 1; j < d.size(); ++j) fin(i - 1, j - 1) = d.cartan(i, j);
    EXPECT_NE(det(fin), 0) << tag;
  }
}

TEST(RootDatum, UnsupportedTags) {
  for (const char* tag : {"E6", "G2", "A0", "D3", "X", "A", "B1", "A1-twisted"}) {
    try {
      parse_datum(tag);
      ADD_FAILURE() << tag;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::unsupported) << tag;
    }
  }
}

TEST(TranslationWord, A1) {
  EXPECT_EQ(translation_word('A', 1, {1}).word.letters, (std::vector<int>{0, 1}));
  EXPECT_EQ(translation_word('A', 1, {2}).word.letters, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_TRUE(translation_word('A', 1, {0}).word.letters.empty());
  for (long a = 0; a <= 6; ++a) {
    auto t = translation_word('A', 1, {a});
    EXPECT_EQ(t.word.length(), static_cast<std::size_t>(2 * a));
    EXPECT_TRUE(t.matches_naive_length);
    if (a > 0) { EXPECT_EQ(t.word.letters.front(), 0); }
  }
}

TEST(TranslationWord, NegativeCoefficient) {
  EXPECT_THROW(translation_word('A', 2, {1, -1}), error);
}

TEST(TranslationWord, WordsAreReducedAndStartAtAffineNode) {
  struct Case {
    const char* tag;
    std::vector<long> a;
  };
  for (const Case& c : std::vector<Case>{{"A2", {1, 1}}, {"A2", {2, 1}}, {"B2", {1, 1}}, {"C3", {1, 1, 1}}, {"D4", {1, 2, 1, 1}}}) {
    RootDatum fin = parse_datum(c.tag);
    RootDatum aff = parse_datum(std::string(c.tag) + "-affine");
    auto t = translation_word(fin, c.a);
    EXPECT_EQ(weyl_length(aff, t.word), t.word.length()) << c.tag;
    ASSERT_FALSE(t.word.letters.empty());
    EXPECT_EQ(t.word.letters.front(), 0) << c.tag;
  }
  // lambda = theta^vee for A2 has length <lambda, 2 rho> = 4 = 2 (1 + 1)
  EXPECT_TRUE(translation_word('A', 2, {1, 1}).matches_naive_length);
  // lambda = alpha_1^vee in A2: sum over positive roots of |<lambda, alpha>| = 2 + 1 + 1
  auto t = translation_word('A', 2, {1, 0});
  EXPECT_EQ(t.word.length(), 4u);
  EXPECT_FALSE(t.matches_naive_length);
}

TEST(TranslationWord, LengthMismatchFlaggedOutsideTypeA) {
  // B2 with lambda = alpha_2^vee (long coroot): standard length differs from 2|lambda|
  auto t = translation_word('B', 2, {0, 1});
  RootDatum aff = parse_datum("B2-affine");
  EXPECT_EQ(weyl_length(aff, t.word), t.word.length());
  // positive roots a1, a2, a1+a2, a1+2a2 pair with alpha_2^vee to -2, 2, 0, 2
  EXPECT_EQ(t.word.length(), 6u);
  EXPECT_FALSE(t.matches_naive_length);
}
