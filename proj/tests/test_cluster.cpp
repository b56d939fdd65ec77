#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "zastava/cluster.hpp"

using namespace zastava;

namespace {
const RootDatum A1aff = affine_datum('A', 1);

WeylWord sl2_word(std::size_t a) {
  WeylWord w;
  for (std::size_t k = 0; k < a; ++k) w.letters.insert(w.letters.end(), {0, 1});
  return w;
}
}  // namespace

TEST(ExchangeMatrix, SL2DegreeTwo) {
  auto B = exchange_matrix(sl2_word(2), A1aff);
  EXPECT_EQ(B.columns(), (std::vector<std::size_t>{0, 1}));
  std::vector<std::vector<int>> rows{{0, 2}, {-2, 0}, {1, -2}, {0, 1}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(B(r, c), rows[r][c]) << r << "," << c;
  EXPECT_EQ(B.exchangeable_block(), (std::vector<std::vector<int>>{{0, 2}, {-2, 0}}));
}

TEST(ExchangeMatrix, NoRepeatsNoColumns) {
  EXPECT_TRUE(exchange_matrix(sl2_word(1), A1aff).columns().empty());
  EXPECT_TRUE(exchange_matrix(WeylWord{{0}}, A1aff).columns().empty());
}

TEST(ExchangeMatrix, SkewSymmetricBlocks) {
  for (std::size_t a = 1; a <= 5; ++a) {
    auto B = exchange_matrix(sl2_word(a), A1aff);
    EXPECT_EQ(B.columns().size(), 2 * a - 2);
    auto blk = B.exchangeable_block();
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = 0; j < blk.size(); ++j) EXPECT_EQ(blk[i][j], -blk[j][i]);
  }
}

TEST(ExchangeMatrix, SkewSymmetrizableOtherTypes) {
  for (auto [type, n, coeffs] : {std::tuple{'A', 2, std::vector<long>{1, 1}}, std::tuple{'B', 2, std::vector<long>{1, 1}},
                                  std::tuple{'C', 3, std::vector<long>{1, 0, 1}}, std::tuple{'D', 4, std::vector<long>{1, 1, 0, 1}}}) {
    RootDatum aff = affine_datum(type, static_cast<std::size_t>(n));
    auto tw = translation_word(type, static_cast<std::size_t>(n), coeffs);
    auto B = exchange_matrix(tw.word, aff);
    std::vector<Scalar> d;
    for (int letter : tw.word.letters) d.push_back(aff.dcheck(aff.index_of(letter)));
    EXPECT_TRUE(B.skew_symmetrizable_by(d)) << type << n;
  }
}

TEST(Mutation, MatrixInvolution) {
  for (std::size_t a = 2; a <= 5; ++a) {
    auto B = exchange_matrix(sl2_word(a), A1aff);
    for (std::size_t k : B.columns()) EXPECT_EQ(B.mutate(k).mutate(k), B);
  }
}

TEST(Mutation, SeedInvolution) {
  for (std::size_t a = 2; a <= 3; ++a) {
    Seed s = initial_seed_sl2(a);
    for (std::size_t k : s.matrix.columns()) {
      Seed t = mutate(mutate(s, k), k);
      EXPECT_EQ(t.matrix, s.matrix);
      for (std::size_t j = 0; j < s.variables.size(); ++j) EXPECT_EQ(t.variables[j], s.variables[j]);
    }
  }
}

TEST(Mutation, FrozenRejected) {
  Seed s = initial_seed_sl2(2);
  EXPECT_THROW(mutate(s, 2), error);
  EXPECT_THROW(mutate(s, 3), error);
}

TEST(Mutation, RankTwoAffineDoesNotReturn) {
  ExchangeMatrix B(2, {0, 1});
  B.set(0, 1, 2);
  B.set(1, 0, -2);
  Seed s = abstract_seed(B);
  EXPECT_TRUE(returns_to_initial(s, {0, 1, 0, 1, 0}).empty());
  // Finite type A2 returns after five alternating mutations.
  ExchangeMatrix A(2, {0, 1});
  A.set(0, 1, 1);
  A.set(1, 0, -1);
  auto hits = returns_to_initial(abstract_seed(A), {0, 1, 0, 1, 0});
  EXPECT_EQ(hits, (std::vector<std::size_t>{5}));
}

TEST(Seed, SL2Values) {
  auto p = ZastavaPoint::from_coords(finite_datum('A', 1), {{1, 3}}, {{2, 4}});
  Seed s = initial_seed_sl2(p);
  ASSERT_EQ(s.variables.size(), 4u);
  CoordinateSystem cs({2}, false);
  auto v = cs.values_at(p);
  EXPECT_EQ(s.variables[0].evaluate(v), 1);    // C1
  EXPECT_EQ(s.variables[1].evaluate(v), 5);    // D1
  EXPECT_EQ(s.variables[2].evaluate(v), -8);   // C2
  EXPECT_EQ(s.variables[3].evaluate(v), -24);  // D2
  EXPECT_EQ(s.frozen_positions(), (std::vector<std::size_t>{2, 3}));
  // exchange at C1 gives c_2
  EXPECT_EQ(mutate(s, 0).variables[0].evaluate(v), 17);
}

TEST(Seed, DegreeOneAllFrozen) {
  Seed s = initial_seed_sl2(1);
  EXPECT_EQ(s.frozen_positions(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.labels, (std::vector<std::string>{"C1", "D1"}));
}

TEST(Seed, TopCMinorIsBoundary) {
  std::mt19937_64 rng(4);
  for (std::size_t a = 1; a <= 3; ++a) {
    Seed s = initial_seed_sl2(a);
    EXPECT_TRUE(s.frozen(2 * a - 2));
    for (int t = 0; t < 5; ++t) {
      auto p = random_sl2_point(rng, a);
      CoordinateSystem cs({a}, false);
      EXPECT_EQ(abs(s.variables[2 * a - 2].evaluate(cs.values_at(p))), abs(boundary_equation_sl2(p)));
    }
  }
}

TEST(Seed, RequiresTrigSL2) {
  EXPECT_THROW(initial_seed_sl2(ZastavaPoint::from_coords(finite_datum('A', 2), {{1}, {2}}, {{1}, {1}})), error);
  EXPECT_THROW(initial_seed_sl2(ZastavaPoint::from_coords(finite_datum('A', 1), {{0, 2}}, {{1, 1}})), error);
}

TEST(LogCanonical, SL2Seeds) {
  std::mt19937_64 rng(8);
  for (std::size_t a = 2; a <= 3; ++a) {
    Seed s = initial_seed_sl2(a);
    BracketTable t(BracketKind::trigonometric, finite_datum('A', 1), {a}, false);
    auto rep = log_canonicity_check(s, t, 5, rng);
    EXPECT_TRUE(rep.pass) << "a=" << a;
    for (const auto& pr : rep.pairs) {
      EXPECT_EQ(pr.values.size(), 5u);
      if (pr.a == pr.b) { EXPECT_EQ(pr.values.front(), 0); }
    }
  }
}

TEST(LogCanonical, CorruptedVariableFails) {
  std::mt19937_64 rng(8);
  Seed s = initial_seed_sl2(2);
  s.variables[0] += MultiRat(Scalar(1));
  BracketTable t(BracketKind::trigonometric, finite_datum('A', 1), {2}, false);
  auto rep = log_canonicity_check(s, t, 5, rng);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.first_failure.has_value());
}

TEST(Laurent, TwiceMutated) {
  for (std::size_t a = 2; a <= 4; ++a) {
    auto rep = laurent_check(exchange_matrix(sl2_word(a), A1aff));
    EXPECT_TRUE(rep.passed()) << a;
    EXPECT_FALSE(rep.checks.empty());
  }
}
