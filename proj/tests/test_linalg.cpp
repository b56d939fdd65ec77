#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_util.hpp"
#include "zastava/matrix.hpp"
#include "zastava/structured.hpp"

using namespace zastava;
using zt::P;
using zt::S;

namespace {

constexpr DetStrategy all_strategies[] = {DetStrategy::bareiss, DetStrategy::cofactor, DetStrategy::division_free};

ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, -20, 20, 6);
  return m;
}

// Leibniz formula over all permutations; independent of every strategy.
Scalar det_permutations(const ScalarMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Scalar total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Scalar t(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) t *= m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Det, TwoByTwo) {
  ScalarMatrix m{{1, 5}, {5, 17}};
  for (auto s : all_strategies) EXPECT_EQ(det(m, s), -8) << to_string(s);
}

TEST(Det, Identity) {
  for (auto s : all_strategies) EXPECT_EQ(det(ScalarMatrix::identity(4), s), 1);
}

TEST(Det, EqualRows) {
  ScalarMatrix m{{1, 2, 3}, {4, S("5/7"), 6}, {1, 2, 3}};
  for (auto s : all_strategies) EXPECT_EQ(det(m, s), 0);
}

TEST(Det, NonSquare) {
  ScalarMatrix m(2, 3);
  for (auto s : all_strategies) EXPECT_THROW(det(m, s), error);
}

TEST(Det, ZeroPivotNeedsSwap) {
  ScalarMatrix m{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  for (auto s : all_strategies) EXPECT_EQ(det(m, s), det_permutations(m));
}

TEST(Det, StrategiesAgreeOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int t = 0; t < 5; ++t) {
      ScalarMatrix m = random_matrix(rng, n);
      const Scalar b = det(m, DetStrategy::bareiss);
      EXPECT_EQ(det(m, DetStrategy::cofactor), b);
      EXPECT_EQ(det(m, DetStrategy::division_free), b);
      if (n <= 6) { EXPECT_EQ(det_permutations(m), b); }
    }
  }
}

TEST(Det, SymbolicCofactor) {
  VarSetPtr v = zt::vars({"x", "y"});
  MultiRat x = MultiRat::variable(v, "x"), y = MultiRat::variable(v, "y");
  SymbolicMatrix m{{x, y}, {y, x}};
  EXPECT_EQ(det(m), x * x - y * y);
  EXPECT_EQ(det_division_free(m), x * x - y * y);
  SymbolicMatrix big(7, 7);
  EXPECT_THROW(det(big), error);
}

TEST(Solve, Unique) {
  ScalarMatrix a{{2, 1}, {1, 3}};
  auto x = solve(a, {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], S("4/5"));
  EXPECT_EQ((*x)[1], S("7/5"));
  ScalarMatrix sing{{1, 2}, {2, 4}};
  EXPECT_FALSE(solve(sing, {1, 1}).has_value());
}

TEST(Hankel, Matrix) {
  InfSeries c({1, 5, 17});
  EXPECT_EQ(hankel_matrix(c, 2), (ScalarMatrix{{1, 5}, {5, 17}}));
  EXPECT_EQ(hankel_matrix(InfSeries({3}), 1), (ScalarMatrix{{3}}));
  EXPECT_EQ(hankel_matrix(InfSeries({0, 0, 0}), 2), ScalarMatrix(2, 2));
  EXPECT_THROW(hankel_matrix(InfSeries({1, 5}), 2), error);
}

TEST(Hankel, Minors) {
  EXPECT_EQ(hankel_minor_C(InfSeries({3, 6}), 1), 3);
  InfSeries c({1, 5, 17, 53});
  EXPECT_EQ(hankel_minor_C(c, 2), -8);
  EXPECT_EQ(hankel_minor_D(c, 1), 5);
  EXPECT_EQ(hankel_minor_D(c, 2), -24);
  EXPECT_THROW(hankel_minor_D(InfSeries({1, 5, 17}), 2), error);
  InfSeries zero({0, 0, 0, 0, 0});
  for (std::size_t r = 1; r <= 3; ++r) EXPECT_EQ(hankel_minor_C(zero, r), 0);
}

TEST(Sylvester, Layout) {
  EXPECT_EQ(sylvester_matrix(P("z-2"), P("3")), (ScalarMatrix{{3}}));
  EXPECT_EQ(sylvester_matrix(P("z^2-4z+3"), P("z+1")), (ScalarMatrix{{1, -4, 3}, {0, 1, 1}, {1, 1, 0}}));
  EXPECT_EQ(sylvester_matrix(P("z-1"), UniPoly()), (ScalarMatrix{{0}}));
  EXPECT_THROW(sylvester_matrix(P("2z-1"), P("1")), error);
  EXPECT_THROW(sylvester_matrix(P("z-1"), P("z")), error);
}

TEST(Subresultant, Odd) {
  EXPECT_EQ(subresultant_odd(P("z-2"), P("3"), 0), 3);
  EXPECT_EQ(abs(subresultant_odd(P("z^2-4z+3"), P("z+1"), 0)), 8);
  EXPECT_EQ(abs(subresultant_odd(P("z^2-4z+3"), P("z+1"), 1)), 1);
  EXPECT_THROW(subresultant_odd(P("z^2-4z+3"), P("z+1"), 2), error);
}

TEST(Subresultant, Even) {
  EXPECT_EQ(abs(subresultant_even(P("z^2-4z+3"), P("z+1"), 0)), 5);
  EXPECT_EQ(subresultant_even(P("z^3-z+5"), UniPoly(), 0), 0);
  EXPECT_THROW(subresultant_even(P("z-2"), P("3"), 0), error);
}

// Resultant of Q and R is the product of R over the roots of Q.
TEST(Subresultant, FullMinorIsResultant) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t a = 1 + t % 5;
    std::vector<Scalar> roots;
    for (std::size_t k = 0; k < a; ++k) roots.push_back(random_integer(rng, -9, 9));
    UniPoly Q = from_roots(roots);
    UniPoly R = zt::random_unipoly(rng, a - 1);
    Scalar res(1);
    for (const auto& w : roots) res *= R(w);
    EXPECT_EQ(abs(subresultant_odd(Q, R, 0)), abs(res));
  }
}

TEST(Kronecker, OddAndEvenMatchHankel) {
  std::mt19937_64 rng(99);
  SignLedger ledger;
  for (int t = 0; t < 20; ++t) {
    for (std::size_t a = 1; a <= 5; ++a) {
      std::vector<Scalar> roots;
      for (std::size_t k = 0; k < a; ++k) roots.push_back(random_rational(rng, -9, 9, 3));
      UniPoly Q = from_roots(roots), R = zt::random_unipoly(rng, a - 1);
      InfSeries c = series_expand(R, Q, 2 * a);
      for (std::size_t i = 0; i < a; ++i) {
        const Scalar odd = subresultant_odd(Q, R, i), C = hankel_minor_C(c, a - i);
        EXPECT_EQ(abs(odd), abs(C));
        EXPECT_TRUE(ledger.observe("odd", a, i, odd, C));
      }
      for (std::size_t i = 0; i + 2 <= a; ++i) {
        const Scalar even = subresultant_even(Q, R, i), D = hankel_minor_D(c, a - i - 1);
        EXPECT_EQ(abs(even), abs(D));
        EXPECT_TRUE(ledger.observe("even", a, i, even, D));
      }
    }
  }
  EXPECT_TRUE(ledger.all_stable());
  EXPECT_EQ(ledger.sign("odd", 3, 1), 1);
}

TEST(SignLedger, DetectsFlip) {
  SignLedger l;
  EXPECT_TRUE(l.observe("f", 2, 0, 3, 3));
  EXPECT_TRUE(l.observe("f", 2, 0, 0, 5));
  EXPECT_FALSE(l.observe("f", 2, 0, 3, -3));
  EXPECT_FALSE(l.all_stable());
}
