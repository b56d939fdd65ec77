#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "zastava/poisson.hpp"
#include "zastava/sampling.hpp"

using namespace zastava;
using zt::S;

namespace {
const RootDatum A1 = finite_datum('A', 1);
const RootDatum A2 = finite_datum('A', 2);
}  // namespace

TEST(Bracket, TrigWY) {
  BracketTable t(BracketKind::trigonometric, A1, {1}, false);
  const auto& cs = t.coords();
  MultiRat w = cs.var(cs.w(0, 0)), y = cs.var(cs.y(0, 0));
  EXPECT_EQ(bracket(t, w, y), w * y);
  EXPECT_EQ(bracket(t, y, w), -(w * y));
}

TEST(Bracket, RationalVersusTrig) {
  BracketTable r(BracketKind::rational, A1, {1}, false);
  BracketTable t(BracketKind::trigonometric, A1, {1}, false);
  const auto& cs = r.coords();
  EXPECT_EQ(r.rule(cs.w(0, 0), cs.y(0, 0)), cs.var(cs.y(0, 0)));
  EXPECT_EQ(t.rule(cs.w(0, 0), cs.y(0, 0)), cs.var(cs.w(0, 0)) * cs.var(cs.y(0, 0)));
}

TEST(Bracket, CrossColorTrig) {
  BracketTable t(BracketKind::trigonometric, A2, {1, 1}, false);
  const auto& cs = t.coords();
  MultiRat w1 = cs.var(cs.w(0, 0)), w2 = cs.var(cs.w(1, 0));
  MultiRat y1 = cs.var(cs.y(0, 0)), y2 = cs.var(cs.y(1, 0));
  MultiRat expect = -((w1 + w2) * y1 * y2) / ((w1 - w2) * Scalar(2));
  EXPECT_EQ(bracket(t, y1, y2), expect);
  EXPECT_TRUE(bracket(t, w1, w2).is_zero());
  EXPECT_TRUE(bracket(t, w1, y2).is_zero());
}

TEST(Bracket, SelfBracketVanishes) {
  BracketTable t(BracketKind::trigonometric, A2, {2, 1}, true);
  const auto& cs = t.coords();
  MultiRat f = cs.var(cs.y(0, 0)) * cs.var(cs.y(1, 0)) / (cs.var(cs.w(0, 1)) + Scalar(3)) + cs.var(cs.B(0));
  EXPECT_TRUE(bracket(t, f, f).is_zero());
}

TEST(Bracket, ForeignVariablesRejected) {
  BracketTable t(BracketKind::rational, A1, {1}, false);
  auto other = zt::vars({"p", "q"});
  EXPECT_THROW(bracket(t, MultiRat::variable(other, 0), t.coords().var(0)), error);
}

TEST(Bracket, LeibnizAndAntisymmetry) {
  std::mt19937_64 rng(5);
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric}) {
    BracketTable t(kind, A2, {2, 1}, true);
    const auto& cs = t.coords();
    const std::size_t n = cs.coordinate_count();
    auto pick = [&] { return cs.var(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
    for (int k = 0; k < 10; ++k) {
      MultiRat f = pick() * pick() + Scalar(k);
      MultiRat g = pick() / (pick() + Scalar(k + 11));
      MultiRat h = pick() - pick() * Scalar(2);
      EXPECT_EQ(bracket(t, f, g * h), g * bracket(t, f, h) + h * bracket(t, f, g));
      EXPECT_EQ(bracket(t, f, g), -bracket(t, g, f));
    }
  }
}

TEST(Jacobi, CoordinateTriples) {
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric}) {
    for (auto [datum, deg] : {std::pair{A1, std::vector<std::size_t>{1}}, std::pair{A1, std::vector<std::size_t>{2}},
                              std::pair{A2, std::vector<std::size_t>{1, 1}}, std::pair{A2, std::vector<std::size_t>{2, 1}}}) {
      for (bool ext : {false, true}) {
        BracketTable t(kind, datum, deg, ext);
        auto rep = jacobi_all(t);
        EXPECT_TRUE(rep.passed()) << to_string(kind) << " " << datum.name() << " " << rep.checks.back().id << " "
                                  << rep.checks.back().witness;
      }
    }
  }
}

TEST(Jacobi, NamedTripleIsZero) {
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric}) {
    BracketTable t(kind, A2, {1, 1}, false);
    const auto& cs = t.coords();
    EXPECT_TRUE(jacobi_check(t, cs.var(cs.w(0, 0)), cs.var(cs.y(0, 0)), cs.var(cs.y(1, 0))).is_zero());
    EXPECT_TRUE(jacobi_check(t, cs.var(cs.y(0, 0)), cs.var(cs.y(0, 0)), cs.var(cs.w(1, 0))).is_zero());
  }
}

TEST(Jacobi, CorruptedBivectorFails) {
  const BracketTable good(BracketKind::trigonometric, A2, {1, 1}, false);
  const auto& cs = good.coords();
  const BracketTable bad = good.with_rule(cs.y(0, 0), cs.y(1, 0), cs.var(cs.w(0, 0)));
  EXPECT_FALSE(jacobi_check(bad, cs.var(cs.w(0, 0)), cs.var(cs.y(0, 0)), cs.var(cs.y(1, 0))).is_zero());
  EXPECT_FALSE(jacobi_all(bad).passed());
  EXPECT_TRUE(jacobi_all(good).passed());
  EXPECT_THROW(good.with_rule(0, 0, cs.var(0)), error);
}

TEST(Symplectic, DegreeOneExample) {
  auto rep = symplectic_check_trig(ZastavaPoint::from_coords(A1, {{2}}, {{3}}));
  EXPECT_EQ(rep.bivector, (ScalarMatrix{{0, 6}, {-6, 0}}));
  EXPECT_EQ(rep.omega, (ScalarMatrix{{0, S("-1/6")}, {S("1/6"), 0}}));
  EXPECT_TRUE(rep.pass);
}

TEST(Symplectic, RandomPoints) {
  std::mt19937_64 rng(77);
  for (auto [datum, deg] : {std::pair{A1, std::vector<std::size_t>{1}}, std::pair{A1, std::vector<std::size_t>{2}},
                            std::pair{A2, std::vector<std::size_t>{1, 1}}, std::pair{A2, std::vector<std::size_t>{2, 1}}}) {
    for (int k = 0; k < 20; ++k) {
      auto p = random_point(rng, datum, deg);
      bool clash = false;
      if (deg.size() == 2)
        for (auto& a : *p.color(0).w)
          for (auto& b : *p.color(1).w) clash = clash || a == b;
      if (clash) {
        EXPECT_THROW(symplectic_check_trig(p), error);
        continue;
      }
      EXPECT_TRUE(symplectic_check_trig(p).pass);
    }
  }
}

TEST(Symplectic, NonSimplyLaced) {
  std::mt19937_64 rng(3);
  RootDatum B2 = finite_datum('B', 2);
  auto p = random_point(rng, B2, {1, 2});
  EXPECT_TRUE(symplectic_check_trig(p).pass);
}

TEST(Descent, AllChecksPass) {
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric}) {
    for (std::size_t a = 1; a <= 3; ++a) {
      auto rep = verify_descent(A1, {a}, kind);
      EXPECT_TRUE(rep.passed()) << to_string(kind) << " a=" << a << " " << (rep.first_failure() ? rep.first_failure()->witness : "");
    }
    auto rep = verify_descent(A2, {1, 1}, kind);
    EXPECT_TRUE(rep.passed()) << to_string(kind) << " " << (rep.first_failure() ? rep.first_failure()->witness : "");
    EXPECT_EQ(rep.checks.size(), 4u);
  }
}
