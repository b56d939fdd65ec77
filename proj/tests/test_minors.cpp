#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "zastava/sampling.hpp"
#include "zastava/sl2_minors.hpp"

using namespace zastava;
using zt::P;
using zt::S;

namespace {
const RootDatum A1 = finite_datum('A', 1);
ZastavaPoint pt(const char* q, const char* r) { return ZastavaPoint::from_polys(A1, {P(q)}, {P(r)}); }
}  // namespace

TEST(Wedge, WindowDegreeOne) {
  WedgeMatrix g(g_matrix(P("z-2"), P("3")));
  WedgeWindow w = wedge_window(g, -1, 2);
  // rows/cols -1..2: row -1 (F/D), 0 (R/Q), 1 (F/D), 2 (R/Q)
  ScalarMatrix expect{{1, 0, 0, 0}, {0, 1, 0, 0}, {2, S("-4/3"), 1, 0}, {3, -2, 0, 1}};
  EXPECT_EQ(w.entries, expect);
  EXPECT_THROW(w.at(3, 0), error);
}

TEST(Wedge, IdentityDiagonal) {
  WedgeMatrix g(g_matrix(P("z^2-4z+3"), P("z+1")));
  for (long k = -7; k <= 9; ++k) {
    EXPECT_EQ(g.entry(k, k), 1);
    EXPECT_EQ(g.entry(k, k + 1), 0);
  }
}

TEST(Wedge, EntryTranscription) {
  WedgeMatrix g(g_matrix(P("z^2-4z+3"), P("z+1")));
  EXPECT_EQ(g.entry(-2, -5), 1);   // r_1
  EXPECT_EQ(g.entry(-2, -6), 3);   // q_0
  EXPECT_EQ(g.entry(-2, -7), 1);   // r_0
  EXPECT_EQ(g.entry(-2, -4), -4);  // q_1
  EXPECT_EQ(g.entry(-2, -9), 0);  // below the band
}

TEST(GeneralizedMinor, DegreeOne) {
  auto p = pt("z-2", "3");
  EXPECT_EQ(generalized_minor_v1(p, 1), 6);   // D_1
  EXPECT_EQ(generalized_minor_v0(p, 1), -3);  // -C_1
}

TEST(GeneralizedMinor, DegreeTwo) {
  auto p = pt("z^2-4z+3", "z+1");
  EXPECT_EQ(generalized_minor_v1(p, 1), 5);
  EXPECT_EQ(generalized_minor_v1(p, 2), -24);
  EXPECT_EQ(generalized_minor_v0(p, 1), -1);
  EXPECT_EQ(generalized_minor_v0(p, 2), -8);
  EXPECT_EQ(pattern_v1(2).rows.size(), 5u);
  EXPECT_THROW(generalized_minor_v1(p, 3), error);
}

TEST(GeneralizedMinor, ZeroRVanishes) {
  for (const char* q : {"z-2", "z^2-4z+3", "z^3-z+5"}) {
    auto p = pt(q, "0");
    for (std::size_t r = 1; r <= p.color(0).degree(); ++r) {
      EXPECT_EQ(generalized_minor_v1(p, r), 0) << q;
      EXPECT_EQ(generalized_minor_v0(p, r), 0) << q;
    }
  }
}

TEST(Resolution, SquarePatternSelected) {
  PatternResolution res = resolve_correspondence();
  EXPECT_TRUE(res.square_pattern_selected);
  EXPECT_FALSE(res.shifted_pattern_selected);
  const Correspondence f = frozen_correspondence();
  EXPECT_EQ(res.found.v1_family, f.v1_family);
  EXPECT_EQ(res.found.v0_family, f.v0_family);
  EXPECT_EQ(res.found.v1_alternating, f.v1_alternating);
  EXPECT_EQ(res.found.v0_alternating, f.v0_alternating);
  EXPECT_FALSE(pattern_v1_shifted(2).square());
}

TEST(Crosscheck, DegreeOne) {
  auto rep = crosscheck_three_routes(pt("z-2", "3"));
  EXPECT_TRUE(rep.pass);
  ASSERT_EQ(rep.triples.size(), 2u);
  EXPECT_EQ(rep.triples[0].family, 'C');
  EXPECT_EQ(abs(rep.triples[0].wedge), 3);
  EXPECT_EQ(abs(*rep.triples[0].subresultant), 3);
  EXPECT_EQ(rep.triples[0].hankel, 3);
}

TEST(Crosscheck, DegreeTwo) {
  auto rep = crosscheck_three_routes(pt("z^2-4z+3", "z+1"));
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.hankel_from_closed_form);
  std::vector<Scalar> C, D;
  for (const auto& t : rep.triples) (t.family == 'C' ? C : D).push_back(abs(t.hankel));
  EXPECT_EQ(C, (std::vector<Scalar>{1, 8}));
  EXPECT_EQ(D, (std::vector<Scalar>{5, 24}));
}

TEST(Crosscheck, CommonFactorGivesZeroEverywhere) {
  auto rep = crosscheck_three_routes(pt("z^2-1", "z+1"));
  EXPECT_TRUE(rep.pass);
  for (const auto& t : rep.triples)
    if (t.family == 'C' && t.index == 2) {
      EXPECT_EQ(t.hankel, 0);
      EXPECT_EQ(t.wedge, 0);
    }
}

TEST(Crosscheck, InconsistentFormsFail) {
  Color c{P("z^2-4z+3"), P("z+1"), std::vector<Scalar>{1, 3}, std::vector<Scalar>{2, 5}};
  auto p = ZastavaPoint::unchecked(A1, {c});
  EXPECT_FALSE(p.consistency_problems().empty());
  auto rep = crosscheck_three_routes(p);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.first_failure.has_value());
}

TEST(Crosscheck, RandomPointsAndSignStability) {
  std::mt19937_64 rng(31);
  SignLedger ledger;
  for (int t = 0; t < 12; ++t) {
    for (std::size_t a = 1; a <= 4; ++a) {
      auto rep = crosscheck_three_routes(random_sl2_point(rng, a));
      EXPECT_TRUE(rep.pass);
      for (const auto& tr : rep.triples) {
        EXPECT_TRUE(ledger.observe(std::string("wedge-") + tr.family, a, tr.index, tr.wedge, tr.hankel));
        if (tr.subresultant) { EXPECT_TRUE(ledger.observe(std::string("sub-") + tr.family, a, tr.index, *tr.subresultant, tr.hankel)); }
        if (tr.family == 'C') { EXPECT_EQ(tr.sign_wedge, tr.index % 2 ? -1 : 1); }
        if (tr.family == 'D') { EXPECT_EQ(tr.sign_wedge, 1); }
      }
    }
  }
  EXPECT_TRUE(ledger.all_stable());
}
