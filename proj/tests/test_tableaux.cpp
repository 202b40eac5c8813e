#include "support.hpp"

#include "bethe/strings.hpp"

namespace bethe::test {
namespace {

const Tableaux kFig3{{{3, 2, 1}, {3}, {1, 1}}};
const MultiIndex kFig3Weight({6, 3, 2});

RatFunc zz(int a, int l, int lp) {
  RatFunc r = T(a, l) / T(a + 1, lp);
  return (Q() - Qinv() * r) / (RatFunc(1) - r);
}

TEST(Enumerate, SingleBox) {
  auto ts = enum_connected_tableaux(3, MultiIndex({1, 0}));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].rows, (std::vector<std::vector<int>>{{1}}));
}

TEST(Enumerate, CompositionsOfThree) { EXPECT_EQ(enum_connected_tableaux(2, MultiIndex({3})).size(), 4u); }

TEST(Enumerate, SingleTypeTwoBox) {
  auto ts = enum_connected_tableaux(3, MultiIndex({1, 1}));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].rows, (std::vector<std::vector<int>>{{2}}));
}

TEST(Enumerate, MatchesBruteForce) {
  std::vector<std::pair<int, std::vector<int>>> weights = {
      {2, {4}}, {2, {5}}, {3, {2, 2}}, {3, {3, 1}}, {3, {3, 2}}, {4, {2, 1, 1}}, {4, {3, 2, 1}}, {4, {4, 2, 1}}};
  for (const auto& [N, w] : weights) {
    auto got = enum_connected_tableaux(N, MultiIndex(w));
    for (const auto& t : got) {
      EXPECT_TRUE(t.connected());
      EXPECT_TRUE(t.is_valid(N));
      EXPECT_EQ(tableaux_stats(t, N).weight, MultiIndex(w));
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute_force_tableaux(N, w)) << MultiIndex(w).to_string();
  }
}

TEST(Enumerate, Guards) {
  EXPECT_THROW(enum_connected_tableaux(3, MultiIndex({1, 2})), WeightNotAdmissible);
  EXPECT_THROW(enum_connected_tableaux(3, MultiIndex({2})), RankMismatch);
  EXPECT_THROW(enum_connected_tableaux(2, MultiIndex({kMaxTableauxBoxes + 1})), SizeGuardExceeded);
  EXPECT_TRUE(enum_connected_tableaux(3, MultiIndex({0, 0})).empty());
}

TEST(Stats, FourRowTableau) {
  Tableaux t{{{2, 2, 2, 1, 1, 1}, {1, 1, 1}, {3, 3, 2, 2, 1}, {3, 1}}};
  EXPECT_EQ(tableaux_stats(t, 4).weight, MultiIndex({16, 8, 3}));
  Diagram d = t.diagram();
  EXPECT_EQ(d.parts, (std::vector<int>{6, 3, 5, 2}));
  EXPECT_EQ(d.size(), 16);
  EXPECT_EQ(d.height(), 4);
}

TEST(Stats, ThreeRowTableau) {
  TabStats s = tableaux_stats(kFig3, 4);
  EXPECT_EQ(s.weight, kFig3Weight);
  EXPECT_EQ(s.c[0], (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(s.d[0], (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(s.h[1], (std::vector<int>{4, 3, 2}));
}

TEST(Stats, RejectsIncreasingRow) {
  EXPECT_THROW(tableaux_stats(Tableaux{{{1, 2}}}, 3), std::invalid_argument);
}

TEST(AssignVars, GroupsOfThreeRowTableau) {
  auto rows = assign_vars(kFig3, Segment::canonical(kFig3Weight));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(render_row_vars(rows[2]), "(.;.;t[1,6],t[1,5])");
  EXPECT_EQ(render_row_vars(rows[1]), "(t[3,2];t[2,3];t[1,4])");
  EXPECT_EQ(render_row_vars(rows[0]), "(t[3,1];t[2,2],t[2,1];t[1,3],t[1,2],t[1,1])");
}

TEST(AssignVars, SingleBox) {
  auto rows = assign_vars(Tableaux{{{1}}}, Segment::canonical(MultiIndex({1})));
  EXPECT_EQ(rows[0][0], std::vector<VarLabel>{tv(1, 1)});
}

TEST(AssignVars, ShiftedSegment) {
  Segment seg(MultiIndex({1, 0, 0}), MultiIndex({7, 3, 2}));
  auto rows = assign_vars(kFig3, seg);
  EXPECT_EQ(rows[0][0], (std::vector<VarLabel>{tv(1, 2), tv(1, 3), tv(1, 4)}));
  EXPECT_THROW(assign_vars(kFig3, Segment::canonical(MultiIndex({6, 3, 1}))), SpanMismatch);
}

TEST(BoxVars, DiagonalOfBottomRow) {
  auto boxes = box_vars(kFig3, Segment::canonical(kFig3Weight))[0];
  EXPECT_EQ(boxes[0], (std::vector<VarLabel>{tv(1, 3), tv(2, 2), tv(3, 1)}));
  EXPECT_EQ(boxes[1], (std::vector<VarLabel>{tv(1, 2), tv(2, 1)}));
  EXPECT_EQ(boxes[2], (std::vector<VarLabel>{tv(1, 1)}));
}

TEST(ZChi, HeightOneIsOne) {
  EXPECT_TRUE(z_chi(Tableaux{{{3, 2, 1}}}, Segment::canonical(MultiIndex({3, 2, 1}))).is_one());
}

TEST(ZChi, ThreeRowTableau) {
  RatFunc part0(1);
  for (int l = 5; l <= 6; ++l) part0 *= zz(1, l, 3);
  for (int l = 4; l <= 6; ++l)
    for (int lp = 1; lp <= 2; ++lp) part0 *= zz(1, l, lp);
  part0 *= zz(2, 3, 1);
  EXPECT_TRUE(rat_eq(z_chi(kFig3, Segment::canonical(kFig3Weight)), part0));

  MultiIndex m({3, 2, 1});
  RatFunc part2 = zz(1, 5, 3) * zz(1, 6, 3);
  EXPECT_TRUE(rat_eq(z_chi(Tableaux{{{3}, {1, 1}}}, Segment(m, kFig3Weight)), part2));
  EXPECT_TRUE(rat_eq(z_weight(kFig3Weight, m) * part2, part0));
}

TEST(ZChi, BottomRowFactorization) {
  for (const auto& [N, w] : std::vector<std::pair<int, MultiIndex>>{{3, MultiIndex({3, 2})}, {4, MultiIndex({3, 2, 1})}}) {
    for (const auto& t : enum_connected_tableaux(N, w)) {
      if (t.height() < 2) continue;
      MultiIndex m(tableaux_stats(t, N).d[0]);
      Tableaux upper{std::vector<std::vector<int>>(t.rows.begin() + 1, t.rows.end())};
      EXPECT_TRUE(rat_eq(z_weight(w, m) * z_chi(upper, Segment(m, w)), z_chi(t, Segment::canonical(w))));
    }
  }
}

TEST(EChi, SingleRowIsItsCoefficient) {
  Tableaux t{{{2, 1}}};
  Segment seg = Segment::canonical(MultiIndex({2, 1}));
  EXPECT_TRUE(alg_eq(e_chi(t, seg), opaque_row(assign_vars(t, seg)[0])));
}

TEST(EChi, TwoSingleBoxRows) {
  Tableaux t{{{1}, {1}}};
  AlgElem expected = E({tv(1, 2)}) * E({tv(1, 1)});
  EXPECT_TRUE(alg_eq(e_chi(t, Segment::canonical(MultiIndex({2}))), expected));
}

TEST(EChi, ExpandedThreeRowTableau) {
  auto pm = [](std::vector<VarLabel> vars, Word w) { return AlgElem::atom(make_opaque("Pminus", std::move(vars), std::move(w))); };
  auto inv1m = [](const RatFunc& x) { return RatFunc(1) / (RatFunc(1) - x); };
  AlgElem top = pm({tv(1, 6), tv(1, 5)}, {CompF{2, 1, tv(1, 6)}, CompF{2, 1, tv(1, 5)}});
  AlgElem mid = RatFunc(inv1m(T(1, 4) / T(2, 3)) * inv1m(T(2, 3) / T(3, 2))) * pm({tv(1, 4)}, {CompF{4, 1, tv(1, 4)}});
  AlgElem bottom = RatFunc(inv1m(T(1, 3) / T(2, 2)) * inv1m(T(2, 2) / T(3, 1)) * inv1m(T(1, 2) / T(2, 1))) *
                   pm({tv(1, 3), tv(1, 2), tv(1, 1)}, {CompF{4, 1, tv(1, 3)}, CompF{3, 1, tv(1, 2)}, CompF{2, 1, tv(1, 1)}});
  AlgElem got = e_chi(kFig3, Segment::canonical(kFig3Weight), EMode::Expanded);
  EXPECT_TRUE(alg_eq(got, top * mid * bottom));
}

TEST(ClosedForm, FirstCoefficients) {
  GenSeries d = closed_form_inverse(3, MultiIndex({1, 1}));
  EXPECT_TRUE(alg_eq(d.coeff(MultiIndex({1, 0})), -E({tv(1, 1)})));
  EXPECT_TRUE(alg_eq(d.coeff(MultiIndex({1, 1})), -E({tv(1, 1), tv(2, 1)})));
  EXPECT_TRUE(d.coeff(MultiIndex({0, 1})).is_zero());
  GenSeries d2 = closed_form_inverse(2, MultiIndex({2}));
  AlgElem raw = -E({tv(1, 1), tv(1, 2)}) + E({tv(1, 2)}) * E({tv(1, 1)});
  EXPECT_TRUE(alg_eq(d2.coeff(MultiIndex({2})), qsym2(raw, tv(1, 1), tv(1, 2))));
}

TEST(ClosedForm, MatchesRecursiveInverse) {
  for (const auto& [N, b] : std::vector<std::pair<int, MultiIndex>>{{2, MultiIndex({3})}, {3, MultiIndex({2, 1})}, {4, MultiIndex({1, 1, 1})}}) {
    GenSeries closed = closed_form_inverse(N, b);
    GenSeries recursive = invert(opaque_e_series(N, b), b);
    EXPECT_TRUE(series_eq(closed, recursive)) << b.to_string();
  }
}

TEST(ClosedForm, SingleTypeCompositions) {
  GenSeries e = opaque_e_series(2, MultiIndex({3}));
  GenSeries d = invert(e, MultiIndex({3}));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(alg_eq(single_type_inverse(e, n), d.coeff(MultiIndex({n}))));
}

}  // namespace
}  // namespace bethe::test
