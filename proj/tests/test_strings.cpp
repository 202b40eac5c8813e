#include "support.hpp"

#include "bethe/strings.hpp"

namespace bethe::test {
namespace {

Word compf_word(std::vector<std::tuple<int, int, VarLabel>> blocks) {
  Word w;
  for (const auto& [j, i, v] : blocks) w.push_back(CompF{j, i, v});
  return w;
}

std::pair<std::vector<VarLabel>, std::vector<VarLabel>> v_args(int k) {
  std::vector<VarLabel> up, lo;
  for (int m = k; m >= 1; --m) {
    up.push_back(tv(2, m));
    lo.push_back(tv(1, m));
  }
  return {up, lo};
}

TEST(VSeries, EmptyIsOne) {
  EXPECT_TRUE(v_series({}, {}, VVariant::V).is_one());
  EXPECT_TRUE(v_series({}, {}, VVariant::Vtilde).is_one());
}

TEST(VSeries, LengthOne) {
  RatFunc r = T(1, 1) / T(2, 1);
  EXPECT_TRUE(rat_eq(v_series({tv(2, 1)}, {tv(1, 1)}, VVariant::V), r / (RatFunc(1) - r)));
}

TEST(VSeries, BothFormsAgree) {
  for (int k = 0; k <= 4; ++k) {
    auto [up, lo] = v_args(k);
    for (auto v : {VVariant::V, VVariant::Vtilde})
      EXPECT_TRUE(rat_eq(v_series(up, lo, v, VForm::First), v_series(up, lo, v, VForm::Second))) << k;
  }
}

TEST(VSeries, LengthMismatch) {
  EXPECT_THROW(v_series({tv(2, 1), tv(2, 2)}, {tv(1, 1)}, VVariant::V), LengthMismatch);
}

TEST(AdmissibleIndexTest, Validation) {
  EXPECT_TRUE(AdmissibleIndex::ascending({0, 1, 1}).is_admissible());
  EXPECT_FALSE(AdmissibleIndex::ascending({2, 1}).is_admissible());
  EXPECT_TRUE(AdmissibleIndex::descending(2, {3, 1}).is_admissible());
  EXPECT_THROW(AdmissibleIndex::descending(1, {1, 2}).validate(), InadmissibleIndex);
  AdmissibleIndex d = AdmissibleIndex::descending(2, {3, 1});
  EXPECT_EQ(d.at(1), 0);
  EXPECT_EQ(d.at(2), 3);
  EXPECT_EQ(d.last_type(), 3);
}

TEST(XPrefactor, TrivialCases) {
  EXPECT_TRUE(x_prefactor(AdmissibleIndex::ascending({3}), XVariant::X, Segment::canonical(MultiIndex({3}))).is_one());
  EXPECT_TRUE(x_prefactor(AdmissibleIndex::descending(3, {2}), XVariant::Xtilde, Segment::canonical(MultiIndex({0, 0, 2})))
                  .is_one());
}

TEST(XPrefactor, SingleV) {
  RatFunc x = x_prefactor(AdmissibleIndex::ascending({1, 1}), XVariant::X, Segment::canonical(MultiIndex({1, 1})));
  EXPECT_TRUE(rat_eq(x, v_series({tv(2, 1)}, {tv(1, 1)}, VVariant::V)));
}

TEST(XPrefactor, ShiftedSegment) {
  Segment seg(MultiIndex({2, 1}), MultiIndex({3, 2}));
  RatFunc x = x_prefactor(AdmissibleIndex::ascending({1, 1}), XVariant::X, seg);
  EXPECT_TRUE(rat_eq(x, v_series({tv(2, 2)}, {tv(1, 3)}, VVariant::V)));
}

TEST(XPrefactor, SpanMismatch) {
  EXPECT_THROW(x_prefactor(AdmissibleIndex::ascending({1, 1}), XVariant::X, Segment::canonical(MultiIndex({1, 2}))),
               SpanMismatch);
}

TEST(BuildString, TypeOne) {
  AlgElem s = build_string(1, AdmissibleIndex::ascending({3}), Segment::canonical(MultiIndex({3})));
  AlgElem expected =
      AlgElem::word(compf_word({{2, 1, tv(1, 3)}, {2, 1, tv(1, 2)}, {2, 1, tv(1, 1)}}), RatFunc(Rational(1, 6)));
  EXPECT_TRUE(alg_eq(s, expected));
}

TEST(BuildString, TypeTwoExamples) {
  AlgElem a = build_string(2, AdmissibleIndex::ascending({1, 1}), Segment::canonical(MultiIndex({1, 1})));
  RatFunc v = T(1, 1) / T(2, 1) / (RatFunc(1) - T(1, 1) / T(2, 1));
  EXPECT_TRUE(alg_eq(a, AlgElem::atom(CompF{3, 1, tv(2, 1)}, v)));
  AlgElem b = build_string(2, AdmissibleIndex::ascending({0, 1}), Segment::canonical(MultiIndex({0, 1})));
  EXPECT_TRUE(alg_eq(b, FF(3, 2, tv(2, 1))));
}

TEST(BuildString, RejectsInadmissible) {
  EXPECT_THROW(build_string(2, AdmissibleIndex::ascending({2, 1}), Segment::canonical(MultiIndex({2, 1}))),
               InadmissibleIndex);
}

TEST(BuildDualString, RankOne) {
  AlgElem s = build_dual_string(1, AdmissibleIndex::descending(1, {2}), Segment::canonical(MultiIndex({2})));
  EXPECT_TRUE(alg_eq(s, AlgElem::word(compf_word({{2, 1, tv(1, 2)}, {2, 1, tv(1, 1)}}), RatFunc(Rational(1, 2)))));
}

TEST(BuildDualString, Words) {
  Word w = dual_string_word(1, AdmissibleIndex::descending(1, {3, 2, 1}), Segment::canonical(MultiIndex({3, 2, 1})));
  EXPECT_EQ(w, compf_word({{4, 1, tv(1, 3)}, {3, 1, tv(1, 2)}, {2, 1, tv(1, 1)}}));
  Word u = dual_string_word(1, AdmissibleIndex::descending(1, {1, 1, 1}), Segment::canonical(MultiIndex({1, 1, 1})));
  EXPECT_EQ(u, compf_word({{4, 1, tv(1, 1)}}));
}

TEST(ExpandComposed, DisplayedCases) {
  for (int i = 1; i <= 3; ++i) {
    VarLabel v = VarLabel::spectral();
    EXPECT_TRUE(alg_eq(expand_composed(FF(i + 1, i, v)), F(i, v)));
    EXPECT_TRUE(alg_eq(expand_composed(FF(i + 2, i, v)), RatFunc(Q() - Qinv()) * F(i, v) * F(i + 1, v)));
  }
}

TEST(ExpandComposed, AllPairsGivePureWordsOfPredictedLength) {
  VarLabel v = VarLabel::spectral();
  for (int j = 2; j <= 5; ++j)
    for (int i = 1; i < j; ++i) {
      AlgElem x = expand_composed(FF(j, i, v));
      ASSERT_EQ(x.size(), 1u);
      const auto& [w, c] = *x.terms().begin();
      ASSERT_EQ(static_cast<int>(w.size()), j - i);
      for (int k = 0; k < j - i; ++k) {
        const CurrF* f = w[static_cast<std::size_t>(k)].get_if<CurrF>();
        ASSERT_NE(f, nullptr);
        EXPECT_EQ(f->a, i + k);
      }
      EXPECT_TRUE(rat_eq(c, (Q() - Qinv()).pow(j - i - 1)));
      EXPECT_TRUE(alg_eq(expand_composed(x), x));
    }
}

TEST(ExpandComposed, StringsBecomeCurrentWords) {
  for (auto s : std::vector<std::vector<int>>{{1, 1, 2}, {0, 1, 2}, {1, 2, 2}}) {
    MultiIndex n(s);
    AlgElem x = expand_composed(build_string(3, AdmissibleIndex::ascending(s), Segment::canonical(n)));
    int predicted = 0;
    for (int a = 1; a <= 3; ++a) predicted += (s[a - 1] - (a > 1 ? s[a - 2] : 0)) * (4 - a);
    for (const auto& [w, c] : x.terms()) {
      EXPECT_EQ(static_cast<int>(w.size()), predicted);
      for (const auto& atom : w) EXPECT_NE(atom.get_if<CurrF>(), nullptr);
    }
  }
}

TEST(CurrentWord, Examples) {
  AlgElem a = current_word(MultiIndex({2}));
  EXPECT_TRUE(alg_eq(a, RatFunc(Rational(1, 2)) * F(1, tv(1, 2)) * F(1, tv(1, 1))));
  EXPECT_TRUE(alg_eq(current_word(MultiIndex({1, 1})), F(2, tv(2, 1)) * F(1, tv(1, 1))));
  EXPECT_TRUE(alg_eq(current_series(3, MultiIndex({1, 1})).coeff(MultiIndex({0, 0})), AlgElem(1)));
}

TEST(StringSeries, TypeOneIsCurrentSeries) {
  MultiIndex b({3});
  GenSeries s = string_series(1, b);
  GenSeries c = current_series(2, b);
  for (const auto& n : indices_below(b)) EXPECT_TRUE(alg_eq(expand_composed(s.coeff(n)), c.coeff(n)));
  EXPECT_TRUE(alg_eq(string_series(1, MultiIndex({0})).coeff(MultiIndex({0})), AlgElem(1)));
}

TEST(StringSeries, SupportIsAdmissible) {
  GenSeries s = string_series(2, MultiIndex({2, 2}));
  EXPECT_TRUE(s.coeff(MultiIndex({2, 1})).is_zero());
  EXPECT_FALSE(s.coeff(MultiIndex({1, 2})).is_zero());
  GenSeries d = dual_string_series(1, MultiIndex({2, 2}));
  EXPECT_TRUE(d.coeff(MultiIndex({1, 2})).is_zero());
  EXPECT_FALSE(d.coeff(MultiIndex({2, 1})).is_zero());
}

TEST(ProjectWords, WrapsWordsKeepsCoefficients) {
  AlgElem x = AlgElem::word(compf_word({{2, 1, tv(1, 2)}, {2, 1, tv(1, 1)}}), T(1, 1));
  AlgElem p = project_words(x, Projection::Minus);
  ASSERT_EQ(p.size(), 1u);
  const auto& [w, c] = *p.terms().begin();
  ASSERT_EQ(w.size(), 1u);
  const Opaque* o = w[0].get_if<Opaque>();
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->name, "Pminus");
  EXPECT_EQ(o->vars, (std::vector<VarLabel>{tv(1, 2), tv(1, 1)}));
  EXPECT_TRUE(rat_eq(c, T(1, 1)));
  EXPECT_TRUE(alg_eq(project_words(x, Projection::None), x));
}

}  // namespace
}  // namespace bethe::test
