#include "support.hpp"

namespace bethe::test {
namespace {

GenSeries one_plus(const AlgElem& c, int bound) {
  return GenSeries::from_raw(2, MultiIndex({bound}), {{MultiIndex({1}), c}});
}

TEST(ZWeight, EmptySplitIsOne) {
  EXPECT_TRUE(z_weight(MultiIndex({2, 1}), MultiIndex({0, 0})).is_one());
}

TEST(ZWeight, SingleFactor) {
  RatFunc r = T(1, 1) / T(2, 1);
  RatFunc expected = (Q() - Qinv() * r) / (RatFunc(1) - r);
  EXPECT_TRUE(rat_eq(z_weight(MultiIndex({1, 1}), MultiIndex({0, 1})), expected));
  EXPECT_TRUE(rat_eq(z_factor(tv(1, 1), tv(2, 1)), expected));
}

TEST(ZWeight, SingleTypeIsTrivial) {
  EXPECT_TRUE(z_weight(MultiIndex({4}), MultiIndex({2})).is_one());
}

TEST(ShiftVars, ShiftsPerType) {
  AlgElem x = AlgElem::atom(CurrF{1, tv(1, 1)}, T(2, 1));
  AlgElem y = shift_vars(x, MultiIndex({2, 1}));
  EXPECT_TRUE(alg_eq(y, AlgElem::atom(CurrF{1, tv(1, 3)}, T(2, 2))));
}

TEST(Star, UnitLaws) {
  Rng rng(1);
  MultiIndex b({2, 1});
  GenSeries a = random_scalar_series(3, b, rng);
  GenSeries one(3, b);
  EXPECT_TRUE(series_eq(star(one, a, b), a));
  EXPECT_TRUE(series_eq(star(a, one, b), a));
}

TEST(Star, FirstOrderAdds) {
  AlgElem a(T(1, 1) + RatFunc(2)), b(Q() * T(1, 1));
  GenSeries p = star(one_plus(a, 2), one_plus(b, 2), MultiIndex({2}));
  EXPECT_TRUE(alg_eq(p.coeff(MultiIndex({1})), a + b));
}

TEST(Star, SecondOrderIsSymmetrizedProduct) {
  AlgElem a(T(1, 1) + RatFunc(2)), b(Q() * T(1, 1) - RatFunc(1));
  GenSeries p = star(one_plus(a, 2), one_plus(b, 2), MultiIndex({2}));
  AlgElem raw = alg_rename(a, {{tv(1, 1), tv(1, 2)}}) * b;
  EXPECT_TRUE(alg_eq(p.coeff(MultiIndex({2})), qsym2(raw, tv(1, 1), tv(1, 2))));
}

TEST(Star, RankMismatch) {
  EXPECT_THROW(star(GenSeries(2, MultiIndex({1})), GenSeries(3, MultiIndex({1, 1})), MultiIndex({1})), RankMismatch);
}

TEST(Star, ClosedOnQsymmetricSeries) {
  Rng rng(12);
  MultiIndex b({2, 2});
  GenSeries p = star(random_scalar_series(3, b, rng), random_scalar_series(3, b, rng), b);
  for (const auto& n : indices_below(b)) EXPECT_TRUE(is_qsymmetric(p.coeff(n), Segment::canonical(n)));
}

TEST(Series, IndexOutOfBound) {
  GenSeries s(2, MultiIndex({2}));
  EXPECT_THROW(s.coeff(MultiIndex({3})), IndexOutOfBound);
  EXPECT_TRUE(s.coeff(MultiIndex({0})).scalar_part().is_one());
  EXPECT_TRUE(s.is_unital());
}

TEST(Invert, UnitInvertsToUnit) {
  GenSeries one(3, MultiIndex({2, 1}));
  EXPECT_TRUE(series_eq(invert(one, MultiIndex({2, 1})), one));
}

TEST(Invert, FirstCoefficients) {
  GenSeries e = opaque_e_series(2, MultiIndex({2}));
  GenSeries d = invert(e, MultiIndex({2}));
  EXPECT_TRUE(alg_eq(d.coeff(MultiIndex({1})), -E({tv(1, 1)})));
  AlgElem raw = -E({tv(1, 1), tv(1, 2)}) + E({tv(1, 2)}) * E({tv(1, 1)});
  EXPECT_TRUE(alg_eq(d.coeff(MultiIndex({2})), qsym2(raw, tv(1, 1), tv(1, 2))));
}

TEST(Invert, VanishesBelowDiagonal) {
  GenSeries e = opaque_e_series(3, MultiIndex({1, 1}));
  GenSeries d = invert(e, MultiIndex({1, 1}));
  EXPECT_TRUE(d.coeff(MultiIndex({0, 1})).is_zero());
}

TEST(Invert, TwoSidedOnRandomSeries) {
  Rng rng(3);
  MultiIndex b({2});
  GenSeries a = random_scalar_series(2, b, rng);
  GenSeries inv = invert(a, b);
  GenSeries one(2, b);
  EXPECT_TRUE(series_eq(star(inv, a, b), one));
  EXPECT_TRUE(series_eq(star(a, inv, b), one));
}

TEST(Invert, OrderDoesNotMatter) {
  Rng rng(6);
  MultiIndex b({2, 1});
  GenSeries a = random_scalar_series(3, b, rng);
  EXPECT_TRUE(series_eq(invert(a, b, kLexOrder), invert(a, b, kGradedOrder)));
}

TEST(Series, FromSymmetricVerifies) {
  GenSeries::Coeffs bad{{MultiIndex({2}), AlgElem(T(1, 1))}};
  EXPECT_THROW(GenSeries::from_symmetric(2, MultiIndex({2}), bad), std::exception);
}

TEST(Series, Truncation) {
  Rng rng(2);
  GenSeries a = random_scalar_series(2, MultiIndex({3}), rng);
  GenSeries t = a.truncated(MultiIndex({1}));
  EXPECT_EQ(t.bound(), MultiIndex({1}));
  EXPECT_TRUE(alg_eq(t.coeff(MultiIndex({1})), a.coeff(MultiIndex({1}))));
}

}  // namespace
}  // namespace bethe::test
