#include "support.hpp"

namespace bethe::test {
namespace {

TEST(FreeAlg, UnitLeavesWordsAlone) {
  AlgElem w = F(1, tv(1, 2)) * F(2, tv(2, 1));
  EXPECT_TRUE(alg_eq(AlgElem(1) * w, w));
  EXPECT_TRUE(alg_eq(w * AlgElem(1), w));
}

TEST(FreeAlg, ProductConcatenatesAndMultipliesCoefficients) {
  RatFunc c1 = T(1, 1) + RatFunc(2);
  RatFunc c2 = RatFunc(1) / (T(1, 2) - Q());
  AlgElem x = AlgElem::atom(CurrF{1, tv(1, 1)}, c1);
  AlgElem y = AlgElem::atom(CurrF{2, tv(2, 1)}, c2);
  AlgElem xy = x * y;
  ASSERT_EQ(xy.size(), 1u);
  Word expected{CurrF{1, tv(1, 1)}, CurrF{2, tv(2, 1)}};
  EXPECT_TRUE(rat_eq(xy.coefficient(expected), c1 * c2));
}

TEST(FreeAlg, OrderedProductPutsLargerIndexLeft) {
  AlgElem p(1);
  for (int l = 2; l >= 1; --l) p = p * F(1, tv(1, l));
  Word expected{CurrF{1, tv(1, 2)}, CurrF{1, tv(1, 1)}};
  EXPECT_TRUE(p.coefficient(expected).is_one());
  EXPECT_EQ(p.size(), 1u);
}

TEST(FreeAlg, RenameTouchesAtomsAndCoefficients) {
  AlgElem x = AlgElem::atom(CurrF{1, tv(1, 1)}, T(1, 1));
  AlgElem y = alg_rename(x, {{tv(1, 1), tv(1, 2)}});
  EXPECT_TRUE(alg_eq(y, AlgElem::atom(CurrF{1, tv(1, 2)}, T(1, 2))));
  EXPECT_TRUE(alg_eq(alg_rename(x, {}), x));
}

TEST(FreeAlg, RenameRoundTrip) {
  Rng rng(3);
  RenameMap fwd{{tv(1, 1), tv(1, 2)}, {tv(1, 2), tv(1, 3)}, {tv(1, 3), tv(1, 1)}};
  RenameMap back;
  for (const auto& [a, b] : fwd) back.emplace(b, a);
  for (int k = 0; k < 10; ++k) {
    AlgElem x = random_elem(rng, 3);
    EXPECT_TRUE(alg_eq(alg_rename(alg_rename(x, fwd), back), x));
  }
}

TEST(FreeAlg, RenameInsidePayload) {
  AlgElem x = AlgElem::atom(make_opaque("Pminus", {tv(1, 1)}, Word{CurrF{1, tv(1, 1)}}));
  AlgElem y = alg_rename(x, {{tv(1, 1), tv(1, 4)}});
  EXPECT_TRUE(alg_eq(y, AlgElem::atom(make_opaque("Pminus", {tv(1, 4)}, Word{CurrF{1, tv(1, 4)}}))));
}

TEST(FreeAlg, SelfDifferenceIsZero) {
  Rng rng(8);
  AlgElem x = random_elem(rng, 2);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(FreeAlg, UnreducedCoefficientsCompareEqual) {
  RatFunc a = (T(1, 1) * T(1, 1) - RatFunc(1)) / (T(1, 1) - RatFunc(1));
  RatFunc b = T(1, 1) + RatFunc(1);
  AlgElem x = AlgElem::atom(CurrF{1, tv(1, 1)}, a);
  AlgElem y = AlgElem::atom(CurrF{1, tv(1, 1)}, b);
  EXPECT_TRUE(alg_eq(x, y));
}

TEST(FreeAlg, NonCommutative) {
  AlgElem a = F(1, tv(1, 1)), b = F(1, tv(1, 2));
  EXPECT_FALSE(alg_eq(a * b, b * a));
}

TEST(FreeAlg, AssociativeAndDistributive) {
  Rng rng(17);
  for (int k = 0; k < 8; ++k) {
    AlgElem x = random_elem(rng, 3), y = random_elem(rng, 3), z = random_elem(rng, 3);
    EXPECT_TRUE(alg_eq((x * y) * z, x * (y * z)));
    EXPECT_TRUE(alg_eq(x * (y + z), x * y + x * z));
  }
}

TEST(FreeAlg, RenameDistributesOverProduct) {
  Rng rng(23);
  RenameMap m{{tv(1, 1), tv(1, 3)}, {tv(1, 3), tv(1, 1)}};
  for (int k = 0; k < 8; ++k) {
    AlgElem x = random_elem(rng, 3), y = random_elem(rng, 3);
    EXPECT_TRUE(alg_eq(alg_rename(x * y, m), alg_rename(x, m) * alg_rename(y, m)));
  }
}

TEST(FreeAlg, EqualityIsEquivalence) {
  Rng rng(31);
  AlgElem x = random_elem(rng, 2);
  AlgElem y = x + AlgElem(0);
  AlgElem z = (RatFunc(2) * y) - y;
  EXPECT_TRUE(alg_eq(x, x));
  EXPECT_TRUE(alg_eq(x, y) && alg_eq(y, x));
  EXPECT_TRUE(alg_eq(y, z) && alg_eq(x, z));
}

TEST(FreeAlg, Rendering) {
  EXPECT_EQ(to_string(AlgElem(1)), "1");
  EXPECT_EQ(to_string(AlgElem()), "0");
  EXPECT_EQ(to_string(F(1, VarLabel::spectral()) * F(2, VarLabel::spectral())), "F1(t)*F2(t)");
}

TEST(FreeAlg, OpaqueVocabularyEnforced) {
  EXPECT_THROW(make_opaque("NotAName", {tv(1, 1)}), std::exception);
  EXPECT_NO_THROW(make_opaque("E", {tv(1, 1)}));
}

}  // namespace
}  // namespace bethe::test
