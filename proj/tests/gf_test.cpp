#include "gmmds/gf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gmmds/errors.hpp"
#include "gmmds/rng.hpp"

namespace gmmds {
namespace {

testing::AssertionResult throws_code(const std::function<void()>& fn, Errc want) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == want) return testing::AssertionSuccess();
    return testing::AssertionFailure()
           << "threw " << errc_name(e.code()) << ", wanted " << errc_name(want);
  }
  return testing::AssertionFailure() << "did not throw";
}

TEST(GfTest, PrimeFieldArithmetic) {
  const Field f5 = Field::make(5, 1);
  EXPECT_EQ(f5.q(), 5);
  EXPECT_TRUE(f5.spec().modulus.empty());
  EXPECT_EQ(f5.add(2, 4), 1);
  EXPECT_EQ(f5.sub(1, 3), 3);
  EXPECT_EQ(f5.neg(2), 3);
  EXPECT_EQ(f5.mul(2, 3), 1);
  EXPECT_EQ(f5.inv(2), 3);
  EXPECT_EQ(f5.pow(2, 4), 1);
  EXPECT_EQ(f5.pow(3, 0), 1);
}

TEST(GfTest, DefaultModulusIsLexSmallest) {
  // Compared low-degree-first: GF(4) has a single irreducible anyway, GF(8)
  // picks 1 + x^2 + x^3 over 1 + x + x^3, GF(9) picks 1 + x^2.
  EXPECT_EQ(Field::make(2, 2).spec().modulus, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Field::make(2, 3).spec().modulus, (std::vector<int>{1, 0, 1, 1}));
  EXPECT_EQ(Field::make(3, 2).spec().modulus, (std::vector<int>{1, 0, 1}));
}

TEST(GfTest, ExtensionFieldKnownProducts) {
  const Field f4 = Field::make(2, 2);
  // x * (x + 1) = x^2 + x = 1 (mod x^2 + x + 1).
  EXPECT_EQ(f4.mul(2, 3), 1);
  EXPECT_EQ(f4.add(2, 3), 1);  // characteristic-2 addition is xor of digits
  EXPECT_EQ(f4.inv(2), 3);

  const Field f9 = Field::make(3, 2);
  // x * x = x^2 = -1 = 2 (mod x^2 + 1).
  EXPECT_EQ(f9.mul(3, 3), 2);
}

TEST(GfTest, PowAndFermat) {
  for (const auto& f : {Field::make(7, 1), Field::make(2, 4), Field::make(3, 3)}) {
    for (int a = 1; a < f.q(); ++a) {
      EXPECT_EQ(f.pow(a, f.q() - 1), 1);
      EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    }
    EXPECT_EQ(f.pow(0, 5), 0);
  }
}

TEST(GfTest, NegativeExponent) {
  const Field f = Field::make(11, 1);
  EXPECT_EQ(f.pow(2, -1), f.inv(2));
  EXPECT_EQ(f.pow(2, -3), f.inv(f.pow(2, 3)));
}

TEST(GfTest, AxiomsSpotCheck) {
  const Field f = Field::make(2, 3);
  for (int a = 0; a < f.q(); ++a)
    for (int b = 0; b < f.q(); ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      for (int c = 0; c < f.q(); ++c) {
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
}

TEST(GfTest, LargeUntabledFieldStillExact) {
  const Field f = Field::make(2, 16);
  EXPECT_EQ(f.q(), 65536);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + static_cast<int>(uniform_below(rng, f.q() - 1));
    const int b = 1 + static_cast<int>(uniform_below(rng, f.q() - 1));
    EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    EXPECT_EQ(f.mul(f.mul(a, b), f.inv(b)), a);
  }
}

TEST(GfTest, ExplicitModulus) {
  // The other irreducible cubic over F_2 gives a different but valid field.
  const Field f = Field::make(2, 3, {1, 1, 0, 1});
  EXPECT_EQ(f.spec().modulus, (std::vector<int>{1, 1, 0, 1}));
  for (int a = 1; a < 8; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
}

TEST(GfTest, SmallestAtLeast) {
  EXPECT_EQ(Field::smallest_at_least(2).q(), 2);
  EXPECT_EQ(Field::smallest_at_least(6).q(), 7);
  EXPECT_EQ(Field::smallest_at_least(8).q(), 8);
  EXPECT_EQ(Field::smallest_at_least(10).q(), 11);
  EXPECT_EQ(Field::smallest_at_least(14).q(), 16);
  EXPECT_EQ(Field::smallest_at_least(26).q(), 27);
  EXPECT_EQ(Field::smallest_at_least(65536).q(), 65536);
}

TEST(GfTest, Errors) {
  EXPECT_TRUE(throws_code([] { Field::make(4, 1); }, Errc::not_prime));
  EXPECT_TRUE(throws_code([] { Field::make(2, 0); }, Errc::invalid_argument));
  EXPECT_TRUE(throws_code([] { Field::make(2, 17); }, Errc::unsupported_field_size));
  EXPECT_TRUE(
      throws_code([] { Field::make(2, 2, {1, 0, 1}); }, Errc::reducible_modulus));
  EXPECT_TRUE(
      throws_code([] { Field::make(2, 2, {1, 1, 1, 1}); }, Errc::degree_mismatch));
  EXPECT_TRUE(
      throws_code([] { Field::make(5, 1, {1, 1}); }, Errc::degree_mismatch));
  EXPECT_TRUE(throws_code([] { Field::make(7, 1).inv(0); }, Errc::division_by_zero));
  EXPECT_TRUE(throws_code([] { Field::make(7, 1).pow(0, -2); },
                          Errc::division_by_zero));
  EXPECT_TRUE(
      throws_code([] { Field::smallest_at_least(1); }, Errc::invalid_argument));
  EXPECT_TRUE(throws_code([] { Field::smallest_at_least(65537); },
                          Errc::unsupported_field_size));
}

TEST(GfTest, ElementsAndCheckedInterface) {
  const Field f = Field::make(3, 1);
  const auto all = f.elements();
  ASSERT_EQ(all.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(all[i].value(), i);

  const FieldElement a = f.element(2);
  const FieldElement b = f.element(2);
  EXPECT_EQ(a + b, f.element(1));
  EXPECT_EQ(a * b, f.element(1));
  EXPECT_EQ(-a, f.element(1));
  EXPECT_EQ(a - b, f.zero());
  EXPECT_EQ(a / b, f.one());
  EXPECT_EQ(a.inv(), a.pow(-1));
  EXPECT_TRUE(f.zero().is_zero());

  EXPECT_TRUE(throws_code([&] { f.element(3); }, Errc::invalid_argument));
  EXPECT_TRUE(throws_code([&] { f.element(-1); }, Errc::invalid_argument));
  const Field g = Field::make(5, 1);
  EXPECT_TRUE(throws_code([&] { (void)(f.element(1) + g.element(1)); },
                          Errc::field_mismatch));
}

TEST(GfTest, FieldEqualitySemantics) {
  const Field a = Field::make(2, 2);
  const Field b = Field::make(2, 2);
  const Field c = Field::make(2, 3);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_NE(Field::make(2, 3), Field::make(2, 3, {1, 1, 0, 1}));
}

TEST(GfTest, IrreducibilityHelper) {
  EXPECT_TRUE(gfdetail::is_prime(2));
  EXPECT_TRUE(gfdetail::is_prime(65521));
  EXPECT_FALSE(gfdetail::is_prime(1));
  EXPECT_FALSE(gfdetail::is_prime(91));
  EXPECT_TRUE(gfdetail::is_irreducible({1, 1, 1}, 2));    // x^2+x+1
  EXPECT_FALSE(gfdetail::is_irreducible({1, 0, 1}, 2));   // (x+1)^2
  EXPECT_TRUE(gfdetail::is_irreducible({1, 0, 1}, 3));    // x^2+1 over F_3
  EXPECT_FALSE(gfdetail::is_irreducible({1, 1, 1, 1}, 3));  // (x+1)(x^2+1)
}

}  // namespace
}  // namespace gmmds
