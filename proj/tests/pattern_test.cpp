#include "gmmds/pattern.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gmmds/errors.hpp"
#include "gmmds/fmat.hpp"
#include "gmmds/rng.hpp"
#include "testutil.hpp"

namespace gmmds {
namespace {

ZeroPattern example1() {
  return ZeroPattern::from_zeros(3, 6, {{4, 5}, {0, 3}, {2, 3}});
}

TEST(PatternTest, ConstructionAndViews) {
  const ZeroPattern pat = example1();
  EXPECT_EQ(pat.k(), 3);
  EXPECT_EQ(pat.n(), 6);
  EXPECT_EQ(pat.row_weight(0), 4);
  EXPECT_EQ(pat.support(1), (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(pat.zero_set(2), (std::vector<int>{2, 3}));
  EXPECT_TRUE(pat.at(0, 0));
  EXPECT_FALSE(pat.at(0, 4));

  // rows form and zeros form agree
  const ZeroPattern byrows(3, 6,
                           {{1, 1, 1, 1, 0, 0},
                            {0, 1, 1, 0, 1, 1},
                            {1, 1, 0, 0, 1, 1}});
  EXPECT_EQ(pat, byrows);
}

TEST(PatternTest, ConstructionErrors) {
  EXPECT_THROW(ZeroPattern::from_zeros(3, 6, {{0, 0}, {1, 2}, {3, 4}}), Error);
  EXPECT_THROW(ZeroPattern::from_zeros(3, 2, {{0}, {1}, {0}}), Error);  // k > n
  EXPECT_THROW(ZeroPattern(0, 3, {}), Error);
  try {
    ZeroPattern::from_zeros(2, 3, {{7}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

TEST(PatternTest, CheckHoldsOnExample) {
  EXPECT_TRUE(check_mds_condition(example1()).holds);
  EXPECT_TRUE(check_mds_condition(example1()).witness.empty());

  std::vector<std::vector<int>> ones(4, std::vector<int>(7, 1));
  EXPECT_TRUE(check_mds_condition(ZeroPattern(4, 7, ones)).holds);
}

TEST(PatternTest, CheckViolationWitness) {
  // Singleton row weight 2 < n-k+1 = 3 violates before the pair does.
  const ZeroPattern pat(2, 4, {{1, 1, 0, 0}, {1, 1, 0, 0}});
  const ConditionReport rep = check_mds_condition(pat);
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.witness, (std::vector<int>{0}));
  EXPECT_EQ(rep.union_size, 2);
}

TEST(PatternTest, WitnessIsFirstInSubsetLexOrder) {
  // All singletons and pairs {0,1}, {0,2} satisfy; {1,2} and {0,1,2} do
  // not. Subset-lex preorder reaches {0,1,2} before {1,2}.
  const ZeroPattern pat = ZeroPattern::from_zeros(3, 4, {{0, 3}, {0, 2}, {0, 2}});
  const ConditionReport rep = check_mds_condition(pat);
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(rep.witness, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(rep.union_size, 3);
  const ConditionReport zrep = check_mds_condition_zform(pat);
  EXPECT_EQ(zrep.witness, rep.witness);
  EXPECT_EQ(zrep.union_size, rep.union_size);
}

TEST(PatternTest, FormsAgreeOnRandomPatterns) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 5));
    const int n = k + static_cast<int>(uniform_below(rng, 9 - k + 1));
    std::vector<std::vector<int>> zeros(k);
    for (auto& z : zeros)
      z = testutil::random_subset(rng, n, static_cast<int>(uniform_below(rng, n + 1)));
    const ZeroPattern pat = ZeroPattern::from_zeros(k, n, zeros);
    const ConditionReport a = check_mds_condition(pat);
    const ConditionReport b = check_mds_condition_zform(pat);
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.holds, testutil::naive_mds_condition(pat));
    if (!a.holds) EXPECT_EQ(a.union_size, b.union_size);
  }
}

TEST(PatternTest, AddingSupportNeverBreaksTheCondition) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 4));
    const int n = k + static_cast<int>(uniform_below(rng, 9 - k + 1));
    std::vector<std::vector<int>> zeros(k);
    for (auto& z : zeros)
      z = testutil::random_subset(rng, n, static_cast<int>(uniform_below(rng, n)));
    const ZeroPattern pat = ZeroPattern::from_zeros(k, n, zeros);
    // drop one prescribed zero somewhere: supports only grow
    const int row = static_cast<int>(uniform_below(rng, k));
    auto grown_zeros = zeros;
    for (int i = 0; i < k; ++i) {
      auto& z = grown_zeros[(row + i) % k];
      if (!z.empty()) {
        z.erase(z.begin());
        break;
      }
    }
    const ZeroPattern grown = ZeroPattern::from_zeros(k, n, grown_zeros);
    if (check_mds_condition(pat).holds)
      EXPECT_TRUE(check_mds_condition(grown).holds);
  }
}

TEST(PatternTest, ReduceHandOracle) {
  std::vector<std::vector<int>> ones(2, std::vector<int>(3, 1));
  const ZeroPattern reduced = reduce_supports(ZeroPattern(2, 3, ones));
  EXPECT_EQ(reduced.support(0), (std::vector<int>{1, 2}));
  EXPECT_EQ(reduced.support(1), (std::vector<int>{0, 2}));
}

TEST(PatternTest, ReduceLeavesReducedInputAlone) {
  const ZeroPattern pat = example1();  // weights already n-k+1 = 4
  EXPECT_EQ(reduce_supports(pat), pat);

  std::vector<std::vector<int>> one_row(1, std::vector<int>(3, 1));
  const ZeroPattern wide(1, 3, one_row);  // n-k+1 = 3 = n
  EXPECT_EQ(reduce_supports(wide), wide);
}

TEST(PatternTest, ReducePropertySuite) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 5));
    const int n = k + static_cast<int>(uniform_below(rng, 10 - k + 1));
    const ZeroPattern pat = testutil::random_satisfying_pattern(rng, k, n);
    const ZeroPattern red = reduce_supports(pat);
    for (int i = 0; i < k; ++i) {
      EXPECT_EQ(red.row_weight(i), n - k + 1);
      for (int c : red.support(i)) EXPECT_TRUE(pat.at(i, c));
    }
    EXPECT_TRUE(check_mds_condition(red).holds);
    EXPECT_EQ(reduce_supports(red), red);
  }
}

TEST(PatternTest, ReduceRejectsViolatingInput) {
  const ZeroPattern pat(2, 4, {{1, 1, 0, 0}, {1, 1, 0, 0}});
  try {
    reduce_supports(pat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition_violated);
  }
}

TEST(PatternTest, TooManyRowsGuard) {
  const int k = kMaxConditionRows + 1;
  std::vector<std::vector<int>> ones(k, std::vector<int>(k, 1));
  const ZeroPattern pat(k, k, ones);
  try {
    check_mds_condition(pat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(PatternTest, WithZero) {
  const ZeroPattern pat = ZeroPattern::from_zeros(2, 4, {{0}, {1}});
  const ZeroPattern more = pat.with_zero(0, 2);
  EXPECT_EQ(more.zero_set(0), (std::vector<int>{0, 2}));
  EXPECT_EQ(more.zero_set(1), (std::vector<int>{1}));
  EXPECT_EQ(pat.zero_set(0), (std::vector<int>{0}));  // original untouched
  EXPECT_THROW(pat.with_zero(0, 9), Error);
  EXPECT_THROW(pat.with_zero(-1, 0), Error);
}

TEST(PatternTest, Fits) {
  const Field f = Field::make(5, 1);
  const ZeroPattern pat = ZeroPattern::from_zeros(2, 3, {{2}, {0}});
  FMatrix g(f, 2, 3);
  g.set(0, 0, 3);
  g.set(0, 1, 4);
  g.set(1, 1, 1);
  g.set(1, 2, 2);
  EXPECT_TRUE(fits(g, pat));

  FMatrix zero(f, 2, 3);
  EXPECT_TRUE(fits(zero, pat));

  g.set(0, 2, 1);  // lands on a prescribed zero
  EXPECT_FALSE(fits(g, pat));

  FMatrix wrong(f, 2, 4);
  EXPECT_THROW(fits(wrong, pat), Error);
}

}  // namespace
}  // namespace gmmds
