#include "gmmds/symdet.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gmmds/construct.hpp"
#include "gmmds/errors.hpp"
#include "gmmds/fmat.hpp"
#include "gmmds/gf.hpp"
#include "gmmds/rng.hpp"
#include "testutil.hpp"

namespace gmmds {
namespace {

// Numeric det(A) built through the production row-polynomial path.
int numeric_det(int k, const Field& f, const std::vector<std::vector<int>>& zeros,
                const std::vector<int>& point) {
  FMatrix a(f, k, k);
  for (int i = 0; i < k; ++i) {
    const auto coeffs = build_row_polynomial(zeros[i], k, f, point);
    for (int j = 0; j < k; ++j) a.set(i, j, coeffs[j]);
  }
  return a.det();
}

TEST(SymdetTest, TwoByTwoHandOracle) {
  // Z_1 = {a3}, Z_2 = {a1}: det(A) = a1 - a3.
  const SparsePolynomial det = symbolic_det(2, 3, {{2}, {0}});
  ASSERT_EQ(det.terms.size(), 2u);
  EXPECT_EQ(det.terms.at({0}), 1);
  EXPECT_EQ(det.terms.at({2}), -1);
  EXPECT_EQ(det.dump(), "1 * a1^1\n-1 * a3^1\n");
  EXPECT_EQ(det.variable_degree(0), 1);
  EXPECT_EQ(det.variable_degree(1), 0);
  EXPECT_EQ(det.nvars, 3);
}

TEST(SymdetTest, IdenticallyZeroFamily) {
  // Equal zero sets give equal polynomial rows.
  const SparsePolynomial det = symbolic_det(2, 2, {{0}, {0}});
  EXPECT_TRUE(det.is_zero());
  EXPECT_EQ(det.dump(), "0\n");
}

TEST(SymdetTest, SingleRowIsConstantOne) {
  const SparsePolynomial det = symbolic_det(1, 4, {{}});
  ASSERT_EQ(det.terms.size(), 1u);
  EXPECT_EQ(det.terms.at({}), 1);
  EXPECT_EQ(det.dump(), "1\n");
}

TEST(SymdetTest, MonomialShapeInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 3));
    const int n = k + static_cast<int>(uniform_below(rng, 9 - k + 1));
    const ZFamily fam = testutil::random_valid_zfamily(rng, k, n);
    const SparsePolynomial det = symbolic_det(k, n, fam.zeros);
    const int total = k * (k - 1) / 2;
    for (const auto& [key, coeff] : det.terms) {
      EXPECT_EQ(static_cast<int>(key.size()), total);
      EXPECT_NE(coeff, 0);
      EXPECT_TRUE(std::is_sorted(key.begin(), key.end()));
    }
    for (int t = 0; t < n; ++t) EXPECT_LE(det.variable_degree(t), k - 1);
  }
}

TEST(SymdetTest, EvaluateMatchesNumericDeterminant) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 3));
    const int n = k + static_cast<int>(uniform_below(rng, 8 - k + 1));
    const ZFamily fam = testutil::random_valid_zfamily(rng, k, n);
    const SparsePolynomial det = symbolic_det(k, n, fam.zeros);
    const Field f = Field::smallest_at_least(n + k - 1);
    for (int pt = 0; pt < 5; ++pt) {
      std::vector<int> point(n);
      for (auto& x : point)
        x = static_cast<int>(uniform_below(rng, f.q()));  // repeats allowed
      EXPECT_EQ(det.evaluate(f, point), numeric_det(k, f, fam.zeros, point));
    }
  }
}

TEST(SymdetTest, EvaluateValidation) {
  const SparsePolynomial det = symbolic_det(2, 3, {{2}, {0}});
  const Field f = Field::make(5, 1);
  EXPECT_THROW(det.evaluate(f, {0, 1}), Error);       // variable a3 uncovered
  EXPECT_THROW(det.evaluate(f, {0, 1, 9}), Error);    // encoding out of range
  try {
    det.evaluate(f, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_variable);
  }
}

TEST(SymdetTest, NegativeCoefficientsReduceIntoField) {
  const SparsePolynomial det = symbolic_det(2, 3, {{2}, {0}});
  const Field f = Field::make(5, 1);
  // a1 - a3 at (2, _, 3) = -1 = 4
  EXPECT_EQ(det.evaluate(f, {2, 0, 3}), 4);
}

TEST(SymdetTest, AddTermCancelsToZero) {
  SparsePolynomial p;
  p.nvars = 2;
  p.add_term({0, 1}, 5);
  p.add_term({0, 1}, -5);
  EXPECT_TRUE(p.is_zero());
  p.add_term({1}, 2);
  p.add_term({1}, 3);
  EXPECT_EQ(p.terms.at({1}), 5);
}

TEST(SymdetTest, InputValidation) {
  try {
    symbolic_det(3, 5, {{0, 1}, {1}, {2, 3}});  // middle row one short
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_subset_size);
  }
  try {
    symbolic_det(2, 4, {{3}, {0, 1}});  // row too long
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_subset_size);
  }
  try {
    symbolic_det(3, 5, {{0, 1}, {1, 2}});  // row count mismatch
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
  EXPECT_THROW(symbolic_det(2, 3, {{1, 1}, {0}}), Error);  // duplicate entry
  EXPECT_THROW(symbolic_det(2, 3, {{5}, {0}}), Error);     // out of range
}

TEST(SymdetTest, OutcomeGuard) {
  // k = 7 with every C(6, d) available blows past the selection budget.
  std::vector<std::vector<int>> zeros;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> z;
    for (int c = 0; c < 7; ++c)
      if (c != i) z.push_back(c);
    zeros.push_back(std::move(z));
  }
  try {
    symbolic_det(7, 7, zeros);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

}  // namespace
}  // namespace gmmds
