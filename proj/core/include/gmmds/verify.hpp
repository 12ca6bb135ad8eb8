#ifndef GMMDS_VERIFY_HPP
#define GMMDS_VERIFY_HPP

#include <vector>

#include "gmmds/fmat.hpp"

namespace gmmds {

inline constexpr long long kMaxMinorChecks = 1'000'000;   // C(n, k) cap
inline constexpr long long kMaxCodewordEnum = 1'000'000;  // q^k cap

struct MdsReport {
  bool holds = false;
  // Lexicographically first singular column set (0-based, ascending);
  // empty exactly when holds.
  std::vector<int> failing_columns;
};

// Brute-force MDS oracle: every k x k minor of the k x n matrix must be
// nonsingular. Deliberately does not reuse FMatrix::det — this is the
// acceptance authority for the construction pipeline, so it carries its
// own elimination. Minor scanning is chunked across worker threads (see
// GMMDS_THREADS) with the verdict defined as the minimum failing rank,
// identical to a sequential scan.
MdsReport is_mds(const FMatrix& g);

// Row-level sanity for reduced-pattern generators: every row has weight
// exactly n - k + 1.
bool min_weight_check(const FMatrix& g);

// Minimum weight over all q^k - 1 nonzero codewords u * G. Equals
// n - k + 1 exactly for MDS generators (Singleton equality); 0 signals a
// rank-deficient G. Independent of the minor oracle.
int codeword_min_weight(const FMatrix& g);

}  // namespace gmmds

#endif
