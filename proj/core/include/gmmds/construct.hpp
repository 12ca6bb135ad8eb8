#ifndef GMMDS_CONSTRUCT_HPP
#define GMMDS_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gmmds/fmat.hpp"
#include "gmmds/gf.hpp"
#include "gmmds/pattern.hpp"

namespace gmmds {

// Generator matrix G = A * V of a generalized Reed-Solomon code fitting a
// zero pattern: row i is the polynomial prod_{t in Z_i}(x - alpha_t)
// evaluated at alpha_1..alpha_n, so the prescribed zeros land exactly on
// Z_i. `coeff` is the k x k coefficient matrix A (last column all ones);
// G is MDS iff A is invertible.
struct GeneratorMatrix {
  Field field;
  ZeroPattern pattern;      // pattern the matrix was built for
  std::vector<int> alphas;  // n pairwise distinct element encodings
  FMatrix coeff;            // A, k x k
  FMatrix entries;          // G, k x n
  // True when the full minor oracle ran and confirmed the MDS property;
  // false when C(n, k) exceeded the verification guard.
  bool verified_mds = false;
};

enum class PointStrategy { random, exhaustive };

struct FindOptions {
  PointStrategy strategy = PointStrategy::random;
  std::uint64_t seed = 0;
  long long max_tries = 0;  // 0 -> 10 * (n + k)
};

struct ConstructOptions {
  std::optional<int> q;  // field order; default smallest prime power >= n+k-1
  PointStrategy strategy = PointStrategy::random;
  std::uint64_t seed = 0;
  long long max_tries = 0;
};

// Coefficients of prod_{t in zero_set}(x - alpha_t), low degree first,
// expanded root by root; length k = |zero_set| + 1, leading coefficient 1.
std::vector<int> build_row_polynomial(const std::vector<int>& zero_set, int k,
                                      const Field& field,
                                      const std::vector<int>& alphas);

// Builds A and G for a reduced pattern (every row weight n-k+1) at the
// given distinct points. G is computed twice, by direct evaluation and as
// A * V against the Vandermonde matrix, and the two must agree; the
// support of G must equal the pattern exactly.
GeneratorMatrix assemble(const ZeroPattern& pat_reduced, const Field& field,
                         const std::vector<int>& alphas);

// Searches for n distinct points making det(A) nonzero. Requires
// q >= n + k - 1. Random strategy: seeded uniform distinct tuples, up to
// max_tries. Exhaustive strategy: lexicographic scan of distinct tuples,
// guarded by q^n <= 10^7. When the determinant expansion fits the outcome
// guard it is computed first, and an identically zero determinant is
// reported instead of a futile search.
std::vector<int> find_evaluation_points(const ZeroPattern& pat_reduced,
                                        const Field& field,
                                        const FindOptions& opt = {});

// Full pipeline: condition check, support reduction, field selection,
// point search, assembly, MDS verification. The returned matrix fits the
// original pattern (reduction only adds zeros).
GeneratorMatrix construct_mds(const ZeroPattern& pat,
                              const ConstructOptions& opt = {});

}  // namespace gmmds

#endif
