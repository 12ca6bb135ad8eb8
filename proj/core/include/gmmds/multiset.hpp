#ifndef GMMDS_MULTISET_HPP
#define GMMDS_MULTISET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gmmds/symdet.hpp"

namespace gmmds {

// Family of (k-1)-subsets Z_1..Z_k of [n] (0-based columns, each sorted
// ascending). The uniqueness hypothesis requires
// |intersection_{i in I} Z_i| <= k - |I| for every nonempty I.
struct ZFamily {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> zeros;

  bool operator==(const ZFamily&) const = default;
};

// Shape/range validation (throws invalid_argument) followed by the
// hypothesis check; returns whether the hypothesis holds. For n >= k this
// delegates to the pattern module's complement-form checker; smaller n
// forces Z_i = [n] for every row, which violates the hypothesis whenever
// k >= 2.
bool zfamily_valid(const ZFamily& fam);

// One selection: |S_i| = sigma(i) - 1 with S_i inside Z_i, plus the
// multiset union of the S_i.
struct MultisetOutcome {
  std::vector<int> sigma;  // one-line permutation of 1..k
  std::vector<std::vector<int>> selections;
  std::vector<int> union_multiset;  // sorted, size k(k-1)/2
};

struct UniquenessReport {
  long long total_outcomes = 0;
  std::map<std::vector<int>, long long> histogram;
  // All multisets with count 1, in ascending key order.
  std::vector<std::vector<int>> unique_witnesses;
  bool holds = false;
  // The unique multiset reached first under the fixed enumeration order
  // (sigma in one-line lexicographic order, selections in combinadic
  // order); empty when holds is false.
  std::vector<int> witness;
};

// Exhaustive walk of all (sigma, selections) outcomes. Guarded by
// kMaxOutcomes (the closed-form total k! * prod C(k-1, d) is computed
// first); throws invalid_family when the hypothesis fails.
UniquenessReport enumerate_outcomes(const ZFamily& fam);

struct ConjectureResult {
  bool holds = false;
  std::vector<int> witness;
};

ConjectureResult check_conjecture(const ZFamily& fam);

// Consistency between the two engines: a reported unique multiset must
// appear in the symbolic determinant with coefficient +1 or -1, and an
// identically zero determinant must mean no unique multiset.
bool cross_check_with_symdet(const ZFamily& fam);

// Orbit invariant under column relabeling and row reordering: counts of
// column types (the set of rows whose Z contains the column), minimized
// lexicographically over all row permutations. Two families over the same
// n are isomorphic iff their keys and unused-column counts agree.
std::vector<int> canonical_key(const ZFamily& fam);

struct SweepOptions {
  int k = 2;
  int n_max = 0;  // 0 -> k * (k - 1)
  // Exhaustive mode: enumerate one representative per isomorphism orbit
  // (canonicalize) or every raw k-tuple of subsets (only feasible for
  // k <= 3; guarded).
  bool canonicalize = true;
  // > 0 switches to seeded sampling of this many valid families.
  long long sample = 0;
  std::uint64_t seed = 0;
};

struct SweepStats {
  long long checked = 0;
  long long passed = 0;
  long long failed = 0;
};

using SweepSink = std::function<void(const ZFamily&, const UniquenessReport&)>;

// Runs check_conjecture over the instance space, n ascending from k - 1
// (families are listed again at every n they fit in, matching the
// per-ground-set reading of the sweep). The sink sees every family in
// deterministic order regardless of worker count.
SweepStats sweep_instances(const SweepOptions& opt, const SweepSink& sink = {});

}  // namespace gmmds

#endif
