#ifndef GMMDS_SPECIAL_CASE_HPP
#define GMMDS_SPECIAL_CASE_HPP

#include <vector>

#include "gmmds/multiset.hpp"

namespace gmmds {

// True iff every pairwise intersection |Z_i ∩ Z_j| <= 1 and the k sets
// have empty common intersection. Under these hypotheses a unique multiset
// can be built directly (see build_star_selection). Assumes a valid family.
bool applies(const ZFamily& fam);

struct ReorderResult {
  ZFamily fam;            // fam.zeros[i] = original.zeros[perm[i]]
  std::vector<int> perm;  // 0-based
};

// Reorders rows so that the element of Z_2 ∩ Z_3 (if the intersection is
// nonempty) lies outside Z_1 — the premise the selection steps lean on.
// Picks the lexicographically smallest permutation achieving it; identity
// when already satisfied.
ReorderResult reorder_for_step2(const ZFamily& fam);

// Star selection S*_1..S*_k under the identity permutation, |S*_i| = i-1:
//   step 1:      S*_1 = {};
//   step 2:      the element of (Z_2 ∩ Z_3) \ Z_1, or the smallest element
//                of Z_2 \ Z_1 when Z_2 and Z_3 are disjoint;
//   step 3..k-1: the common element with each earlier Z_{i'} (i' >= 2),
//                then the common element with Z_{i+1} if new, then the
//                smallest remaining elements of Z_i;
//   step k:      S*_k = Z_k.
// Expects a family already passed through reorder_for_step2; the returned
// multiset is the union of the selections. Its uniqueness is the caller's
// oracle check (enumerate_outcomes histogram count 1).
MultisetOutcome build_star_selection(const ZFamily& fam);

}  // namespace gmmds

#endif
