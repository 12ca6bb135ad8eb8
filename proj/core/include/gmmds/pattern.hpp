#ifndef GMMDS_PATTERN_HPP
#define GMMDS_PATTERN_HPP

#include <cstdint>
#include <vector>

#include "gmmds/fmat.hpp"

namespace gmmds {

// Exhaustive subset checks are capped at this many rows (2^k enumeration).
inline constexpr int kMaxConditionRows = 20;

// k x n binary matrix of prescribed entries: m_{i,j} = 0 marks a forced
// zero. Row supports R_i and zero sets Z_i = [n] \ R_i are derived views.
// Rows are immutable bitsets packed into 64-bit words.
class ZeroPattern {
 public:
  // rows: k vectors of n entries, each 0 or 1.
  ZeroPattern(int k, int n, const std::vector<std::vector<int>>& rows);

  // zeros: per-row sorted-or-not lists of 0-based zero columns; every other
  // column is a support column.
  static ZeroPattern from_zeros(int k, int n, const std::vector<std::vector<int>>& zeros);

  int k() const { return k_; }
  int n() const { return n_; }

  bool at(int i, int j) const {
    return (words_[i][static_cast<size_t>(j) >> 6] >> (j & 63)) & 1u;
  }
  int row_weight(int i) const;
  std::vector<int> support(int i) const;   // R_i, ascending, 0-based
  std::vector<int> zero_set(int i) const;  // Z_i, ascending, 0-based

  // Copy with entry (i, j) forced to zero.
  ZeroPattern with_zero(int i, int j) const;

  const std::vector<std::uint64_t>& row_words(int i) const { return words_[i]; }

  bool operator==(const ZeroPattern& rhs) const {
    return k_ == rhs.k_ && n_ == rhs.n_ && words_ == rhs.words_;
  }

 private:
  ZeroPattern() = default;

  int k_ = 0;
  int n_ = 0;
  std::vector<std::vector<std::uint64_t>> words_;
};

struct ConditionReport {
  bool holds = false;
  // Lexicographically smallest violating subset (0-based row indices,
  // ascending); empty exactly when holds.
  std::vector<int> witness;
  // |union of the witness rows' supports|; meaningful only with a witness.
  int union_size = 0;
};

// MDS Condition: |union_{i in I} R_i| >= n - k + |I| for every nonempty I.
// Exhaustive over all 2^k - 1 subsets in subset-lex order, so the first
// violation found is the lexicographically smallest one.
ConditionReport check_mds_condition(const ZeroPattern& pat);

// Same predicate through the complements: |intersection_{i in I} Z_i| <=
// k - |I|. Kept as an independently coded checker; must agree with the
// support form on every input.
ConditionReport check_mds_condition_zform(const ZeroPattern& pat);

// Shrinks every row support to exactly n - k + 1 columns while preserving
// the MDS Condition. Deterministic removal rule: scan rows in ascending
// order; for the first row with weight >= n - k + 2 take its two smallest
// support columns a < b, drop a if the condition survives, else drop b;
// restart the scan after each removal.
ZeroPattern reduce_supports(const ZeroPattern& pat);

// True iff g_{i,j} = 0 wherever the pattern entry is 0.
bool fits(const FMatrix& g, const ZeroPattern& pat);

}  // namespace gmmds

#endif
