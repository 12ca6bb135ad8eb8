#include "gmmds/pattern.hpp"

#include <bit>
#include <stdexcept>

#include "gmmds/errors.hpp"

namespace gmmds {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_shape(int k, int n) {
  if (k < 1 || n < k)
    throw Error(Errc::invalid_argument, "pattern requires 1 <= k <= n");
  if (n > kMaxFieldOrder)
    throw Error(Errc::too_large, "pattern column count exceeds supported range");
}

}  // namespace

ZeroPattern::ZeroPattern(int k, int n, const std::vector<std::vector<int>>& rows) {
  check_shape(k, n);
  if (static_cast<int>(rows.size()) != k)
    throw Error(Errc::invalid_argument, "row count does not match k");
  k_ = k;
  n_ = n;
  words_.assign(k, std::vector<std::uint64_t>(words_for(n), 0));
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(Errc::invalid_argument, "row length does not match n");
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1)
        throw Error(Errc::invalid_argument, "pattern entries must be 0 or 1");
      if (v) words_[i][static_cast<size_t>(j) >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
}

ZeroPattern ZeroPattern::from_zeros(int k, int n,
                                    const std::vector<std::vector<int>>& zeros) {
  check_shape(k, n);
  if (static_cast<int>(zeros.size()) != k)
    throw Error(Errc::invalid_argument, "zero-set count does not match k");
  ZeroPattern pat;
  pat.k_ = k;
  pat.n_ = n;
  const int nw = words_for(n);
  pat.words_.assign(k, std::vector<std::uint64_t>(nw, 0));
  for (int i = 0; i < k; ++i) {
    // Start from an all-ones row, then clear the listed columns.
    for (int w = 0; w < nw; ++w) pat.words_[i][w] = ~std::uint64_t{0};
    if (n & 63) pat.words_[i][nw - 1] = (std::uint64_t{1} << (n & 63)) - 1;
    for (int j : zeros[i]) {
      if (j < 0 || j >= n)
        throw Error(Errc::invalid_argument, "zero column index out of range");
      const std::uint64_t bit = std::uint64_t{1} << (j & 63);
      if (!(pat.words_[i][static_cast<size_t>(j) >> 6] & bit))
        throw Error(Errc::invalid_argument, "duplicate zero column index");
      pat.words_[i][static_cast<size_t>(j) >> 6] &= ~bit;
    }
  }
  return pat;
}

int ZeroPattern::row_weight(int i) const {
  int w = 0;
  for (std::uint64_t word : words_[i]) w += std::popcount(word);
  return w;
}

std::vector<int> ZeroPattern::support(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (at(i, j)) out.push_back(j);
  return out;
}

std::vector<int> ZeroPattern::zero_set(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (!at(i, j)) out.push_back(j);
  return out;
}

ZeroPattern ZeroPattern::with_zero(int i, int j) const {
  if (i < 0 || i >= k_ || j < 0 || j >= n_)
    throw Error(Errc::invalid_argument, "pattern index out of range");
  ZeroPattern out = *this;
  out.words_[i][static_cast<size_t>(j) >> 6] &= ~(std::uint64_t{1} << (j & 63));
  return out;
}

namespace {

void check_cap(int k) {
  if (k > kMaxConditionRows)
    throw Error(Errc::too_large, "exhaustive subset check capped at 20 rows");
}

// Walks all nonempty subsets of [k] in subset-lex order ({0} < {0,1} <
// {0,1,2} < {0,2} < {1} < ...), folding row words into a per-depth
// accumulator with `combine` (seeded from `root`). Stops at the first
// subset whose accumulator popcount violates `bad`; because the walk is
// preorder, that subset is the lexicographically smallest violation.
template <typename Combine, typename Bad>
bool subset_scan(const std::vector<std::vector<std::uint64_t>>& rows,
                 const std::vector<std::uint64_t>& root, const Combine& combine,
                 const Bad& bad, std::vector<int>* witness, int* count_out) {
  const int k = static_cast<int>(rows.size());
  const int nw = static_cast<int>(root.size());
  std::vector<std::vector<std::uint64_t>> level(k + 1, root);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int last, int depth) -> bool {
    for (int i = last + 1; i < k; ++i) {
      int count = 0;
      for (int w = 0; w < nw; ++w) {
        level[depth + 1][w] = combine(level[depth][w], rows[i][w]);
        count += std::popcount(level[depth + 1][w]);
      }
      cur.push_back(i);
      if (bad(count, static_cast<int>(cur.size()))) {
        *witness = cur;
        *count_out = count;
        return true;
      }
      if (self(self, i, depth + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(rec, -1, 0);
}

}  // namespace

ConditionReport check_mds_condition(const ZeroPattern& pat) {
  check_cap(pat.k());
  const int k = pat.k();
  const int n = pat.n();
  const int nw = static_cast<int>(pat.row_words(0).size());
  std::vector<std::vector<std::uint64_t>> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = pat.row_words(i);

  ConditionReport report;
  int count = 0;
  const bool violated = subset_scan(
      rows, std::vector<std::uint64_t>(nw, 0),
      [](std::uint64_t acc, std::uint64_t row) { return acc | row; },
      [&](int union_size, int size) { return union_size < n - k + size; },
      &report.witness, &count);
  report.holds = !violated;
  report.union_size = violated ? count : 0;
  return report;
}

ConditionReport check_mds_condition_zform(const ZeroPattern& pat) {
  check_cap(pat.k());
  const int k = pat.k();
  const int n = pat.n();
  const int nw = static_cast<int>(pat.row_words(0).size());

  // Complement rows, masked to the low n bits; the scan intersects them
  // starting from an all-ones universe.
  std::vector<std::uint64_t> universe(nw, ~std::uint64_t{0});
  if (n & 63) universe[nw - 1] = (std::uint64_t{1} << (n & 63)) - 1;
  std::vector<std::vector<std::uint64_t>> zrows(k, universe);
  for (int i = 0; i < k; ++i)
    for (int w = 0; w < nw; ++w) zrows[i][w] &= ~pat.row_words(i)[w];

  ConditionReport report;
  int count = 0;
  const bool violated = subset_scan(
      zrows, universe,
      [](std::uint64_t acc, std::uint64_t row) { return acc & row; },
      [&](int inter_size, int size) { return inter_size > k - size; },
      &report.witness, &count);
  report.holds = !violated;
  report.union_size = violated ? n - count : 0;
  return report;
}

ZeroPattern reduce_supports(const ZeroPattern& pat) {
  if (!check_mds_condition(pat).holds)
    throw Error(Errc::precondition_violated,
                "reduce_supports requires a pattern satisfying the MDS condition");
  const int target = pat.n() - pat.k() + 1;
  ZeroPattern cur = pat;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < cur.k(); ++r) {
      if (cur.row_weight(r) < target + 1) continue;
      int a = -1, b = -1;
      for (int j = 0; j < cur.n() && b < 0; ++j)
        if (cur.at(r, j)) (a < 0 ? a : b) = j;
      ZeroPattern trial = cur.with_zero(r, a);
      if (check_mds_condition(trial).holds) {
        cur = std::move(trial);
      } else {
        cur = cur.with_zero(r, b);
        if (!check_mds_condition(cur).holds)
          throw std::logic_error("support removal broke the MDS condition");
      }
      changed = true;
      break;
    }
  }
  return cur;
}

bool fits(const FMatrix& g, const ZeroPattern& pat) {
  if (g.rows() != pat.k() || g.cols() != pat.n())
    throw Error(Errc::dimension_mismatch, "matrix and pattern shapes differ");
  for (int i = 0; i < pat.k(); ++i)
    for (int j = 0; j < pat.n(); ++j)
      if (!pat.at(i, j) && g.at(i, j) != 0) return false;
  return true;
}

}  // namespace gmmds
