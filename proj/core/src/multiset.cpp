#include "gmmds/multiset.hpp"

#include <algorithm>
#include <thread>

#include "gmmds/errors.hpp"
#include "gmmds/parallel.hpp"
#include "gmmds/pattern.hpp"
#include "gmmds/rng.hpp"

namespace gmmds {

namespace {

void require_wellformed(const ZFamily& fam) {
  if (fam.k < 1 || fam.n < 0)
    throw Error(Errc::invalid_argument, "family requires k >= 1 and n >= 0");
  if (fam.k > 20)
    throw Error(Errc::too_large, "family row count capped at 20");
  if (static_cast<int>(fam.zeros.size()) != fam.k)
    throw Error(Errc::invalid_argument, "zero-set count does not match k");
  for (const auto& z : fam.zeros) {
    if (static_cast<int>(z.size()) != fam.k - 1)
      throw Error(Errc::bad_subset_size, "each zero set must have k - 1 elements");
    for (size_t i = 0; i < z.size(); ++i) {
      if (z[i] < 0 || z[i] >= fam.n)
        throw Error(Errc::invalid_argument, "zero column index out of range");
      if (i > 0 && z[i] <= z[i - 1])
        throw Error(Errc::invalid_argument,
                    "zero sets must be sorted without repeats");
    }
  }
}

long long total_outcome_count(int k) {
  long long total = 1;
  for (int d = 0; d < k && total <= kMaxOutcomes; ++d) {
    long long c = 1;
    for (int i = 1; i <= d; ++i) c = c * (k - 1 - d + i) / i;
    total *= c;
  }
  for (int i = 2; i <= k && total <= kMaxOutcomes; ++i) total *= i;
  return total;
}

}  // namespace

bool zfamily_valid(const ZFamily& fam) {
  require_wellformed(fam);
  if (fam.k == 1) return true;  // Z_1 = {} is the only well-formed row
  if (fam.n < fam.k) return false;
  return check_mds_condition_zform(
             ZeroPattern::from_zeros(fam.k, fam.n, fam.zeros))
      .holds;
}

UniquenessReport enumerate_outcomes(const ZFamily& fam) {
  if (!zfamily_valid(fam))
    throw Error(Errc::invalid_family, "family violates the uniqueness hypothesis");
  const int k = fam.k;
  const long long expected = total_outcome_count(k);
  if (expected > kMaxOutcomes)
    throw Error(Errc::too_large, "outcome count exceeds the enumeration guard");

  struct Cell {
    long long count = 0;
    long long first = 0;
  };
  std::map<std::vector<int>, Cell> hist;

  long long counter = 0;
  std::vector<int> s(k);  // sigma(i) = s[i] + 1, so |S_i| = s[i]
  for (int i = 0; i < k; ++i) s[i] = i;
  std::vector<int> key;
  key.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  do {
    auto rec = [&](auto&& self, int row) -> void {
      if (row == k) {
        std::vector<int> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        auto [it, inserted] = hist.emplace(std::move(sorted), Cell{0, counter});
        ++it->second.count;
        ++counter;
        return;
      }
      const auto& z = fam.zeros[row];
      const int need = s[row];
      auto comb = [&](auto&& cself, int start, int left) -> void {
        if (left == 0) {
          self(self, row + 1);
          return;
        }
        for (int idx = start; idx <= static_cast<int>(z.size()) - left; ++idx) {
          key.push_back(z[idx]);
          cself(cself, idx + 1, left - 1);
          key.pop_back();
        }
      };
      comb(comb, 0, need);
    };
    rec(rec, 0);
  } while (std::next_permutation(s.begin(), s.end()));

  if (counter != expected)
    throw std::logic_error("outcome count disagrees with the closed form");

  UniquenessReport report;
  report.total_outcomes = counter;
  long long best_first = -1;
  for (const auto& [key_ms, cell] : hist) {
    report.histogram.emplace(key_ms, cell.count);
    if (cell.count == 1) {
      report.unique_witnesses.push_back(key_ms);
      if (best_first < 0 || cell.first < best_first) {
        best_first = cell.first;
        report.witness = key_ms;
      }
    }
  }
  report.holds = !report.unique_witnesses.empty();
  return report;
}

ConjectureResult check_conjecture(const ZFamily& fam) {
  UniquenessReport report = enumerate_outcomes(fam);
  return ConjectureResult{report.holds, std::move(report.witness)};
}

bool cross_check_with_symdet(const ZFamily& fam) {
  const UniquenessReport report = enumerate_outcomes(fam);
  const SparsePolynomial det = symbolic_det(fam.k, fam.n, fam.zeros);
  if (det.is_zero()) return !report.holds;
  if (!report.holds) return true;
  const auto it = det.terms.find(report.witness);
  return it != det.terms.end() && (it->second == 1 || it->second == -1);
}

std::vector<int> canonical_key(const ZFamily& fam) {
  require_wellformed(fam);
  const int k = fam.k;
  const int types = (1 << k) - 1;

  std::vector<int> counts(types + 1, 0);
  std::vector<int> column_type(fam.n, 0);
  for (int i = 0; i < k; ++i)
    for (int j : fam.zeros[i]) column_type[j] |= 1 << i;
  for (int j = 0; j < fam.n; ++j) ++counts[column_type[j]];

  std::vector<int> best;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::vector<int> candidate(types);
  do {
    for (int mask = 1; mask <= types; ++mask) {
      int image = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) image |= 1 << perm[i];
      candidate[mask - 1] = counts[image];
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Family over [n] from per-type column counts: columns are dealt out in
// ascending type-mask order, trailing columns stay unused.
ZFamily family_from_counts(int k, int n, const std::vector<int>& counts) {
  ZFamily fam;
  fam.k = k;
  fam.n = n;
  fam.zeros.assign(k, {});
  int col = 0;
  for (int mask = 1; mask < (1 << k); ++mask)
    for (int c = 0; c < counts[mask - 1]; ++c, ++col)
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) fam.zeros[i].push_back(col);
  return fam;
}

struct FamilyRecord {
  ZFamily fam;
  UniquenessReport report;
};

// Evaluates check targets over worker threads, preserving input order.
void evaluate_families(std::vector<FamilyRecord>& records) {
  const int workers = static_cast<int>(std::min<size_t>(
      worker_count(), (records.size() + 3) / 4));
  auto run = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      records[i].report = enumerate_outcomes(records[i].fam);
  };
  if (workers <= 1) {
    run(0, records.size());
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w)
    threads.emplace_back(run, records.size() * w / workers,
                         records.size() * (w + 1) / workers);
  for (auto& t : threads) t.join();
}

void drain(std::vector<FamilyRecord>& records, SweepStats& stats,
           const SweepSink& sink) {
  evaluate_families(records);
  for (auto& rec : records) {
    ++stats.checked;
    if (rec.report.holds)
      ++stats.passed;
    else
      ++stats.failed;
    if (sink) sink(rec.fam, rec.report);
  }
  records.clear();
}

}  // namespace

SweepStats sweep_instances(const SweepOptions& opt, const SweepSink& sink) {
  const int k = opt.k;
  if (k < 1 || k > 20)
    throw Error(Errc::invalid_argument, "sweep requires 1 <= k <= 20");
  if (total_outcome_count(k) > kMaxOutcomes)
    throw Error(Errc::too_large, "per-family outcome count exceeds the guard");
  const int n_max = opt.n_max > 0 ? opt.n_max : k * (k - 1);
  const int n_lo = k - 1;
  if (n_max > 64)
    throw Error(Errc::too_large, "sweep ground set capped at 64 columns");

  SweepStats stats;
  std::vector<FamilyRecord> batch;
  constexpr size_t kBatch = 1024;

  if (opt.sample > 0) {
    std::mt19937_64 rng(opt.seed);
    std::vector<int> pool;
    for (long long draws = 0; draws < opt.sample; ++draws) {
      // n below k only admits invalid families (see zfamily_valid), so
      // sampling starts at k.
      const int span_lo = std::min(std::max(k, n_lo), n_max);
      ZFamily fam;
      bool found = false;
      for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
        const int n = span_lo +
                      static_cast<int>(uniform_below(
                          rng, static_cast<std::uint64_t>(n_max - span_lo + 1)));
        fam.k = k;
        fam.n = n;
        fam.zeros.assign(k, {});
        pool.resize(n);
        for (int v = 0; v < n; ++v) pool[v] = v;
        for (int i = 0; i < k; ++i) {
          partial_shuffle(rng, pool, k - 1);
          fam.zeros[i].assign(pool.begin(), pool.begin() + (k - 1));
          std::sort(fam.zeros[i].begin(), fam.zeros[i].end());
        }
        found = zfamily_valid(fam);
      }
      if (!found) continue;  // exhausted the retry budget for this draw
      batch.push_back(FamilyRecord{std::move(fam), {}});
      if (batch.size() >= kBatch) drain(batch, stats, sink);
    }
    drain(batch, stats, sink);
    return stats;
  }

  if (opt.canonicalize) {
    if (k > 5)
      throw Error(Errc::too_large, "exhaustive sweep capped at k <= 5");
    const int types = (1 << k) - 1;
    for (int n = n_lo; n <= n_max; ++n) {
      std::vector<int> counts(types, 0);
      std::vector<int> row_left(k, k - 1);
      auto rec = [&](auto&& self, int mask, int cols_left) -> void {
        if (mask > types) {
          for (int i = 0; i < k; ++i)
            if (row_left[i] != 0) return;
          ZFamily fam = family_from_counts(k, n, counts);
          if (canonical_key(fam) != counts) return;  // not the orbit representative
          if (!zfamily_valid(fam)) return;
          batch.push_back(FamilyRecord{std::move(fam), {}});
          if (batch.size() >= kBatch) drain(batch, stats, sink);
          return;
        }
        int cap = cols_left;
        for (int i = 0; i < k; ++i)
          if (mask & (1 << i)) cap = std::min(cap, row_left[i]);
        for (int c = 0; c <= cap; ++c) {
          counts[mask - 1] = c;
          for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) row_left[i] -= c;
          self(self, mask + 1, cols_left - c);
          for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) row_left[i] += c;
        }
        counts[mask - 1] = 0;
      };
      rec(rec, 1, n);
    }
    drain(batch, stats, sink);
    return stats;
  }

  // Raw mode: every ordered k-tuple of (k-1)-subsets, for the
  // orbit-agreement check against the canonical mode.
  if (k > 3)
    throw Error(Errc::too_large, "raw sweep only feasible for k <= 3");
  for (int n = n_lo; n <= n_max; ++n) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> comb(k - 1);
    for (int i = 0; i < k - 1; ++i) comb[i] = i;
    if (k == 1) {
      subsets.push_back({});
    } else if (n >= k - 1) {
      while (true) {
        subsets.push_back(comb);
        int i = k - 2;
        while (i >= 0 && comb[i] == n - (k - 1) + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    std::vector<int> pick(k, 0);
    auto rec = [&](auto&& self, int row) -> void {
      if (row == k) {
        ZFamily fam;
        fam.k = k;
        fam.n = n;
        for (int i = 0; i < k; ++i) fam.zeros.push_back(subsets[pick[i]]);
        if (!zfamily_valid(fam)) return;
        batch.push_back(FamilyRecord{std::move(fam), {}});
        if (batch.size() >= kBatch) drain(batch, stats, sink);
        return;
      }
      for (pick[row] = 0; pick[row] < static_cast<int>(subsets.size()); ++pick[row])
        self(self, row + 1);
    };
    if (!subsets.empty()) rec(rec, 0);
  }
  drain(batch, stats, sink);
  return stats;
}

}  // namespace gmmds
