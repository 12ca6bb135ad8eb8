#include "gmmds/verify.hpp"

#include <thread>

#include "gmmds/errors.hpp"
#include "gmmds/parallel.hpp"

namespace gmmds {

namespace {

// C(n, r), clamped to cap + 1 without overflowing.
long long binom_capped(int n, int r, long long cap) {
  if (r < 0 || r > n) return 0;
  long long acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

// Rank `rank` combination of [n] choose k in lexicographic order.
std::vector<int> unrank_combination(int n, int k, long long rank) {
  std::vector<int> comb(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++x) {
      const long long below = binom_capped(n - 1 - x, k - 1 - i, kMaxMinorChecks);
      if (rank < below) {
        comb[i] = x++;
        break;
      }
      rank -= below;
    }
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// In-place singularity test of the k x k submatrix of g on the given
// columns; local elimination, independent of FMatrix::det.
bool minor_singular(const FMatrix& g, const std::vector<int>& cols,
                    std::vector<int>& scratch) {
  const Field& f = g.field();
  const int k = g.rows();
  scratch.resize(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) scratch[static_cast<size_t>(i) * k + j] = g.at(i, cols[j]);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (scratch[static_cast<size_t>(r) * k + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return true;
    if (pivot != col)
      for (int c = col; c < k; ++c)
        std::swap(scratch[static_cast<size_t>(pivot) * k + c],
                  scratch[static_cast<size_t>(col) * k + c]);
    const int inv = f.inv(scratch[static_cast<size_t>(col) * k + col]);
    for (int r = col + 1; r < k; ++r) {
      const int lead = scratch[static_cast<size_t>(r) * k + col];
      if (lead == 0) continue;
      const int factor = f.mul(lead, inv);
      for (int c = col; c < k; ++c)
        scratch[static_cast<size_t>(r) * k + c] =
            f.sub(scratch[static_cast<size_t>(r) * k + c],
                  f.mul(factor, scratch[static_cast<size_t>(col) * k + c]));
    }
  }
  return false;
}

// First failing combination rank in [begin, end), or -1.
long long scan_range(const FMatrix& g, long long begin, long long end) {
  if (begin >= end) return -1;
  std::vector<int> comb = unrank_combination(g.cols(), g.rows(), begin);
  std::vector<int> scratch;
  for (long long rank = begin; rank < end; ++rank) {
    if (minor_singular(g, comb, scratch)) return rank;
    next_combination(comb, g.cols());
  }
  return -1;
}

}  // namespace

MdsReport is_mds(const FMatrix& g) {
  const int k = g.rows();
  const int n = g.cols();
  if (k < 1 || k > n)
    throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  const long long total = binom_capped(n, k, kMaxMinorChecks);
  if (total > kMaxMinorChecks)
    throw Error(Errc::too_large, "minor count exceeds the verification guard");

  const int workers = static_cast<int>(
      std::min<long long>(worker_count(), (total + 1023) / 1024));
  long long first_fail = -1;
  if (workers <= 1) {
    first_fail = scan_range(g, 0, total);
  } else {
    std::vector<long long> fails(workers, -1);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const long long begin = total * w / workers;
      const long long end = total * (w + 1) / workers;
      threads.emplace_back(
          [&g, &fails, w, begin, end] { fails[w] = scan_range(g, begin, end); });
    }
    for (auto& t : threads) t.join();
    for (long long f : fails)
      if (f >= 0 && (first_fail < 0 || f < first_fail)) first_fail = f;
  }

  MdsReport report;
  report.holds = first_fail < 0;
  if (!report.holds) report.failing_columns = unrank_combination(n, k, first_fail);
  return report;
}

bool min_weight_check(const FMatrix& g) {
  const int target = g.cols() - g.rows() + 1;
  for (int i = 0; i < g.rows(); ++i) {
    int weight = 0;
    for (int j = 0; j < g.cols(); ++j)
      if (g.at(i, j) != 0) ++weight;
    if (weight != target) return false;
  }
  return true;
}

int codeword_min_weight(const FMatrix& g) {
  const int k = g.rows();
  const int n = g.cols();
  if (k < 1 || k > n)
    throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  const Field& f = g.field();
  const int q = f.q();
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= q;
    if (count > kMaxCodewordEnum)
      throw Error(Errc::too_large, "codeword count exceeds the enumeration guard");
  }

  int best = n + 1;
  std::vector<int> u(k, 0);
  std::vector<int> word(n, 0);
  for (long long step = 1; step < count; ++step) {
    // Odometer increment over message vectors.
    for (int i = 0; i < k; ++i) {
      u[i] = u[i] + 1 == q ? 0 : u[i] + 1;
      if (u[i] != 0) break;
    }
    for (int j = 0; j < n; ++j) word[j] = 0;
    for (int i = 0; i < k; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        word[j] = f.add(word[j], f.mul(u[i], g.at(i, j)));
    }
    int weight = 0;
    for (int j = 0; j < n; ++j)
      if (word[j] != 0) ++weight;
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace gmmds
