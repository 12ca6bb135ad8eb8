#include "gmmds/symdet.hpp"

#include <algorithm>
#include <sstream>

#include "gmmds/errors.hpp"

namespace gmmds {

void SparsePolynomial::add_term(const ExponentMultiset& key, long long delta) {
  if (delta == 0) return;
  auto [it, inserted] = terms.emplace(key, delta);
  if (inserted) return;
  long long sum = 0;
  if (__builtin_add_overflow(it->second, delta, &sum))
    throw Error(Errc::coefficient_overflow, "polynomial coefficient overflow");
  if (sum == 0)
    terms.erase(it);
  else
    it->second = sum;
}

int SparsePolynomial::variable_degree(int t) const {
  int best = 0;
  for (const auto& [key, coeff] : terms) {
    const auto range = std::equal_range(key.begin(), key.end(), t);
    best = std::max(best, static_cast<int>(range.second - range.first));
  }
  return best;
}

int SparsePolynomial::evaluate(const Field& field, const std::vector<int>& point) const {
  for (int v : point)
    if (v < 0 || v >= field.q())
      throw Error(Errc::invalid_argument, "evaluation point outside the field");
  const int p = field.p();
  int acc = 0;
  for (const auto& [key, coeff] : terms) {
    // Integer coefficients land in the prime subfield, whose encodings are
    // exactly the residues mod p.
    int term = static_cast<int>(((coeff % p) + p) % p);
    for (int t : key) {
      if (t < 0 || t >= static_cast<int>(point.size()))
        throw Error(Errc::missing_variable, "evaluation point does not cover a variable");
      term = field.mul(term, point[t]);
    }
    acc = field.add(acc, term);
  }
  return acc;
}

std::string SparsePolynomial::dump() const {
  if (terms.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [key, coeff] : terms) {
    out << coeff;
    for (size_t i = 0; i < key.size();) {
      size_t j = i;
      while (j < key.size() && key[j] == key[i]) ++j;
      out << (i == 0 ? " * " : " ") << 'a' << key[i] + 1 << '^' << (j - i);
      i = j;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

int permutation_sign(const std::vector<int>& s) {
  int inv = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace

SparsePolynomial symbolic_det(int k, int n,
                              const std::vector<std::vector<int>>& zeros_in) {
  if (k < 1 || n < 0)
    throw Error(Errc::invalid_argument, "family requires k >= 1 and n >= 0");
  if (k > 20)
    throw Error(Errc::too_large, "determinant expansion capped at 20 rows");
  if (static_cast<int>(zeros_in.size()) != k)
    throw Error(Errc::invalid_argument, "zero-set count does not match k");
  std::vector<std::vector<int>> zeros = zeros_in;
  for (auto& z : zeros) {
    if (static_cast<int>(z.size()) != k - 1)
      throw Error(Errc::bad_subset_size, "each zero set must have k - 1 elements");
    std::sort(z.begin(), z.end());
    for (size_t i = 0; i < z.size(); ++i) {
      if (z[i] < 0 || z[i] >= n)
        throw Error(Errc::invalid_argument, "zero column index out of range");
      if (i > 0 && z[i] == z[i - 1])
        throw Error(Errc::invalid_argument, "zero sets may not repeat a column");
    }
  }

  // Every permutation contributes the same number of selections, so the
  // total term count is k! * prod_d C(k-1, d).
  long long per_perm = 1;
  for (int d = 0; d < k; ++d) {
    per_perm *= binom(k - 1, d);
    if (per_perm > kMaxOutcomes) break;
  }
  long long total = per_perm;
  for (int i = 2; i <= k && total <= kMaxOutcomes; ++i) total *= i;
  if (total > kMaxOutcomes)
    throw Error(Errc::too_large, "determinant expansion exceeds the outcome guard");

  SparsePolynomial poly;
  poly.nvars = n;

  const int global_sign = ((static_cast<long long>(k) * (k - 1) / 2) & 1) ? -1 : 1;
  std::vector<int> s(k);  // one-line permutation, 0-based: sigma(i) = s[i] + 1
  for (int i = 0; i < k; ++i) s[i] = i;
  ExponentMultiset key;
  key.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  do {
    const long long contrib = permutation_sign(s) * global_sign;
    auto rec = [&](auto&& self, int row) -> void {
      if (row == k) {
        ExponentMultiset sorted = key;
        std::sort(sorted.begin(), sorted.end());
        poly.add_term(sorted, contrib);
        return;
      }
      const auto& z = zeros[row];
      const int need = k - 1 - s[row];  // |T_row| = k - sigma(row)
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

  return poly;
}

}  // namespace gmmds
