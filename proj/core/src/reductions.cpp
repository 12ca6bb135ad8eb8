#include "gmmds/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmmds/errors.hpp"

namespace gmmds {

namespace {

constexpr int kMaxClients = 20;  // 2^m cut subsets, same cap as the pattern check

void validate_sets(int m, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "need at least one column");
  if (m < 1) throw Error(Errc::invalid_argument, "need at least one participant");
  if (m > kMaxClients)
    throw Error(Errc::too_large, "exhaustive cut check capped at 20 participants");
}

std::vector<int> checked_subset(const std::vector<int>& raw, int n,
                                const char* what) {
  std::vector<int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n)
      throw Error(Errc::invalid_argument, std::string(what) + " index out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw Error(Errc::invalid_argument, std::string(what) + " has repeated indices");
  }
  return sorted;
}

int cde_dimension(const CdeInstance& inst) {
  validate_sets(static_cast<int>(inst.clients.size()), inst.n);
  long long k = 0;
  for (const auto& client : inst.clients) {
    if (client.b < 0)
      throw Error(Errc::invalid_argument, "transmission count must be >= 0");
    if (static_cast<int>(client.has.size()) >= inst.n)
      throw Error(Errc::invalid_argument, "has-set must be a proper subset");
    k += client.b;
  }
  if (k < 1) throw Error(Errc::invalid_argument, "total transmissions must be >= 1");
  if (k > inst.n)
    throw Error(Errc::invalid_argument, "total transmissions exceed the packet count");
  return static_cast<int>(k);
}

// Lexicographically first nonempty violating subset via preorder walk,
// shared by both cut conditions. union_of(S-member) folds supports;
// required(sum-of-weights) is the right-hand side.
template <typename Weight>
ConditionReport scan_cuts(int m, const std::vector<std::vector<int>>& supports,
                          int n, const Weight& weight, int base) {
  std::vector<std::vector<char>> masks(m, std::vector<char>(n, 0));
  for (int s = 0; s < m; ++s)
    for (int j : supports[s]) masks[s][j] = 1;

  ConditionReport report;
  std::vector<char> acc(n, 0);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int last, std::vector<char> uni, int need) -> bool {
    for (int s = last + 1; s < m; ++s) {
      std::vector<char> next = uni;
      for (int j = 0; j < n; ++j) next[j] |= masks[s][j];
      int size = 0;
      for (int j = 0; j < n; ++j) size += next[j];
      cur.push_back(s);
      const int required = base + need + weight(s);
      if (size < required) {
        report.witness = cur;
        report.union_size = size;
        return true;
      }
      if (self(self, s, std::move(next), need + weight(s))) return true;
      cur.pop_back();
    }
    return false;
  };
  report.holds = !rec(rec, -1, acc, 0);
  if (report.holds) {
    report.witness.clear();
    report.union_size = 0;
  }
  return report;
}

}  // namespace

ConditionReport cde_cut_condition(const CdeInstance& inst) {
  const int k = cde_dimension(inst);
  const int m = static_cast<int>(inst.clients.size());
  std::vector<std::vector<int>> supports(m);
  for (int s = 0; s < m; ++s)
    supports[s] = checked_subset(inst.clients[s].has, inst.n, "has-set");
  return scan_cuts(
      m, supports, inst.n, [&](int s) { return inst.clients[s].b; },
      inst.n - k);
}

ZeroPattern cde_to_pattern(const CdeInstance& inst) {
  const ConditionReport cut = cde_cut_condition(inst);
  if (!cut.holds)
    throw Error(Errc::cut_condition_violated, "instance fails the cut condition",
                cut.witness);
  const int k = cde_dimension(inst);
  std::vector<std::vector<int>> rows;
  rows.reserve(k);
  for (const auto& client : inst.clients) {
    std::vector<int> row(inst.n, 0);
    for (int j : client.has) row[j] = 1;
    for (int copy = 0; copy < client.b; ++copy) rows.push_back(row);
  }
  ZeroPattern pat(k, inst.n, rows);
  if (!check_mds_condition(pat).holds)
    throw std::logic_error("cut condition held but the pattern fails");
  return pat;
}

ConditionReport sman_cut_condition(const SmanInstance& inst) {
  const int m = static_cast<int>(inst.sources.size());
  validate_sets(m, inst.n);
  if (inst.z < 0) throw Error(Errc::invalid_argument, "error budget must be >= 0");
  std::vector<std::vector<int>> supports(m);
  for (int s = 0; s < m; ++s) {
    if (inst.sources[s].rate < 1)
      throw Error(Errc::invalid_argument, "source rate must be >= 1");
    supports[s] = checked_subset(inst.sources[s].relays, inst.n, "relay list");
  }
  return scan_cuts(
      m, supports, inst.n, [&](int s) { return inst.sources[s].rate; },
      2 * inst.z);
}

SmanPattern sman_to_pattern(const SmanInstance& inst) {
  const ConditionReport cut = sman_cut_condition(inst);
  // Rate feasibility first: when the cut over I = [m] holds it already
  // forces r_total <= k, so a cut-first order could never report this.
  const int k = inst.n - 2 * inst.z;
  int r_total = 0;
  for (const auto& src : inst.sources) r_total += src.rate;
  if (k < r_total)
    throw Error(Errc::rate_exceeds_capacity,
                "total rate exceeds the code dimension n - 2z");
  if (!cut.holds)
    throw Error(Errc::cut_condition_violated, "instance fails the cut condition",
                cut.witness);

  std::vector<std::vector<int>> rows;
  rows.reserve(k);
  for (const auto& src : inst.sources) {
    std::vector<int> row(inst.n, 0);
    for (int j : src.relays) row[j] = 1;
    for (int copy = 0; copy < src.rate; ++copy) rows.push_back(row);
  }
  rows.resize(k, std::vector<int>(inst.n, 1));
  ZeroPattern pat(k, inst.n, rows);
  if (!check_mds_condition(pat).holds)
    throw std::logic_error("cut condition held but the pattern fails");
  return SmanPattern{std::move(pat), r_total};
}

SmanCode sman_code(const SmanInstance& inst, const ConstructOptions& opt) {
  const SmanPattern compiled = sman_to_pattern(inst);
  GeneratorMatrix gm = construct_mds(compiled.pattern, opt);

  FMatrix sub(gm.field, compiled.r_total, compiled.pattern.n());
  for (int i = 0; i < compiled.r_total; ++i)
    for (int j = 0; j < sub.cols(); ++j) sub.set(i, j, gm.entries.at(i, j));

  // The subspace rows must still fit the rate-repeated adjacency rows.
  std::vector<std::vector<int>> adj_rows;
  for (const auto& src : inst.sources) {
    std::vector<int> row(inst.n, 0);
    for (int j : src.relays) row[j] = 1;
    for (int copy = 0; copy < src.rate; ++copy) adj_rows.push_back(row);
  }
  const ZeroPattern mprime(compiled.r_total, inst.n, adj_rows);
  if (!fits(sub, mprime))
    throw std::logic_error("subspace rows do not fit the adjacency pattern");

  return SmanCode{std::move(gm), std::move(sub), compiled.r_total};
}

}  // namespace gmmds
