#include "gmmds/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmmds/errors.hpp"
#include "gmmds/rng.hpp"
#include "gmmds/symdet.hpp"
#include "gmmds/verify.hpp"

namespace gmmds {

std::vector<int> build_row_polynomial(const std::vector<int>& zero_set, int k,
                                      const Field& field,
                                      const std::vector<int>& alphas) {
  if (static_cast<int>(zero_set.size()) != k - 1)
    throw Error(Errc::bad_subset_size, "zero set must have k - 1 elements");
  std::vector<int> poly{1};
  poly.reserve(k);
  for (int t : zero_set) {
    if (t < 0 || t >= static_cast<int>(alphas.size()))
      throw Error(Errc::invalid_argument, "zero column has no evaluation point");
    const int root = alphas[t];
    poly.push_back(0);
    // poly *= (x - root), low degree first.
    for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) {
      const int shifted = d > 0 ? poly[d - 1] : 0;
      poly[d] = field.sub(shifted, field.mul(root, poly[d]));
    }
  }
  return poly;
}

namespace {

int eval_poly(const Field& field, const std::vector<int>& poly, int x) {
  int acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = field.add(field.mul(acc, x), *it);
  return acc;
}

void require_reduced(const ZeroPattern& pat) {
  const int target = pat.n() - pat.k() + 1;
  for (int i = 0; i < pat.k(); ++i)
    if (pat.row_weight(i) != target)
      throw Error(Errc::not_reduced, "pattern row weight is not n - k + 1");
}

void require_points(const Field& field, int n, const std::vector<int>& alphas) {
  if (static_cast<int>(alphas.size()) != n)
    throw Error(Errc::invalid_argument, "need exactly n evaluation points");
  for (int a : alphas)
    if (a < 0 || a >= field.q())
      throw Error(Errc::invalid_argument, "evaluation point outside the field");
  std::vector<int> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::duplicate_alphas, "evaluation points must be distinct");
}

// det(A) at the given points, built row by row; used by the point search.
int coefficient_det(const ZeroPattern& pat_reduced, const Field& field,
                    const std::vector<int>& alphas) {
  const int k = pat_reduced.k();
  FMatrix a(field, k, k);
  for (int i = 0; i < k; ++i) {
    const std::vector<int> poly =
        build_row_polynomial(pat_reduced.zero_set(i), k, field, alphas);
    for (int j = 0; j < k; ++j) a.set(i, j, poly[j]);
  }
  return a.det();
}

}  // namespace

GeneratorMatrix assemble(const ZeroPattern& pat_reduced, const Field& field,
                         const std::vector<int>& alphas) {
  require_reduced(pat_reduced);
  const int k = pat_reduced.k();
  const int n = pat_reduced.n();
  require_points(field, n, alphas);

  FMatrix a(field, k, k);
  FMatrix g(field, k, n);
  for (int i = 0; i < k; ++i) {
    const std::vector<int> poly =
        build_row_polynomial(pat_reduced.zero_set(i), k, field, alphas);
    for (int j = 0; j < k; ++j) a.set(i, j, poly[j]);
    for (int j = 0; j < n; ++j) g.set(i, j, eval_poly(field, poly, alphas[j]));
  }

  FMatrix vand(field, k, n);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < n; ++j) vand.set(r, j, field.pow(alphas[j], r));
  if (!(a.mul(vand) == g))
    throw std::logic_error("direct evaluation and A*V disagree");

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if ((g.at(i, j) == 0) != !pat_reduced.at(i, j))
        throw std::logic_error("generator support does not match the pattern");

  return GeneratorMatrix{field, pat_reduced, alphas, std::move(a), std::move(g), false};
}

std::vector<int> find_evaluation_points(const ZeroPattern& pat_reduced,
                                        const Field& field,
                                        const FindOptions& opt) {
  require_reduced(pat_reduced);
  const int k = pat_reduced.k();
  const int n = pat_reduced.n();
  const int q = field.q();
  if (q < n + k - 1)
    throw Error(Errc::field_too_small, "need q >= n + k - 1");

  std::vector<std::vector<int>> zeros(k);
  for (int i = 0; i < k; ++i) zeros[i] = pat_reduced.zero_set(i);

  // Rule out an identically zero determinant up front when the expansion
  // is affordable; past the guard the search itself is the only signal.
  long long expansion = 1;
  for (int d = 0; d < k && expansion <= kMaxOutcomes; ++d) {
    long long c = 1;
    for (int i = 1; i <= d; ++i) c = c * (k - 1 - d + i) / i;
    expansion *= c;
  }
  for (int i = 2; i <= k && expansion <= kMaxOutcomes; ++i) expansion *= i;
  if (expansion <= kMaxOutcomes && symbolic_det(k, n, zeros).is_zero())
    throw Error(Errc::identically_zero, "det(A) vanishes identically");

  if (opt.strategy == PointStrategy::exhaustive) {
    double size = 1;
    for (int i = 0; i < n; ++i) size *= q;
    if (size > 1e7)
      throw Error(Errc::too_large, "exhaustive point search capped at q^n <= 10^7");
    std::vector<int> tuple(n);
    std::vector<char> used(q, 0);
    auto rec = [&](auto&& self, int pos) -> bool {
      if (pos == n)
        return coefficient_det(pat_reduced, field, tuple) != 0;
      for (int v = 0; v < q; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        tuple[pos] = v;
        if (self(self, pos + 1)) return true;
        used[v] = 0;
      }
      return false;
    };
    if (rec(rec, 0)) return tuple;
    throw Error(Errc::not_found, "no point tuple yields a nonzero determinant");
  }

  std::mt19937_64 rng(opt.seed);
  const long long tries = opt.max_tries > 0 ? opt.max_tries : 10LL * (n + k);
  std::vector<int> pool(q);
  for (int v = 0; v < q; ++v) pool[v] = v;
  for (long long t = 0; t < tries; ++t) {
    partial_shuffle(rng, pool, n);
    std::vector<int> tuple(pool.begin(), pool.begin() + n);
    if (coefficient_det(pat_reduced, field, tuple) != 0) return tuple;
  }
  throw Error(Errc::not_found, "tries exhausted without a nonzero determinant");
}

namespace {

Field field_for_order(int q) {
  if (q < 2 || q > kMaxFieldOrder)
    throw Error(Errc::unsupported_field_size, "field order out of supported range");
  int p = q;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  int rest = q;
  while (rest > 1 && rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw Error(Errc::invalid_argument, "requested field order is not a prime power");
  return Field::make(p, m);
}

}  // namespace

GeneratorMatrix construct_mds(const ZeroPattern& pat, const ConstructOptions& opt) {
  const ConditionReport report = check_mds_condition(pat);
  if (!report.holds)
    throw Error(Errc::condition_violated, "pattern fails the MDS condition",
                report.witness);

  const ZeroPattern reduced = reduce_supports(pat);
  const int k = pat.k();
  const int n = pat.n();
  const int bound = n + k - 1;

  Field field = opt.q ? field_for_order(*opt.q)
                      : Field::smallest_at_least(std::max(2, bound));
  if (field.q() < bound)
    throw Error(Errc::field_too_small, "need q >= n + k - 1");

  const std::vector<int> alphas = find_evaluation_points(
      reduced, field, FindOptions{opt.strategy, opt.seed, opt.max_tries});

  GeneratorMatrix gm = assemble(reduced, field, alphas);
  gm.pattern = pat;

  // C(n, k) minors, guarded; past the guard the result ships unverified.
  long long minors = 1;
  for (int i = 1; i <= k && minors <= kMaxMinorChecks; ++i)
    minors = minors * (n - k + i) / i;
  if (minors <= kMaxMinorChecks) {
    const MdsReport verdict = is_mds(gm.entries);
    if (!verdict.holds)
      throw std::logic_error("constructed matrix failed MDS verification");
    gm.verified_mds = true;
  }
  return gm;
}

}  // namespace gmmds
