#include "gmmds/special_case.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmmds/errors.hpp"

namespace gmmds {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool step2_premise(const ZFamily& fam) {
  if (fam.k < 3) return true;
  const std::vector<int> common = intersect(fam.zeros[1], fam.zeros[2]);
  return common.empty() || !contains(fam.zeros[0], common[0]);
}

}  // namespace

bool applies(const ZFamily& fam) {
  const int k = fam.k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (intersect(fam.zeros[i], fam.zeros[j]).size() > 1) return false;
  std::vector<int> common = fam.zeros.empty() ? std::vector<int>{} : fam.zeros[0];
  for (int i = 1; i < k; ++i) common = intersect(common, fam.zeros[i]);
  return common.empty();
}

ReorderResult reorder_for_step2(const ZFamily& fam) {
  if (!applies(fam))
    throw Error(Errc::not_applicable,
                "family lacks the pairwise-intersection property");
  const int k = fam.k;
  auto apply = [&](std::vector<int> perm) {
    ZFamily out;
    out.k = k;
    out.n = fam.n;
    for (int i : perm) out.zeros.push_back(fam.zeros[i]);
    return ReorderResult{std::move(out), std::move(perm)};
  };
  std::vector<int> identity(k);
  for (int i = 0; i < k; ++i) identity[i] = i;
  if (step2_premise(fam)) return apply(identity);

  // The premise reads only the first three rows, so the lexicographically
  // smallest fixing permutation is a distinct triple followed by the
  // remaining indices in ascending order.
  for (int r1 = 0; r1 < k; ++r1)
    for (int r2 = 0; r2 < k; ++r2)
      for (int r3 = 0; r3 < k; ++r3) {
        if (r1 == r2 || r1 == r3 || r2 == r3) continue;
        const std::vector<int> common = intersect(fam.zeros[r2], fam.zeros[r3]);
        if (!common.empty() && contains(fam.zeros[r1], common[0])) continue;
        std::vector<int> perm{r1, r2, r3};
        for (int i = 0; i < k; ++i)
          if (i != r1 && i != r2 && i != r3) perm.push_back(i);
        return apply(std::move(perm));
      }
  // Empty total intersection guarantees some ordering works.
  throw std::logic_error("no row order satisfies the step-2 premise");
}

MultisetOutcome build_star_selection(const ZFamily& fam) {
  if (!applies(fam))
    throw Error(Errc::not_applicable,
                "family lacks the pairwise-intersection property");
  const int k = fam.k;
  MultisetOutcome out;
  out.sigma.resize(k);
  for (int i = 0; i < k; ++i) out.sigma[i] = i + 1;
  out.selections.assign(k, {});

  for (int i = 1; i < k; ++i) {  // 0-based row; step i+1 of the ladder
    const auto& z = fam.zeros[i];
    std::vector<int>& sel = out.selections[i];
    if (i == k - 1) {
      sel = z;  // final step takes the whole set
      break;
    }
    if (i == 1) {
      const std::vector<int> common = intersect(z, fam.zeros[2]);
      if (!common.empty()) {
        if (contains(fam.zeros[0], common[0]))
          throw Error(Errc::precondition_violated,
                      "family was not reordered for step 2");
        sel.push_back(common[0]);
      } else {
        for (int x : z)
          if (!contains(fam.zeros[0], x)) {
            sel.push_back(x);
            break;
          }
      }
      continue;
    }
    // Common elements with earlier rows 2..i, deduplicated...
    for (int prev = 1; prev < i; ++prev) {
      const std::vector<int> common = intersect(z, fam.zeros[prev]);
      if (!common.empty() && !contains(sel, common[0]))
        sel.insert(std::lower_bound(sel.begin(), sel.end(), common[0]), common[0]);
    }
    // ...then the link to the next row...
    const std::vector<int> ahead = intersect(z, fam.zeros[i + 1]);
    if (!ahead.empty() && !contains(sel, ahead[0]))
      sel.insert(std::lower_bound(sel.begin(), sel.end(), ahead[0]), ahead[0]);
    // ...then the smallest leftovers of Z_i until |S*_i| = i.
    for (size_t zi = 0; zi < z.size() && static_cast<int>(sel.size()) < i; ++zi)
      if (!contains(sel, z[zi]))
        sel.insert(std::lower_bound(sel.begin(), sel.end(), z[zi]), z[zi]);
    if (static_cast<int>(sel.size()) != i)
      throw std::logic_error("star selection missed its size ladder");
  }

  for (const auto& sel : out.selections)
    out.union_multiset.insert(out.union_multiset.end(), sel.begin(), sel.end());
  std::sort(out.union_multiset.begin(), out.union_multiset.end());
  return out;
}

}  // namespace gmmds
