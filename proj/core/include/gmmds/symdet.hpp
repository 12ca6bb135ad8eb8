#ifndef GMMDS_SYMDET_HPP
#define GMMDS_SYMDET_HPP

#include <map>
#include <string>
#include <vector>

#include "gmmds/gf.hpp"

namespace gmmds {

// Cap on selection-style enumerations: the determinant expansion here and
// the outcome histogram in multiset.hpp both walk the same k! * prod
// C(k-1, d) selection space and refuse anything past this budget.
inline constexpr long long kMaxOutcomes = 100'000'000;

// Exponent multiset of a monomial in a_1..a_n: sorted 0-based variable
// indices with repetition, e.g. {2, 3, 3} = a3 * a4^2 (1-based display).
// Identical to the multiset unions the uniqueness engine enumerates, which
// is the whole point of keying on it.
using ExponentMultiset = std::vector<int>;

// Integer-coefficient polynomial stored as multiset -> coefficient.
struct SparsePolynomial {
  int nvars = 0;
  std::map<ExponentMultiset, long long> terms;

  // Adds delta into the key's coefficient, dropping the term when it
  // cancels to zero. Signed-overflow is rejected.
  void add_term(const ExponentMultiset& key, long long delta);

  bool is_zero() const { return terms.empty(); }

  // Largest exponent of variable t across all monomials, 0 if absent.
  int variable_degree(int t) const;

  // Evaluates at a point given as raw element encodings indexed by
  // variable; point must cover every variable that appears.
  int evaluate(const Field& field, const std::vector<int>& point) const;

  // One line per monomial in key order: "<coeff> * a<t>^<p> ...", bare
  // coefficient for the constant term. Variables are printed 1-based.
  std::string dump() const;
};

// det(A) for the coefficient matrix of a family of (k-1)-subsets Z_1..Z_k
// of [n] (0-based columns), expanded over permutations: each permutation
// sigma and each choice of T_i within Z_i with |T_i| = k - sigma(i)
// contributes sgn(sigma) * (-1)^(k(k-1)/2) to the key formed by the
// multiset union of the T_i. The resulting keys coincide with the
// selection multisets of the uniqueness engine under sigma -> (k+1) -
// sigma, so a selection multiset realized exactly once appears here as a
// monomial with coefficient +1 or -1.
SparsePolynomial symbolic_det(int k, int n,
                              const std::vector<std::vector<int>>& zeros);

}  // namespace gmmds

#endif
