#ifndef GMMDS_REDUCTIONS_HPP
#define GMMDS_REDUCTIONS_HPP

#include <vector>

#include "gmmds/construct.hpp"
#include "gmmds/pattern.hpp"

namespace gmmds {

// Cooperative data exchange: n packets, clients each holding a proper
// subset (0-based) and transmitting b_s coded packets; k = sum b_s.
struct CdeClient {
  std::vector<int> has;
  int b = 0;
};

struct CdeInstance {
  int n = 0;
  std::vector<CdeClient> clients;
};

// Cut condition over every nonempty client subset S (union form):
// |union_{s in S} H_s| >= n - k + sum_{s in S} b_s. Witness indices are
// client positions.
ConditionReport cde_cut_condition(const CdeInstance& inst);

// k x n pattern with b_s rows of support H_s per client, in client order.
// The cut condition is rechecked and the result is guaranteed to satisfy
// the MDS Condition.
ZeroPattern cde_to_pattern(const CdeInstance& inst);

// Multiple-access network: m sources connected to n relays (0-based
// relay lists), message rates r_i, up to z relay errors; the code
// dimension is k = n - 2z.
struct SmanSource {
  std::vector<int> relays;
  int rate = 0;
};

struct SmanInstance {
  int n = 0;
  int z = 0;
  std::vector<SmanSource> sources;
};

// |union_{i in I} supp(A_i)| >= sum_{i in I} r_i + 2z over nonempty I.
ConditionReport sman_cut_condition(const SmanInstance& inst);

struct SmanPattern {
  ZeroPattern pattern;  // k x n: rate-repeated adjacency rows + all-one rows
  int r_total = 0;      // number of adjacency-derived rows
};

SmanPattern sman_to_pattern(const SmanInstance& inst);

struct SmanCode {
  GeneratorMatrix code;  // full k x n generator
  FMatrix subspace;      // its first r_total rows
  int r_total = 0;
};

// Pipeline through construct_mds; the subspace rows fit the adjacency
// pattern and span an r_total-dimensional subspace of the MDS code.
SmanCode sman_code(const SmanInstance& inst, const ConstructOptions& opt = {});

}  // namespace gmmds

#endif
