#ifndef GMMDS_JSON_IO_HPP
#define GMMDS_JSON_IO_HPP

#include <string>
#include <vector>

#include "gmmds/construct.hpp"
#include "gmmds/multiset.hpp"
#include "gmmds/pattern.hpp"
#include "gmmds/reductions.hpp"
#include "gmmds/verify.hpp"

namespace gmmds {

// JSON wire format, shared by the CLI and the tests. All documents carry
// "schema": 1 (parsers accept a missing schema field and reject any other
// value). Column and row indices are 1-based on the wire and 0-based in
// memory; field element encodings and counts are plain integers. Writers
// emit compact single-line documents with a fixed key order, so equal
// inputs serialize byte-identically.

// {"k", "n", "rows": [[0|1,...],...]} or {"k", "n", "zeros": [[col,...],...]}
// (exactly one of rows/zeros).
ZeroPattern pattern_from_json(const std::string& text);
std::string pattern_to_json(const ZeroPattern& pat);

// {"k", "n", "zeros": [[col,...],...]}
ZFamily zfamily_from_json(const std::string& text);
std::string zfamily_to_json(const ZFamily& fam);

std::string condition_report_to_json(const ConditionReport& report);

std::string mds_report_to_json(const MdsReport& report);

// {"field": {"p", "m", "modulus"?}, "k", "n", "alphas", "matrix",
// "verified_mds"} — enough to re-verify a shipped generator.
struct ParsedGenerator {
  Field field;
  FMatrix entries;
  std::vector<int> alphas;
  bool verified_mds = false;
};
ParsedGenerator generator_from_json(const std::string& text);
std::string generator_to_json(const GeneratorMatrix& gm);

std::string uniqueness_report_to_json(const UniquenessReport& report);

// One sweep result: {"schema", "n", "zeros", "holds", "witness", "outcomes"}.
std::string sweep_line_to_json(const ZFamily& fam, const UniquenessReport& report);

// Star-selection result plus its oracle count.
std::string star_to_json(const MultisetOutcome& star, const std::vector<int>& perm,
                         long long count);

// {"n", "clients": [{"has": [...], "b": int}, ...]}
CdeInstance cde_from_json(const std::string& text);

// {"n", "z", "sources": [{"relays": [...], "rate": int}, ...]}
SmanInstance sman_from_json(const std::string& text);

std::string sman_pattern_to_json(const SmanPattern& sp);
std::string sman_code_to_json(const SmanPattern& sp, const SmanCode& code);

std::string error_to_json(const Error& err);

}  // namespace gmmds

#endif
