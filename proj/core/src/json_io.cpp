#include "gmmds/json_io.hpp"

#include <json.hpp>

#include "gmmds/errors.hpp"

namespace gmmds {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object())
    throw Error(Errc::invalid_argument, "top-level JSON value must be an object");
  if (j.contains("schema") && j["schema"] != 1)
    throw Error(Errc::invalid_argument, "unsupported schema version");
  return j;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(Errc::invalid_argument,
                std::string("missing or non-integer field \"") + key + '"');
  return j[key].get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array())
    throw Error(Errc::invalid_argument, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer())
      throw Error(Errc::invalid_argument,
                  std::string(what) + " must contain only integers");
    out.push_back(x.get<int>());
  }
  return out;
}

// Wire indices are 1-based.
std::vector<int> to_zero_based(std::vector<int> xs, const char* what) {
  for (int& x : xs) {
    if (x < 1)
      throw Error(Errc::invalid_argument,
                  std::string(what) + " indices are 1-based and must be >= 1");
    --x;
  }
  return xs;
}

json one_based(const std::vector<int>& xs) {
  json arr = json::array();
  for (int x : xs) arr.push_back(x + 1);
  return arr;
}

json field_to_json(const Field& field) {
  json f;
  f["p"] = field.p();
  f["m"] = field.m();
  if (field.m() > 1) f["modulus"] = field.spec().modulus;
  return f;
}

Field field_from_json(const json& f) {
  if (!f.is_object())
    throw Error(Errc::invalid_argument, "\"field\" must be an object");
  const int p = get_int(f, "p");
  const int m = get_int(f, "m");
  if (f.contains("modulus")) return Field::make(p, m, int_list(f["modulus"], "modulus"));
  return Field::make(p, m);
}

json pattern_body(const ZeroPattern& pat) {
  json j;
  j["schema"] = 1;
  j["k"] = pat.k();
  j["n"] = pat.n();
  json rows = json::array();
  for (int i = 0; i < pat.k(); ++i) {
    json row = json::array();
    for (int c = 0; c < pat.n(); ++c) row.push_back(pat.at(i, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace

ZeroPattern pattern_from_json(const std::string& text) {
  const json j = parse(text);
  const int k = get_int(j, "k");
  const int n = get_int(j, "n");
  const bool has_rows = j.contains("rows");
  const bool has_zeros = j.contains("zeros");
  if (has_rows == has_zeros)
    throw Error(Errc::invalid_argument,
                "pattern needs exactly one of \"rows\" or \"zeros\"");
  if (has_rows) {
    if (!j["rows"].is_array())
      throw Error(Errc::invalid_argument, "\"rows\" must be an array");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j["rows"]) rows.push_back(int_list(r, "row"));
    return ZeroPattern(k, n, rows);
  }
  if (!j["zeros"].is_array())
    throw Error(Errc::invalid_argument, "\"zeros\" must be an array");
  std::vector<std::vector<int>> zeros;
  for (const auto& z : j["zeros"])
    zeros.push_back(to_zero_based(int_list(z, "zero list"), "zero list"));
  return ZeroPattern::from_zeros(k, n, zeros);
}

std::string pattern_to_json(const ZeroPattern& pat) { return pattern_body(pat).dump(); }

ZFamily zfamily_from_json(const std::string& text) {
  const json j = parse(text);
  ZFamily fam;
  fam.k = get_int(j, "k");
  fam.n = get_int(j, "n");
  if (!j.contains("zeros") || !j["zeros"].is_array())
    throw Error(Errc::invalid_argument, "family needs a \"zeros\" array");
  for (const auto& z : j["zeros"]) {
    auto cols = to_zero_based(int_list(z, "zero list"), "zero list");
    std::sort(cols.begin(), cols.end());
    fam.zeros.push_back(std::move(cols));
  }
  return fam;
}

std::string zfamily_to_json(const ZFamily& fam) {
  json j;
  j["schema"] = 1;
  j["k"] = fam.k;
  j["n"] = fam.n;
  json zeros = json::array();
  for (const auto& z : fam.zeros) zeros.push_back(one_based(z));
  j["zeros"] = std::move(zeros);
  return j.dump();
}

std::string condition_report_to_json(const ConditionReport& report) {
  json j;
  j["schema"] = 1;
  j["holds"] = report.holds;
  if (!report.holds) {
    j["witness"] = one_based(report.witness);
    j["union_size"] = report.union_size;
  }
  return j.dump();
}

std::string mds_report_to_json(const MdsReport& report) {
  json j;
  j["schema"] = 1;
  j["holds"] = report.holds;
  if (!report.holds) j["failing_columns"] = one_based(report.failing_columns);
  return j.dump();
}

ParsedGenerator generator_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("field"))
    throw Error(Errc::invalid_argument, "generator needs a \"field\" object");
  Field field = field_from_json(j["field"]);
  const int k = get_int(j, "k");
  const int n = get_int(j, "n");
  if (k < 1 || n < k)
    throw Error(Errc::invalid_argument, "generator requires 1 <= k <= n");
  if (!j.contains("alphas"))
    throw Error(Errc::invalid_argument, "generator needs an \"alphas\" array");
  std::vector<int> alphas = int_list(j["alphas"], "alphas");
  if (static_cast<int>(alphas.size()) != n)
    throw Error(Errc::invalid_argument, "alphas must list n elements");
  if (!j.contains("matrix") || !j["matrix"].is_array() ||
      static_cast<int>(j["matrix"].size()) != k)
    throw Error(Errc::invalid_argument, "matrix must be a k-row array");
  FMatrix entries(field, k, n);
  for (int i = 0; i < k; ++i) {
    const std::vector<int> row = int_list(j["matrix"][i], "matrix row");
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::invalid_argument, "matrix rows must have n entries");
    for (int c = 0; c < n; ++c) entries.set(i, c, row[c]);
  }
  bool verified = false;
  if (j.contains("verified_mds")) {
    if (!j["verified_mds"].is_boolean())
      throw Error(Errc::invalid_argument, "verified_mds must be a boolean");
    verified = j["verified_mds"].get<bool>();
  }
  return ParsedGenerator{std::move(field), std::move(entries), std::move(alphas),
                         verified};
}

std::string generator_to_json(const GeneratorMatrix& gm) {
  json j;
  j["schema"] = 1;
  j["field"] = field_to_json(gm.field);
  j["k"] = gm.entries.rows();
  j["n"] = gm.entries.cols();
  j["alphas"] = gm.alphas;
  json matrix = json::array();
  for (int i = 0; i < gm.entries.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < gm.entries.cols(); ++c) row.push_back(gm.entries.at(i, c));
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  j["verified_mds"] = gm.verified_mds;
  return j.dump();
}

std::string uniqueness_report_to_json(const UniquenessReport& report) {
  json j;
  j["schema"] = 1;
  j["total_outcomes"] = report.total_outcomes;
  j["holds"] = report.holds;
  if (report.holds)
    j["witness"] = one_based(report.witness);
  else
    j["witness"] = nullptr;
  json uniques = json::array();
  for (const auto& w : report.unique_witnesses) uniques.push_back(one_based(w));
  j["unique_witnesses"] = std::move(uniques);
  json hist = json::array();
  for (const auto& [multiset, count] : report.histogram) {
    json cell;
    cell["multiset"] = one_based(multiset);
    cell["count"] = count;
    hist.push_back(std::move(cell));
  }
  j["histogram"] = std::move(hist);
  return j.dump();
}

std::string sweep_line_to_json(const ZFamily& fam, const UniquenessReport& report) {
  json j;
  j["schema"] = 1;
  j["n"] = fam.n;
  json zeros = json::array();
  for (const auto& z : fam.zeros) zeros.push_back(one_based(z));
  j["zeros"] = std::move(zeros);
  j["holds"] = report.holds;
  if (report.holds)
    j["witness"] = one_based(report.witness);
  else
    j["witness"] = nullptr;
  j["outcomes"] = report.total_outcomes;
  return j.dump();
}

std::string star_to_json(const MultisetOutcome& star, const std::vector<int>& perm,
                         long long count) {
  json j;
  j["schema"] = 1;
  j["permutation"] = one_based(perm);
  json sels = json::array();
  for (const auto& s : star.selections) sels.push_back(one_based(s));
  j["selections"] = std::move(sels);
  j["multiset"] = one_based(star.union_multiset);
  j["count"] = count;
  j["unique"] = count == 1;
  return j.dump();
}

CdeInstance cde_from_json(const std::string& text) {
  const json j = parse(text);
  CdeInstance inst;
  inst.n = get_int(j, "n");
  if (!j.contains("clients") || !j["clients"].is_array())
    throw Error(Errc::invalid_argument, "instance needs a \"clients\" array");
  for (const auto& c : j["clients"]) {
    if (!c.is_object() || !c.contains("has"))
      throw Error(Errc::invalid_argument, "each client needs a \"has\" array");
    CdeClient client;
    client.has = to_zero_based(int_list(c["has"], "has-set"), "has-set");
    client.b = get_int(c, "b");
    inst.clients.push_back(std::move(client));
  }
  return inst;
}

SmanInstance sman_from_json(const std::string& text) {
  const json j = parse(text);
  SmanInstance inst;
  inst.n = get_int(j, "n");
  inst.z = get_int(j, "z");
  if (!j.contains("sources") || !j["sources"].is_array())
    throw Error(Errc::invalid_argument, "instance needs a \"sources\" array");
  for (const auto& s : j["sources"]) {
    if (!s.is_object() || !s.contains("relays"))
      throw Error(Errc::invalid_argument, "each source needs a \"relays\" array");
    SmanSource src;
    src.relays = to_zero_based(int_list(s["relays"], "relay list"), "relay list");
    src.rate = get_int(s, "rate");
    inst.sources.push_back(std::move(src));
  }
  return inst;
}

std::string sman_pattern_to_json(const SmanPattern& sp) {
  json j = pattern_body(sp.pattern);
  j["r"] = sp.r_total;
  return j.dump();
}

std::string sman_code_to_json(const SmanPattern& sp, const SmanCode& code) {
  json j = pattern_body(sp.pattern);
  j["r"] = sp.r_total;
  j["code"] = json::parse(generator_to_json(code.code));
  json sub = json::array();
  for (int i = 0; i < code.subspace.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < code.subspace.cols(); ++c)
      row.push_back(code.subspace.at(i, c));
    sub.push_back(std::move(row));
  }
  j["subspace"] = std::move(sub);
  return j.dump();
}

std::string error_to_json(const Error& err) {
  json j;
  j["schema"] = 1;
  j["error"] = errc_name(err.code());
  j["message"] = err.what();
  if (!err.witness().empty()) j["witness"] = one_based(err.witness());
  return j.dump();
}

}  // namespace gmmds
