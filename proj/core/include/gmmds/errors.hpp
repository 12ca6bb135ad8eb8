#ifndef GMMDS_ERRORS_HPP
#define GMMDS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gmmds {

/// Library error codes. Split into two CLI exit classes:
/// "domain" errors (a checked property fails, a search comes up empty)
/// map to exit code 1, everything else (malformed input, misuse, guards)
/// maps to exit code 2.
enum class Errc {
  // malformed input / misuse / guards (exit 2)
  invalid_argument,
  not_prime,
  reducible_modulus,
  degree_mismatch,
  unsupported_field_size,
  division_by_zero,
  field_mismatch,
  missing_variable,
  coefficient_overflow,
  bad_subset_size,
  dimension_mismatch,
  duplicate_alphas,
  not_reduced,
  precondition_violated,
  field_too_small,
  too_large,
  // domain failures (exit 1)
  condition_violated,
  cut_condition_violated,
  rate_exceeds_capacity,
  not_found,
  identically_zero,
  not_applicable,
  invalid_family,
};

const char* errc_name(Errc c);

/// True for error codes that mean "the checked property fails / nothing
/// found" rather than "the request was malformed".
bool errc_is_domain_failure(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Error(Errc code, std::string message, std::vector<int> witness)
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const { return code_; }

  /// Violating index set attached to condition failures, 0-based. Empty when
  /// the error carries no witness.
  const std::vector<int>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

}  // namespace gmmds

#endif
