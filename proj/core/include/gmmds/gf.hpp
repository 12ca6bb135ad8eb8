#ifndef GMMDS_GF_HPP
#define GMMDS_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "gmmds/errors.hpp"

namespace gmmds {

/// Largest supported field size. Instances here never need more than
/// q >= n + k - 1 at desk scale, so 2^16 leaves a wide margin.
inline constexpr int kMaxFieldOrder = 1 << 16;

/// Parameters of F_q, q = p^m. The modulus is the monic irreducible used to
/// build the extension, coefficients low-degree-first including the leading 1
/// (so it has m + 1 entries); it is empty for prime fields.
struct FieldSpec {
  int p = 0;
  int m = 0;
  std::vector<int> modulus;
  int q = 0;

  bool operator==(const FieldSpec&) const = default;
};

class FieldElement;

/// Immutable handle to a finite field F_q (prime or prime power).
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients of the residue polynomial, low degree first.
/// All arithmetic is exact; fields with q <= 256 precompute multiplication
/// and inverse tables. Copying a Field is cheap (shared immutable state) and
/// every operation is pure, so concurrent use needs no synchronization.
class Field {
 public:
  /// Builds F_{p^m}. Without an explicit modulus the lexicographically
  /// smallest monic irreducible of degree m over F_p is selected
  /// (coefficients compared low-degree-first), which makes the construction
  /// deterministic across runs.
  static Field make(int p, int m);
  static Field make(int p, int m, const std::vector<int>& modulus);

  /// Smallest prime power q >= bound, as a field. bound must be >= 2.
  static Field smallest_at_least(int bound);

  const FieldSpec& spec() const { return impl_->spec; }
  int p() const { return impl_->spec.p; }
  int m() const { return impl_->spec.m; }
  int q() const { return impl_->spec.q; }

  // Arithmetic on raw encodings in [0, q). Range is the caller's contract;
  // use FieldElement for the checked interface.
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;

  FieldElement element(int value) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// All q elements, ascending by encoding, starting at 0.
  std::vector<FieldElement> elements() const;

  bool operator==(const Field& other) const {
    return impl_ == other.impl_ || spec() == other.spec();
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Impl {
    FieldSpec spec;
    std::vector<std::uint16_t> mul_table;  // q*q entries when tabled
    std::vector<std::uint16_t> inv_table;  // q entries when tabled
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  int mul_slow(int a, int b) const;

  std::shared_ptr<const Impl> impl_;
};

/// A field element bound to its field; binary operations require both
/// operands to come from equal fields.
class FieldElement {
 public:
  FieldElement(Field field, int value);

  int value() const { return value_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && field_ == o.field_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void require_same_field(const FieldElement& o) const;

  Field field_;
  int value_;
};

namespace gfdetail {
// Polynomial helpers over F_p, coefficients low-degree-first. Exposed for
// tests; not part of the stable interface.
bool is_prime(int p);
bool is_irreducible(const std::vector<int>& f, int p);
}  // namespace gfdetail

}  // namespace gmmds

#endif
