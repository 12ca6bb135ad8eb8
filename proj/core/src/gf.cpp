#include "gmmds/gf.hpp"

#include <algorithm>
#include <string>

namespace gmmds {
namespace {

constexpr int kMulTableMaxQ = 256;

long long checked_pow(int p, int m) {
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) return -1;
  }
  return q;
}

// digits of v in base p, least significant first, padded to n
void to_digits(int v, int p, int n, int* out) {
  for (int i = 0; i < n; ++i) {
    out[i] = v % p;
    v /= p;
  }
}

int from_digits(const int* d, int p, int n) {
  int v = 0;
  for (int i = n - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

int trim_degree(const std::vector<int>& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

// remainder of a mod g, g monic; everything over F_p
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& g, int p) {
  const int dg = trim_degree(g);
  for (int i = trim_degree(a); i >= dg; --i) {
    const int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      int& t = a[i - dg + j];
      t = (t - c * g[j]) % p;
      if (t < 0) t += p;
    }
  }
  a.resize(std::max(dg, 1));
  return a;
}

}  // namespace

namespace gfdetail {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  const int m = trim_degree(f);
  if (m < 1) return false;
  // trial division by every monic polynomial of degree 1..m/2
  for (int d = 1; 2 * d <= m; ++d) {
    std::vector<int> g(d + 1, 0);
    g[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      int digits[32];
      to_digits(static_cast<int>(v), p, d, digits);
      for (int i = 0; i < d; ++i) g[i] = digits[i];
      const std::vector<int> r = poly_mod(f, g, p);
      if (trim_degree(r) < 0) return false;
    }
  }
  return true;
}

}  // namespace gfdetail

Field Field::make(int p, int m) {
  if (!gfdetail::is_prime(p))
    throw Error(Errc::not_prime, "field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::invalid_argument, "field degree must be >= 1");
  if (m == 1) return make(p, m, {});

  const long long q = checked_pow(p, m);
  if (q < 0)
    throw Error(Errc::unsupported_field_size,
                "p^m exceeds the supported maximum of 2^16");
  // scan monic degree-m polynomials in lex order, low-degree coefficients
  // most significant, and take the first irreducible one
  const long long count = q;  // p^m coefficient tuples
  for (long long v = 0; v < count; ++v) {
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    long long rest = v;
    for (int i = m - 1; i >= 0; --i) {
      f[m - 1 - i] = static_cast<int>((rest / checked_pow(p, i)) % p);
      rest %= checked_pow(p, i);
    }
    if (gfdetail::is_irreducible(f, p)) return make(p, m, f);
  }
  throw Error(Errc::invalid_argument, "no irreducible polynomial found");  // unreachable
}

Field Field::make(int p, int m, const std::vector<int>& modulus) {
  if (!gfdetail::is_prime(p))
    throw Error(Errc::not_prime, "field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::invalid_argument, "field degree must be >= 1");
  const long long q = checked_pow(p, m);
  if (q < 0)
    throw Error(Errc::unsupported_field_size,
                "p^m exceeds the supported maximum of 2^16");

  if (m == 1) {
    if (!modulus.empty())
      throw Error(Errc::degree_mismatch, "prime fields take no modulus");
  } else {
    if (static_cast<int>(modulus.size()) != m + 1)
      throw Error(Errc::degree_mismatch,
                  "modulus must have degree m = " + std::to_string(m));
    if (modulus[m] != 1)
      throw Error(Errc::invalid_argument, "modulus must be monic");
    for (int c : modulus)
      if (c < 0 || c >= p)
        throw Error(Errc::invalid_argument, "modulus coefficient out of range");
    if (!gfdetail::is_irreducible(modulus, p))
      throw Error(Errc::reducible_modulus, "supplied modulus factors over F_p");
  }

  auto impl = std::make_shared<Impl>();
  impl->spec.p = p;
  impl->spec.m = m;
  impl->spec.modulus = modulus;
  impl->spec.q = static_cast<int>(q);

  Field field(impl);
  if (q <= kMulTableMaxQ) {
    impl->mul_table.resize(static_cast<size_t>(q) * q);
    impl->inv_table.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b <= a; ++b) {
        const int r = field.mul_slow(a, b);
        impl->mul_table[static_cast<size_t>(a) * q + b] = static_cast<std::uint16_t>(r);
        impl->mul_table[static_cast<size_t>(b) * q + a] = static_cast<std::uint16_t>(r);
        if (r == 1) {
          impl->inv_table[a] = static_cast<std::uint16_t>(b);
          impl->inv_table[b] = static_cast<std::uint16_t>(a);
        }
      }
  }
  return field;
}

Field Field::smallest_at_least(int bound) {
  if (bound < 2) throw Error(Errc::invalid_argument, "field size bound must be >= 2");
  for (int q = bound; q <= kMaxFieldOrder; ++q) {
    int p = 2;
    while (q % p != 0) ++p;
    int t = q, m = 0;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t == 1) return make(p, m);
  }
  throw Error(Errc::unsupported_field_size,
              "no supported prime power >= " + std::to_string(bound));
}

int Field::add(int a, int b) const {
  const auto& s = impl_->spec;
  if (s.m == 1) return (a + b) % s.p;
  if (s.p == 2) return a ^ b;
  int da[16], db[16], dr[16];
  to_digits(a, s.p, s.m, da);
  to_digits(b, s.p, s.m, db);
  for (int i = 0; i < s.m; ++i) dr[i] = (da[i] + db[i]) % s.p;
  return from_digits(dr, s.p, s.m);
}

int Field::neg(int a) const {
  const auto& s = impl_->spec;
  if (s.m == 1) return a == 0 ? 0 : s.p - a;
  if (s.p == 2) return a;
  int da[16], dr[16];
  to_digits(a, s.p, s.m, da);
  for (int i = 0; i < s.m; ++i) dr[i] = da[i] == 0 ? 0 : s.p - da[i];
  return from_digits(dr, s.p, s.m);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_slow(int a, int b) const {
  const auto& s = impl_->spec;
  if (s.m == 1) return static_cast<int>((static_cast<long long>(a) * b) % s.p);
  int da[16], db[16];
  to_digits(a, s.p, s.m, da);
  to_digits(b, s.p, s.m, db);
  int prod[31] = {0};
  for (int i = 0; i < s.m; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < s.m; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
  }
  // reduce modulo the monic modulus
  for (int i = 2 * s.m - 2; i >= s.m; --i) {
    const int c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < s.m; ++j) {
      int& t = prod[i - s.m + j];
      t = (t - c * s.modulus[j]) % s.p;
      if (t < 0) t += s.p;
    }
  }
  return from_digits(prod, s.p, s.m);
}

int Field::mul(int a, int b) const {
  if (!impl_->mul_table.empty())
    return impl_->mul_table[static_cast<size_t>(a) * impl_->spec.q + b];
  return mul_slow(a, b);
}

int Field::inv(int a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return pow(a, impl_->spec.q - 2);  // a^(q-2) = a^{-1} in F_q*
}

int Field::pow(int a, long long e) const {
  if (e < 0) return inv(pow(a, -e));
  int result = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::element(int value) const {
  if (value < 0 || value >= q())
    throw Error(Errc::invalid_argument,
                "element encoding " + std::to_string(value) + " out of range for q = " +
                    std::to_string(q()));
  return FieldElement(*this, value);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (int v = 0; v < q(); ++v) out.emplace_back(*this, v);
  return out;
}

FieldElement::FieldElement(Field field, int value)
    : field_(std::move(field)), value_(value) {}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (field_ != o.field_)
    throw Error(Errc::field_mismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.add(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.sub(value_, o.value_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.mul(value_, o.value_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.mul(value_, field_.inv(o.value_)));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.neg(value_));
}

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_.inv(value_));
}

FieldElement FieldElement::pow(long long e) const {
  return FieldElement(field_, field_.pow(value_, e));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::not_prime: return "not_prime";
    case Errc::reducible_modulus: return "reducible_modulus";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::unsupported_field_size: return "unsupported_field_size";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::missing_variable: return "missing_variable";
    case Errc::coefficient_overflow: return "coefficient_overflow";
    case Errc::bad_subset_size: return "bad_subset_size";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::duplicate_alphas: return "duplicate_alphas";
    case Errc::not_reduced: return "not_reduced";
    case Errc::precondition_violated: return "precondition_violated";
    case Errc::field_too_small: return "field_too_small";
    case Errc::too_large: return "too_large";
    case Errc::condition_violated: return "condition_violated";
    case Errc::cut_condition_violated: return "cut_condition_violated";
    case Errc::rate_exceeds_capacity: return "rate_exceeds_capacity";
    case Errc::not_found: return "not_found";
    case Errc::identically_zero: return "identically_zero";
    case Errc::not_applicable: return "not_applicable";
    case Errc::invalid_family: return "invalid_family";
  }
  return "unknown";
}

bool errc_is_domain_failure(Errc c) {
  switch (c) {
    case Errc::condition_violated:
    case Errc::cut_condition_violated:
    case Errc::rate_exceeds_capacity:
    case Errc::not_found:
    case Errc::identically_zero:
    case Errc::not_applicable:
    case Errc::invalid_family:
      return true;
    default:
      return false;
  }
}

}  // namespace gmmds
