#ifndef GORHOM_FIELD_HPP
#define GORHOM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>

#include "gorhom/errors.hpp"

namespace gorhom {

enum class FieldKind { prime, rational };

/// Serializable description of a base field: GF(p) or Q.
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 2;  // meaningful only for prime fields

  static FieldSpec prime(std::uint32_t p) { return {FieldKind::prime, p}; }
  static FieldSpec rational() { return {FieldKind::rational, 0}; }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && (kind == FieldKind::rational || p == o.p);
  }

  std::string to_string() const {
    return kind == FieldKind::rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p) with canonical residues 0..p-1. The modulus is a runtime value so a
/// single instantiation serves every prime.
class PrimeField {
 public:
  using element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw FieldMismatch("GF(p) requires a prime 2 <= p < 2^31, got " + std::to_string(p));
  }

  std::uint32_t p() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

  element zero() const noexcept { return 0; }
  element one() const noexcept { return 1; }
  bool is_zero(element a) const noexcept { return a == 0; }
  bool is_one(element a) const noexcept { return a == 1; }

  element from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<element>(r);
  }

  element add(element a, element b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<element>(s >= p_ ? s - p_ : s);
  }
  element sub(element a, element b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  element neg(element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  element mul(element a, element b) const noexcept {
    return static_cast<element>((std::uint64_t{a} * b) % p_);
  }
  element inv(element a) const {
    if (a == 0) throw std::domain_error("division by zero in " + spec().to_string());
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<element>(result);
  }
  element div(element a, element b) const { return mul(a, inv(b)); }

  std::string to_string(element a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// The rationals with GMP arbitrary-precision fractions.
class RationalField {
 public:
  using element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rational(); }
  bool operator==(const RationalField&) const noexcept { return true; }
  bool operator!=(const RationalField&) const noexcept { return false; }

  element zero() const { return element(0); }
  element one() const { return element(1); }
  bool is_zero(const element& a) const { return sgn(a) == 0; }
  bool is_one(const element& a) const { return a == 1; }

  element from_int(long long v) const { return element(static_cast<long>(v)); }

  /// Parses "a" or "a/b"; throws std::invalid_argument on malformed text.
  element from_string(const std::string& text) const {
    element q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }

  element add(const element& a, const element& b) const { return a + b; }
  element sub(const element& a, const element& b) const { return a - b; }
  element neg(const element& a) const { return -a; }
  element mul(const element& a, const element& b) const { return a * b; }
  element inv(const element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return element(1) / a;
  }
  element div(const element& a, const element& b) const { return mul(a, inv(b)); }

  std::string to_string(const element& a) const { return a.get_str(); }
};

template <class F>
inline constexpr bool is_prime_field_v = std::is_same_v<F, PrimeField>;

/// Invokes `fn` with the concrete field object described by `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::rational) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

}  // namespace gorhom

#endif  // GORHOM_FIELD_HPP
