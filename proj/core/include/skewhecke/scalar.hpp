#pragma once

// Exact coefficient arithmetic over Q and prime fields F_p.
//
// A Scalar carries the modulus of the field it belongs to (0 for Q), so
// arithmetic can be written with ordinary operators. Mixing scalars from
// different fields throws std::invalid_argument.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace skh {

/// Raised when inverting zero, or an integer divisible by the characteristic.
class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar rational(const mpq_class& value);
  static Scalar rational(long numerator, long denominator = 1);
  /// Residue class of `value` modulo the prime `modulus`.
  static Scalar residue(std::int64_t value, std::uint64_t modulus);
  static Scalar residue_unsigned(std::uint64_t value, std::uint64_t modulus);

  /// 0 for rationals, p for F_p.
  std::uint64_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }

  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful for rationals.
  const mpq_class& as_rational() const { return value_; }
  /// Only meaningful for prime fields; residue in [0, p).
  std::uint64_t as_residue() const { return residue_; }

  /// Multiplicative inverse; throws NotAUnit on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// `a/b` for rationals (denominator omitted when 1), bare residue for F_p.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  mpq_class value_{0};
  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Handle to one of the supported coefficient fields.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument when `p` is not prime.
  static Field prime(std::uint64_t p);
  /// Parses "rationals" / "Q" or "prime(p)" / "GF(p)".
  static Field parse(std::string_view text);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint64_t characteristic() const { return characteristic_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_ratio(std::int64_t numerator, std::int64_t denominator) const;
  /// Parses a scalar literal (`-3`, `5/6`) into this field.
  Scalar parse_scalar(std::string_view text) const;
  /// True when `s` is an element of this field.
  bool owns(const Scalar& s) const { return s.modulus() == characteristic_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t characteristic) : characteristic_(characteristic) {}
  std::uint64_t characteristic_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace skh
