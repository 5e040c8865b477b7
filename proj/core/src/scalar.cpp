#include "skewhecke/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace skh {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar Scalar::rational(const mpq_class& value) {
  Scalar s;
  s.value_ = value;
  s.value_.canonicalize();
  return s;
}

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw NotAUnit("zero denominator");
  return rational(mpq_class(numerator, denominator));
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("residue requires a nonzero modulus");
  if (value >= 0) return residue_unsigned(static_cast<std::uint64_t>(value), modulus);
  std::uint64_t magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
  std::uint64_t r = magnitude % modulus;
  return residue_unsigned(r == 0 ? 0 : modulus - r, modulus);
}

Scalar Scalar::residue_unsigned(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.residue_ = value % modulus;
  return s;
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(value_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? value_ == 1 : residue_ == 1 % modulus_; }

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) {
    throw std::invalid_argument("scalar field mismatch: characteristic " + std::to_string(modulus_) +
                                " vs " + std::to_string(other.modulus_));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotAUnit("not a unit: " + to_string());
  if (modulus_ == 0) return rational(1 / value_);
  // Fermat: a^(p-2).
  return residue_unsigned(powmod(residue_, modulus_ - 2, modulus_), modulus_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0) {
    s.value_ = -value_;
  } else if (residue_ != 0) {
    s.residue_ = modulus_ - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ == 0) {
    value_ += other.value_;
  } else {
    u128 sum = static_cast<u128>(residue_) + other.residue_;
    residue_ = static_cast<std::uint64_t>(sum % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ == 0) {
    value_ *= other.value_;
  } else {
    residue_ = mulmod(residue_, other.residue_, modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rationals" || text == "Q" || text == "QQ") return rationals();
  for (std::string_view prefix : {"prime(", "prime_field(", "GF("}) {
    if (text.starts_with(prefix) && text.ends_with(")")) {
      std::string_view digits = trim(text.substr(prefix.size(), text.size() - prefix.size() - 1));
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad field modulus '" + std::string(digits) + "'");
      }
      return prime(p);
    }
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (characteristic_ == 0) return Scalar::rational(mpq_class(static_cast<long>(n)));
  return Scalar::residue(n, characteristic_);
}

Scalar Field::from_ratio(std::int64_t numerator, std::int64_t denominator) const {
  return from_int(numerator) / from_int(denominator);
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = trim(text.substr(0, slash));
    den = trim(text.substr(slash + 1));
  }
  auto parse_int = [&](std::string_view digits) {
    std::string s(digits);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw std::invalid_argument("bad scalar literal '" + std::string(text) + "'");
    }
    return z;
  };
  mpz_class n = parse_int(num);
  mpz_class d = den.empty() ? mpz_class(1) : parse_int(den);
  if (d == 0) throw NotAUnit("zero denominator in '" + std::string(text) + "'");
  if (characteristic_ == 0) return Scalar::rational(mpq_class(n, d));
  mpz_class p(std::to_string(characteristic_));
  mpz_class rn = n % p;
  if (rn < 0) rn += p;
  mpz_class rd = d % p;
  if (rd < 0) rd += p;
  Scalar sn = Scalar::residue_unsigned(std::stoull(rn.get_str()), characteristic_);
  Scalar sd = Scalar::residue_unsigned(std::stoull(rd.get_str()), characteristic_);
  return sn / sd;
}

std::string Field::to_string() const {
  return characteristic_ == 0 ? "rationals" : "prime(" + std::to_string(characteristic_) + ")";
}

}  // namespace skh
