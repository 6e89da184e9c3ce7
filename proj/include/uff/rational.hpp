#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace uff {

/// Exact nonnegative rational number, always stored in lowest terms.
///
/// This is the element type of every Puiseux-style monoid in the library.
/// Construction from a negative value or a zero denominator throws
/// std::invalid_argument; subtraction is only available in checked form
/// (see `minus`), since a difference may leave the nonnegative rationals.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
  Rational(mpz_class numerator, mpz_class denominator);

  /// Accepts "a/b" or "a" with no whitespace. The result is reduced.
  static Rational parse(std::string_view text);
  /// nullopt when `q` is negative.
  static std::optional<Rational> from_mpq(const mpq_class& q);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// `*this - other`, or nullopt when the difference is negative.
  std::optional<Rational> minus(const Rational& other) const;

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Division by a positive rational.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

} // namespace uff
