#include "uff/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace uff {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace

Rational::Rational(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Rational: negative value " + std::to_string(n));
  value_ = mpq_class(mpz_class(static_cast<long>(n)));
}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  if (sgn(numerator) * sgn(denominator) < 0)
    throw std::invalid_argument("Rational: negative value");
  value_ = mpq_class(abs(numerator), abs(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

std::optional<Rational> Rational::from_mpq(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpq_class c = q;
  c.canonicalize();
  return Rational(std::move(c));
}

std::optional<Rational> Rational::minus(const Rational& other) const {
  mpq_class d = value_ - other.value_;
  if (sgn(d) < 0) return std::nullopt;
  return Rational(std::move(d));
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }

Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

} // namespace uff
