#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <json.hpp>

#include "uff/monoid.hpp"
#include "uff/rational.hpp"

namespace uff::algebra {

/// Q (p == 0) or F_p.
struct CoefficientField {
  std::uint32_t p = 0;

  static CoefficientField rationals() { return {}; }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientField prime(std::uint32_t p);
  /// "Q" or "F_p" / "Fp" / "GF(p)".
  static CoefficientField parse(std::string_view text);

  bool is_rational() const { return p == 0; }
  std::string str() const;
  /// Canonical coefficient: unchanged over Q, residue in [0, p) over F_p.
  /// Throws std::invalid_argument when c has a denominator divisible by p.
  mpq_class reduce(const mpq_class& c) const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

/// Finite sum of c x^q with q in a Puiseux-style exponent monoid.
class AlgebraElement {
public:
  using Terms = std::map<Rational, mpq_class>;

  /// Validates every exponent against the monoid and drops zero
  /// coefficients. Throws std::invalid_argument for a non-member exponent or
  /// a monoid whose elements are not rational.
  AlgebraElement(CoefficientField field, std::shared_ptr<const Monoid> exponents, const Terms& terms);

  static AlgebraElement zero(CoefficientField field, std::shared_ptr<const Monoid> exponents);
  static AlgebraElement monomial(CoefficientField field, std::shared_ptr<const Monoid> exponents, mpq_class c,
                                 Rational e);
  /// "3/2 + 2*x^(1/2) - x^3 + x"; exponents may be written with or without
  /// parentheses.
  static AlgebraElement parse(CoefficientField field, std::shared_ptr<const Monoid> exponents, std::string_view text);

  const CoefficientField& field() const { return field_; }
  const Monoid& exponents() const { return *monoid_; }
  std::shared_ptr<const Monoid> exponents_ptr() const { return monoid_; }
  /// Ascending exponents, nonzero coefficients.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_ && same_presentation(*a.monoid_, *b.monoid_);
  }

private:
  struct Trusted {};
  AlgebraElement(Trusted, CoefficientField field, std::shared_ptr<const Monoid> exponents, Terms terms);

  friend AlgebraElement add(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement mul(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement scale(const AlgebraElement&, const mpq_class&);

  CoefficientField field_;
  std::shared_ptr<const Monoid> monoid_;
  Terms terms_;
};

/// Throw std::invalid_argument on a field or monoid mismatch.
AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const AlgebraElement& f, const mpq_class& c);
AlgebraElement negate(const AlgebraElement& f);

/// Largest / smallest exponent. Throw std::invalid_argument for zero.
Rational deg(const AlgebraElement& f);
Rational ord(const AlgebraElement& f);

/// gcd of the coefficients of a nonzero element over Q with integer
/// coefficients. Throws std::invalid_argument otherwise.
mpz_class content(const AlgebraElement& f);
bool is_primitive(const AlgebraElement& f);

/// f = x^(ord f / 2) * (x^(-ord f / 2) f). Throws std::invalid_argument when
/// the exponent monoid is not known to be 2-divisible and std::domain_error
/// when ord f = 0 or f = 0.
std::pair<AlgebraElement, AlgebraElement> antimatter_split(const AlgebraElement& f);

/// {"field":"Q","monoid":{...},"terms":[{"exp":"1/2","coef":"2"}, ...]}
nlohmann::json to_json(const AlgebraElement& f);
AlgebraElement algebra_from_json(const nlohmann::json& doc);

} // namespace uff::algebra
