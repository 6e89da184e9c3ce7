#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "uff/rational.hpp"

namespace uff {

/// Integer pair, the element type of the quadrant-union monoid.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A monoid element: a nonnegative rational or an integer pair.
/// Ordered by value, pairs lexicographically.
class Element {
public:
  Element() : value_(Rational{}) {}
  Element(Rational q) : value_(std::move(q)) {}     // NOLINT(google-explicit-constructor)
  Element(LatticePoint p) : value_(p) {}            // NOLINT(google-explicit-constructor)
  Element(std::int64_t n) : value_(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// "a/b", "a", or "(x,y)".
  static Element parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_point() const { return std::holds_alternative<LatticePoint>(value_); }
  /// Throws std::invalid_argument when the element has the other kind.
  const Rational& rational() const;
  const LatticePoint& point() const;

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

private:
  std::variant<Rational, LatticePoint> value_;
};

/// Sum of two elements of the same kind.
Element operator+(const Element& a, const Element& b);

/// Multiset of atoms; the identity has the empty factorization.
class Factorization {
public:
  Factorization() = default;
  explicit Factorization(std::map<Element, mpz_class> parts);

  /// Adds `mult` copies of `atom`; nonpositive multiplicities are ignored.
  void add(const Element& atom, const mpz_class& mult);

  const std::map<Element, mpz_class>& parts() const { return parts_; }
  mpz_class length() const;
  /// Weighted sum of the parts; `zero` fixes the element kind for the empty case.
  Element evaluate(const Element& zero) const;
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

private:
  std::map<Element, mpz_class> parts_;
};

/// Lexicographically decreasing coefficient order, scanning atoms from the
/// largest down. Sorting with this puts larger atoms with more copies first.
bool factorization_precedes(const Factorization& a, const Factorization& b);

} // namespace uff
