#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uff/element.hpp"
#include "uff/rational.hpp"
#include "uff/report.hpp"

namespace uff {

namespace detail {
struct FgAnalysis;
}

class Monoid;

/// Submonoid of Q>=0 generated by finitely many positive rationals.
/// An empty generator list presents the trivial monoid {0}.
struct FgPuiseux {
  std::vector<Rational> generators; // ascending, distinct
  std::shared_ptr<const detail::FgAnalysis> analysis;
};

enum class FamilyRule {
  Grams,         // a_n = 1 / (2^n p_n), p_n the n-th odd prime
  PrimesSquared, // a_n = (p_n + 1) / p_n^2, p_n the n-th prime
  Custom,
};

/// User-supplied generator family. Membership is exact only when
/// `membership` is set; otherwise it is searched over a truncated prefix.
struct CustomFamilySpec {
  std::string name;
  std::vector<Rational> prefix;
  /// Generator with 1-based index n beyond the prefix. May be empty.
  std::function<Rational(std::size_t)> extension;
  std::function<bool(const Rational&)> membership;
  /// Every member's half is a member (the monoid is 2-divisible).
  bool halving_closed = false;
};

struct GeneratorFamily {
  FamilyRule rule = FamilyRule::Grams;
  std::shared_ptr<const CustomFamilySpec> custom;

  /// 1-based generator. Throws std::out_of_range past a custom family's end.
  Rational generator(std::size_t n) const;
  std::string name() const;
};

/// S union Q>=theta for a rational base presentation S.
struct ThresholdUnion {
  std::shared_ptr<const Monoid> base;
  Rational theta;
};

/// (N0 x N0) union (Z x N>=2).
struct QuadrantUnion {};

/// Immutable monoid presentation (a tagged union of the four kinds).
class Monoid {
public:
  using Variant = std::variant<FgPuiseux, GeneratorFamily, ThresholdUnion, QuadrantUnion>;

  static Monoid fg_puiseux(std::vector<Rational> generators);
  static Monoid grams();
  static Monoid primes_squared();
  /// N0[1/2], as a custom family with generators 1, 1/2, 1/4, ...
  static Monoid dyadic();
  static Monoid custom(CustomFamilySpec spec);
  static Monoid threshold_union(const Monoid& base, Rational theta);
  static Monoid quadrant_union();

  const Variant& rep() const { return rep_; }
  bool rational_elements() const { return !std::holds_alternative<QuadrantUnion>(rep_); }
  /// The identity of the matching element kind.
  Element zero() const;
  /// A short human-readable description.
  std::string describe() const;

private:
  explicit Monoid(Variant v) : rep_(std::move(v)) {}
  Variant rep_;
};

bool same_presentation(const Monoid& a, const Monoid& b);

struct Budget {
  std::size_t truncation_index = 8;
  std::size_t witness_limit = 5;
  std::uint64_t enumeration_cap = 1'000'000;

  /// Throws std::invalid_argument unless every field is at least 1.
  void validate() const;
};

struct ElementList {
  std::vector<Element> items;
  bool exact = true;
  /// Candidates whose status could not be decided at the budget.
  std::size_t undecided = 0;
};

struct FactorizationList {
  std::vector<Factorization> items;
  bool exact = true;
};

struct LengthSet {
  std::vector<mpz_class> lengths; // ascending, positive
  bool exact = true;
};

enum class Property { Atomic, BF, IDF, MCDFinite, FF, UFF, Antimatter };

std::string to_string(Property p);
std::optional<Property> parse_property(std::string_view text);

// Membership, divisibility, and structure. All operations are pure functions of
// (presentation, arguments, budget); reports are reproducible byte for byte.

ProbeReport is_member(const Monoid& m, const Element& q, const Budget& budget = {});
ProbeReport divides(const Monoid& m, const Element& d, const Element& q, const Budget& budget = {});
ProbeReport is_atom(const Monoid& m, const Element& q, const Budget& budget = {});

ElementList divisors(const Monoid& m, const Element& q, const Budget& budget = {});
/// Atoms with generator index <= truncation_index, or value <= cutoff when given.
ElementList atoms_up_to(const Monoid& m, const Budget& budget = {}, std::optional<Rational> cutoff = std::nullopt);
FactorizationList factorizations(const Monoid& m, const Element& q, const Budget& budget = {});
/// Lengths of the nonempty factorizations; the identity reports no lengths.
LengthSet length_set(const Monoid& m, const Element& q, const Budget& budget = {});
ElementList atom_divisors(const Monoid& m, const Element& q, const Budget& budget = {});
ElementList common_divisors(const Monoid& m, const std::vector<Element>& set, const Budget& budget = {});
ElementList mcds(const Monoid& m, const std::vector<Element>& set, const Budget& budget = {});

/// Three-valued finiteness-property probe with re-checkable witnesses.
ProbeReport probe(const Monoid& m, Property property, const std::vector<Element>& sample = {},
                  const Budget& budget = {});

/// Re-checks one witness against the definitions, through the public operations.
bool verify_witness(const Monoid& m, const Witness& w, const Budget& budget = {});

} // namespace uff
