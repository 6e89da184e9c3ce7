#pragma once

// Shared machinery behind the public monoid operations. Every rational
// presentation kind implements the same small set of primitives; the public
// layer in operations.cpp turns them into reports and lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uff/monoid.hpp"

namespace uff::detail {

enum class Tri { Yes, No, Unknown };

inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

/// Budget accounting for one public call.
struct Ctx {
  explicit Ctx(const Budget& b) : budget(b) {}

  const Budget& budget;
  std::uint64_t count = 0;
  std::size_t truncation_used = 0;
  mpz_class coefficient_bound = 0;
  bool capped = false;

  /// False once the enumeration cap is exceeded.
  bool tick(std::uint64_t n = 1) {
    count += n;
    if (count > budget.enumeration_cap) capped = true;
    return !capped;
  }
  void use_index(std::size_t n) { truncation_used = std::max(truncation_used, n); }
  void use_coefficient(const mpz_class& c) {
    if (c > coefficient_bound) coefficient_bound = c;
  }
  BudgetUsed used() const { return {truncation_used, coefficient_bound, count}; }
};

/// Membership oracle for the additive semigroup generated by positive
/// integers, via the Apery set of the smallest generator (shortest paths over
/// residues). Exact for every target, including gcd > 1.
class SemigroupOracle {
public:
  SemigroupOracle() = default;
  explicit SemigroupOracle(std::vector<std::int64_t> generators);

  bool contains(const mpz_class& v) const;
  /// Coefficients aligned with `generators()`, or nullopt for non-members.
  std::optional<std::vector<mpz_class>> representation(const mpz_class& v) const;
  const std::vector<std::int64_t>& generators() const { return gens_; }

  static constexpr std::int64_t kMaxModulus = 4'000'000;

private:
  std::vector<std::int64_t> gens_;
  std::int64_t modulus_ = 0;
  std::size_t modulus_index_ = 0;
  std::vector<std::int64_t> apery_; // -1 marks an unreachable residue
  std::vector<std::int32_t> via_;
};

struct FgAnalysis {
  mpz_class scale = 1;                    // lcm of generator denominators
  std::vector<Rational> atoms;            // minimal generators, ascending
  std::vector<std::int64_t> scaled_atoms; // atoms * scale
  SemigroupOracle oracle;                 // over all atoms
  std::vector<SemigroupOracle> prefix;    // prefix[i]: the i smallest atoms

  /// q * scale when it is an integer.
  std::optional<mpz_class> scaled(const Rational& q) const;
};

std::shared_ptr<const FgAnalysis> analyze_fg(const std::vector<Rational>& generators);

/// Membership with the evidence that decided it.
struct Membership {
  Tri status = Tri::Unknown;
  std::vector<std::pair<Element, mpz_class>> combination; // when status = Yes via generators
  std::string region;                                       // when status = Yes via a region rule
};

struct AtomCheck {
  Tri status = Tri::Unknown;
  std::optional<std::pair<Element, Element>> split; // when status = No
};

/// Receives factorizations during enumeration; return false to stop early.
using FactorizationSink = std::function<bool(const Factorization&)>;

struct Enumeration {
  bool complete = true; // every factorization was delivered
  bool finite = true;   // the factorization set is known to be finite
  bool exact() const { return complete && finite; }
};

// Rational presentations (FG, families, threshold unions). Preconditions as
// in the public API; callers check membership first where required.

Membership rational_membership(const Monoid& m, const Rational& q, Ctx& ctx);
Tri rational_member(const Monoid& m, const Rational& q, Ctx& ctx);
Tri rational_divides(const Monoid& m, const Rational& d, const Rational& q, Ctx& ctx);
AtomCheck rational_atom(const Monoid& m, const Rational& q, Ctx& ctx);
Enumeration rational_factorizations(const Monoid& m, const Rational& q, Ctx& ctx, const FactorizationSink& sink);
LengthSet rational_lengths(const Monoid& m, const Rational& q, Ctx& ctx);
ElementList rational_atoms(const Monoid& m, Ctx& ctx, const std::optional<Rational>& cutoff);
ElementList rational_atom_divisors(const Monoid& m, const Rational& q, Ctx& ctx);
/// Verified divisors in generation order (coarse first), not sorted.
ElementList rational_divisors(const Monoid& m, const Rational& q, Ctx& ctx);
/// Is there a nonzero common divisor of `set`? Fills `witness` on Yes.
Tri rational_common_divisor_exists(const Monoid& m, const std::vector<Rational>& set, Ctx& ctx,
                                   std::optional<Rational>& witness);
/// Members of the monoid in [0, x]; exact when the list is complete.
ElementList rational_members_up_to(const Monoid& m, const Rational& x, Ctx& ctx);
/// A nonzero member u <= x, when one exists.
Tri rational_positive_at_most(const Monoid& m, const Rational& x, Ctx& ctx, std::optional<Rational>& witness);

// Per-kind implementations.
namespace fg {
Membership membership(const FgPuiseux& p, const Rational& q, Ctx& ctx);
AtomCheck atom(const FgPuiseux& p, const Rational& q, Ctx& ctx);
Enumeration factorizations(const FgPuiseux& p, const Rational& q, Ctx& ctx, const FactorizationSink& sink);
ElementList members_up_to(const FgPuiseux& p, const Rational& x, Ctx& ctx);
ElementList atoms(const FgPuiseux& p, const std::optional<Rational>& cutoff);
ElementList atom_divisors(const FgPuiseux& p, const Rational& q, Ctx& ctx);
ElementList divisors(const FgPuiseux& p, const Rational& q, Ctx& ctx);
Tri common_divisor_exists(const FgPuiseux& p, const std::vector<Rational>& set, std::optional<Rational>& witness);
/// Finite families become finitely generated presentations.
FgPuiseux from_generators(const std::vector<Rational>& generators);
} // namespace fg

namespace family {
Membership membership(const GeneratorFamily& f, const Rational& q, Ctx& ctx);
AtomCheck atom(const GeneratorFamily& f, const Rational& q, Ctx& ctx);
Enumeration factorizations(const GeneratorFamily& f, const Rational& q, Ctx& ctx, const FactorizationSink& sink);
ElementList atoms(const GeneratorFamily& f, Ctx& ctx, const std::optional<Rational>& cutoff);
ElementList atom_divisors(const GeneratorFamily& f, const Rational& q, Ctx& ctx);
ElementList divisors(const GeneratorFamily& f, const Rational& q, Ctx& ctx);
Tri common_divisor_exists(const GeneratorFamily& f, const std::vector<Rational>& set, Ctx& ctx,
                          std::optional<Rational>& witness);
ElementList members_up_to(const GeneratorFamily& f, const Rational& x, Ctx& ctx);
Tri positive_at_most(const GeneratorFamily& f, const Rational& x, Ctx& ctx, std::optional<Rational>& witness);

/// Factorizations whose atom multiplicities are forced, plus one chosen atom
/// index absorbing the free part; used for non-BF and non-FF witnesses.
/// nullopt when the family has no such closed form (custom families) or q
/// has a unique factorization.
std::optional<Factorization> grams_route(const Rational& q, std::size_t index);
/// First index usable by `grams_route` for q.
std::optional<std::size_t> grams_first_route(const Rational& q);
} // namespace family

namespace threshold {
Membership membership(const ThresholdUnion& t, const Rational& q, Ctx& ctx);
AtomCheck atom(const ThresholdUnion& t, const Rational& q, Ctx& ctx);
Enumeration factorizations(const ThresholdUnion& t, const Rational& q, Ctx& ctx, const FactorizationSink& sink);
LengthSet lengths(const ThresholdUnion& t, const Rational& q, Ctx& ctx);
ElementList atoms(const ThresholdUnion& t, Ctx& ctx, const std::optional<Rational>& cutoff);
ElementList atom_divisors(const ThresholdUnion& t, const Rational& q, Ctx& ctx);
ElementList divisors(const ThresholdUnion& t, const Rational& q, Ctx& ctx);
Tri common_divisor_exists(const ThresholdUnion& t, const std::vector<Rational>& set, Ctx& ctx,
                          std::optional<Rational>& witness);
/// Lower end of the interval of atoms at or above theta is theta; this is its
/// width. Zero when only theta itself can be such an atom.
std::optional<Rational> threshold_atom_width(const ThresholdUnion& t, Ctx& ctx);
} // namespace threshold

namespace quadrant {
bool member(const LatticePoint& p);
AtomCheck atom(const LatticePoint& p);
/// Nonempty iff both coordinates are nonnegative; always exact.
std::vector<Factorization> factorizations(const LatticePoint& p);
ElementList divisors(const LatticePoint& p, Ctx& ctx);
Tri common_divisor_exists(const std::vector<LatticePoint>& set, std::optional<LatticePoint>& witness);
} // namespace quadrant

/// Visits the dyadic grid points of [lo, hi] coarse to fine: the endpoints,
/// then the new midpoints of each refinement level, down to 2^levels
/// subintervals. Stops when `visit` returns false.
void for_each_dyadic_point(const Rational& lo, const Rational& hi, std::size_t levels,
                           const std::function<bool(const Rational&)>& visit);

// Element-level helpers shared by the public layer, probes, and witnesses.
Tri member_of(const Monoid& m, const Element& q, Ctx& ctx);
Tri divides_of(const Monoid& m, const Element& d, const Element& q, Ctx& ctx);
/// Is d a common divisor whose shifted set has no nonzero common divisor?
/// Assumes d divides every element of `set`.
Tri is_mcd(const Monoid& m, const std::vector<Element>& set, const Element& d, Ctx& ctx);

Rational rational_from(const mpz_class& num, const mpz_class& den);

void sort_unique(std::vector<Element>& v);

} // namespace uff::detail
