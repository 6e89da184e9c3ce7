#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "uff/report.hpp"

namespace uff::dplusm {

/// GF(p^m) with elements encoded as integers sum c_i p^i (c_i the
/// coefficients in the polynomial basis 1, x, ..., x^(m-1)). The modulus is
/// the monic irreducible of degree m with the smallest such encoding of its
/// lower coefficients.
class FiniteField {
public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument unless p is prime, m >= 1 and p^m <= kMaxOrder.
  FiniteField(std::uint32_t p, std::uint32_t m);
  /// "GF(p^m)" or "GF(p)".
  static FiniteField parse(std::string_view spec);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  /// Monic modulus, coefficients from degree 0 to m.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string spec() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// A generator of the multiplicative group.
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error for zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& c) const;
  /// "[a0,a1,...]" with m entries.
  std::string str(Elem a) const;
  /// Accepts "[a0,...]" (missing trailing entries are 0) or a bare integer in F_p.
  Elem parse_element(std::string_view text) const;

  /// Is d a valid subfield degree (d divides m)?
  bool has_subfield(std::uint32_t d) const { return d >= 1 && m_ % d == 0; }
  /// Membership in the subfield of order p^d. Throws unless d divides m.
  bool in_subfield(Elem a, std::uint32_t d) const;

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
  Elem poly_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;         // exp_[i] = g^i, length 2(order-1)
  std::vector<std::uint32_t> log_; // log_[a] for a != 0
};

/// The quotient K^x / k^x for the subfield k of degree d.
class CosetSpace {
public:
  CosetSpace(std::shared_ptr<const FiniteField> field, std::uint32_t subfield_degree);

  const FiniteField& field() const { return *field_; }
  std::uint32_t subfield_degree() const { return d_; }
  /// Number of cosets, by enumeration.
  std::uint64_t size() const { return reps_.size(); }
  /// Canonical representatives (the least encoding in each coset), ascending.
  const std::vector<FiniteField::Elem>& transversal() const { return reps_; }
  /// Index of the coset of a nonzero element within `transversal()`.
  std::size_t coset_of(FiniteField::Elem u) const;
  bool same_coset(FiniteField::Elem u, FiniteField::Elem v) const { return coset_of(u) == coset_of(v); }
  const std::vector<FiniteField::Elem>& subfield_units() const { return units_; }

private:
  std::shared_ptr<const FiniteField> field_;
  std::uint32_t d_;
  std::vector<FiniteField::Elem> units_;
  std::vector<FiniteField::Elem> reps_;
  std::vector<std::size_t> coset_; // per element; unused at 0
};

/// (p^m - 1) / (p^d - 1), checked against coset enumeration. Throws
/// std::invalid_argument unless d divides m.
std::uint64_t coset_count(const FiniteField& field, std::uint32_t subfield_degree);

/// Power series over K truncated mod t^N.
class Series {
public:
  using Elem = FiniteField::Elem;
  static constexpr std::size_t kDefaultPrecision = 32;

  Series(std::shared_ptr<const FiniteField> field, std::vector<Elem> coeffs, std::size_t precision = kDefaultPrecision);
  static Series zero(std::shared_ptr<const FiniteField> field, std::size_t precision = kDefaultPrecision);
  /// c * t^e.
  static Series monomial(std::shared_ptr<const FiniteField> field, Elem c, std::size_t e,
                         std::size_t precision = kDefaultPrecision);
  /// "c0 + c1*t + c2*t^3 + O(t^N)" with coefficients "[a0,a1,...]"; the
  /// O-term sets the precision (default otherwise).
  static Series parse(std::shared_ptr<const FiniteField> field, std::string_view text);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  std::size_t precision() const { return coeffs_.size(); }
  Elem coefficient(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Elem>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient; precision() when zero.
  std::size_t valuation() const;
  bool is_unit() const { return coeffs_[0] != 0; }

  Series operator+(const Series& o) const;
  Series operator*(const Series& o) const;
  /// Multiplicative inverse of a unit of K[[t]]. Throws std::domain_error otherwise.
  Series inverse() const;
  /// Drops the first k coefficients (division by t^k); precision shrinks by k.
  Series shift_down(std::size_t k) const;
  /// Same series at a lower precision.
  Series truncate(std::size_t precision) const;

  std::string str() const;
  bool operator==(const Series& o) const;

private:
  void check_compatible(const Series& o) const;

  std::shared_ptr<const FiniteField> field_;
  std::vector<Elem> coeffs_;
};

/// Constant term in the subfield of degree d: membership in R = k + tK[[t]].
bool is_member_R(const Series& f, std::uint32_t subfield_degree);

struct AssociateResult {
  Verdict verdict = Verdict::No;
  /// Always true: series are compared modulo t^N only.
  bool up_to_precision = true;
  std::string reason;
  /// a / b when both valuations agree.
  std::vector<FiniteField::Elem> quotient_prefix;
};

/// Is a = u b for a unit u of R? Requires nonzero members of R; throws
/// std::invalid_argument for a zero argument and std::domain_error for a
/// non-member.
AssociateResult associate_in_R(const Series& a, const Series& b, std::uint32_t subfield_degree);

/// One factorization of t^e per representative u: (u t, u^-1 t, t, ..., t).
/// Throws std::invalid_argument when e < 2 or a representative is zero.
std::vector<std::vector<Series>> twist_family(std::shared_ptr<const FiniteField> field, std::size_t exponent,
                                              const std::vector<FiniteField::Elem>& reps,
                                              std::size_t precision = Series::kDefaultPrecision);

Series product(const std::vector<Series>& factors);

/// Componentwise: the i-th factors are associates in R for every i.
bool factorizations_associate(const std::vector<Series>& f, const std::vector<Series>& g, std::uint32_t subfield_degree);

/// As unordered factorizations: some matching pairs every factor of f with an
/// associate factor of g.
bool factorizations_associate_unordered(const std::vector<Series>& f, const std::vector<Series>& g,
                                        std::uint32_t subfield_degree);

/// a + b sqrt(2) with rational a, b.
struct QuadraticSurd {
  mpq_class a;
  mpq_class b;

  std::string str() const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd conjugate() const { return {a, -b}; }
  /// Throws std::domain_error for zero.
  QuadraticSurd inverse() const;
  bool operator==(const QuadraticSurd& o) const { return a == o.a && b == o.b; }
};

/// u Q^x = v Q^x in Q(sqrt 2)^x / Q^x: u * conj(v) has no sqrt(2) part.
bool same_rational_coset(const QuadraticSurd& u, const QuadraticSurd& v);

/// Twist units 1 + j sqrt(2), j = 1..count; the factorizations
/// (u t)(u^-1 t) of t^2 they define are pairwise non-associate, ordered or not.
std::vector<QuadraticSurd> quadratic_twists(std::size_t count);

} // namespace uff::dplusm
