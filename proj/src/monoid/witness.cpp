#include <set>

#include "internal.hpp"

namespace uff {

namespace {

using detail::Ctx;
using detail::Tri;

bool atom_yes(const Monoid& m, const Element& a, const Budget& b) {
  if (a.is_zero()) return false;
  Ctx ctx(b);
  if (detail::member_of(m, a, ctx) != Tri::Yes) return false;
  return is_atom(m, a, b).verdict == Verdict::Yes;
}

bool sound_factorization(const Monoid& m, const Factorization& z, const Element& q, const Budget& b) {
  for (const auto& [a, mult] : z.parts())
    if (mult <= 0 || !atom_yes(m, a, b)) return false;
  return z.evaluate(m.zero()) == q;
}

bool distinct(const std::vector<Element>& v) { return std::set<Element>(v.begin(), v.end()).size() == v.size(); }

} // namespace

bool verify_witness(const Monoid& m, const Witness& w, const Budget& budget) {
  Ctx ctx(budget);
  auto kind_ok = [&](const std::vector<Element>& v) {
    for (const auto& e : v)
      if (e.is_rational() != m.rational_elements()) return false;
    return true;
  };
  if (!kind_ok(w.subject) || !kind_ok(w.elements)) return false;
  for (const auto& [e, c] : w.terms)
    if (e.is_rational() != m.rational_elements()) return false;

  switch (w.kind) {
  case Witness::Kind::Combination: {
    if (w.subject.size() != 1) return false;
    Factorization z;
    for (const auto& [e, c] : w.terms) {
      if (c <= 0 || detail::member_of(m, e, ctx) != Tri::Yes) return false;
      z.add(e, c);
    }
    return z.evaluate(m.zero()) == w.subject[0];
  }
  case Witness::Kind::Region:
    return w.subject.size() == 1 && is_member(m, w.subject[0], budget).verdict == Verdict::Yes;
  case Witness::Kind::NonMember:
    return w.subject.size() == 1 && detail::member_of(m, w.subject[0], ctx) == Tri::No;
  case Witness::Kind::Split: {
    if (w.subject.size() != 1 || w.elements.size() != 2) return false;
    const auto& u = w.elements[0];
    const auto& v = w.elements[1];
    return !u.is_zero() && !v.is_zero() && detail::member_of(m, u, ctx) == Tri::Yes &&
           detail::member_of(m, v, ctx) == Tri::Yes && u + v == w.subject[0];
  }
  case Witness::Kind::Factorizations: {
    if (w.subject.size() != 1) return false;
    const Element& q = w.subject[0];
    for (const auto& z : w.factorizations)
      if (!sound_factorization(m, z, q, budget)) return false;
    if (w.factorizations.empty() && w.exact) {
      auto z = factorizations(m, q, budget);
      return z.exact && z.items.empty();
    }
    for (std::size_t i = 0; i < w.factorizations.size(); ++i)
      for (std::size_t j = i + 1; j < w.factorizations.size(); ++j)
        if (w.factorizations[i] == w.factorizations[j]) return false;
    return true;
  }
  case Witness::Kind::Elements: {
    if (!distinct(w.elements)) return false;
    if (w.role == "atoms") {
      for (const auto& a : w.elements)
        if (!atom_yes(m, a, budget)) return false;
      return true;
    }
    if (w.role == "atom-divisors" || w.role == "divisors") {
      if (w.subject.size() != 1) return false;
      for (const auto& a : w.elements) {
        if (detail::divides_of(m, a, w.subject[0], ctx) != Tri::Yes) return false;
        if (w.role == "atom-divisors" && !atom_yes(m, a, budget)) return false;
      }
      return true;
    }
    if (w.role == "common-divisors" || w.role == "mcds") {
      if (w.subject.empty()) return false;
      for (const auto& d : w.elements) {
        for (const auto& s : w.subject)
          if (detail::divides_of(m, d, s, ctx) != Tri::Yes) return false;
        if (w.role == "mcds" && detail::is_mcd(m, w.subject, d, ctx) != Tri::Yes) return false;
      }
      return true;
    }
    return false;
  }
  case Witness::Kind::Lengths: {
    if (w.subject.size() != 1) return false;
    std::set<mpz_class> backed;
    for (const auto& z : w.factorizations) {
      if (!sound_factorization(m, z, w.subject[0], budget)) return false;
      backed.insert(z.length());
    }
    for (const auto& l : w.lengths)
      if (!backed.count(l)) return false;
    return true;
  }
  case Witness::Kind::Atom:
    return w.elements.size() == 1 && atom_yes(m, w.elements[0], budget);
  case Witness::Kind::Difference: {
    if (w.subject.size() != 2) return false;
    const auto& d = w.subject[0];
    const auto& q = w.subject[1];
    if (d.is_rational()) return !q.rational().minus(d.rational()).has_value();
    return false;
  }
  }
  return false;
}

} // namespace uff
