#include <set>
#include <stdexcept>

#include "internal.hpp"

namespace uff {

namespace detail {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

[[noreturn]] void quadrant_not_rational() { throw std::logic_error("rational operation on the quadrant union"); }

} // namespace

Membership rational_membership(const Monoid& m, const Rational& q, Ctx& ctx) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::membership(p, q, ctx); },
                             [&](const GeneratorFamily& f) { return family::membership(f, q, ctx); },
                             [&](const ThresholdUnion& t) { return threshold::membership(t, q, ctx); },
                             [&](const QuadrantUnion&) -> Membership { quadrant_not_rational(); }},
                    m.rep());
}

Tri rational_member(const Monoid& m, const Rational& q, Ctx& ctx) {
  if (q.is_zero()) return Tri::Yes;
  if (const auto* f = std::get_if<GeneratorFamily>(&m.rep())) {
    // Skip building a combination when only the status is needed.
    if (f->rule != FamilyRule::Custom) {
      bool any = false;
      family::factorizations(*f, q, ctx, [&](const Factorization&) {
        any = true;
        return false;
      });
      return tri(any);
    }
  }
  return rational_membership(m, q, ctx).status;
}

Tri rational_divides(const Monoid& m, const Rational& d, const Rational& q, Ctx& ctx) {
  auto rest = q.minus(d);
  if (!rest) return Tri::No;
  Tri a = rational_member(m, d, ctx);
  if (a != Tri::Yes) return a;
  return rational_member(m, *rest, ctx);
}

AtomCheck rational_atom(const Monoid& m, const Rational& q, Ctx& ctx) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::atom(p, q, ctx); },
                             [&](const GeneratorFamily& f) { return family::atom(f, q, ctx); },
                             [&](const ThresholdUnion& t) { return threshold::atom(t, q, ctx); },
                             [&](const QuadrantUnion&) -> AtomCheck { quadrant_not_rational(); }},
                    m.rep());
}

Enumeration rational_factorizations(const Monoid& m, const Rational& q, Ctx& ctx, const FactorizationSink& sink) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::factorizations(p, q, ctx, sink); },
                             [&](const GeneratorFamily& f) { return family::factorizations(f, q, ctx, sink); },
                             [&](const ThresholdUnion& t) { return threshold::factorizations(t, q, ctx, sink); },
                             [&](const QuadrantUnion&) -> Enumeration { quadrant_not_rational(); }},
                    m.rep());
}

LengthSet rational_lengths(const Monoid& m, const Rational& q, Ctx& ctx) {
  if (const auto* t = std::get_if<ThresholdUnion>(&m.rep())) return threshold::lengths(*t, q, ctx);
  std::set<mpz_class> found;
  Enumeration e = rational_factorizations(m, q, ctx, [&](const Factorization& z) {
    if (z.length() > 0) found.insert(z.length());
    return true;
  });
  return LengthSet{{found.begin(), found.end()}, e.exact()};
}

ElementList rational_atoms(const Monoid& m, Ctx& ctx, const std::optional<Rational>& cutoff) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::atoms(p, cutoff); },
                             [&](const GeneratorFamily& f) { return family::atoms(f, ctx, cutoff); },
                             [&](const ThresholdUnion& t) { return threshold::atoms(t, ctx, cutoff); },
                             [&](const QuadrantUnion&) -> ElementList { quadrant_not_rational(); }},
                    m.rep());
}

ElementList rational_atom_divisors(const Monoid& m, const Rational& q, Ctx& ctx) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::atom_divisors(p, q, ctx); },
                             [&](const GeneratorFamily& f) { return family::atom_divisors(f, q, ctx); },
                             [&](const ThresholdUnion& t) { return threshold::atom_divisors(t, q, ctx); },
                             [&](const QuadrantUnion&) -> ElementList { quadrant_not_rational(); }},
                    m.rep());
}

ElementList rational_divisors(const Monoid& m, const Rational& q, Ctx& ctx) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::divisors(p, q, ctx); },
                             [&](const GeneratorFamily& f) { return family::divisors(f, q, ctx); },
                             [&](const ThresholdUnion& t) { return threshold::divisors(t, q, ctx); },
                             [&](const QuadrantUnion&) -> ElementList { quadrant_not_rational(); }},
                    m.rep());
}

Tri rational_common_divisor_exists(const Monoid& m, const std::vector<Rational>& set, Ctx& ctx,
                                   std::optional<Rational>& witness) {
  return std::visit(
      Overload{[&](const FgPuiseux& p) { return fg::common_divisor_exists(p, set, witness); },
               [&](const GeneratorFamily& f) { return family::common_divisor_exists(f, set, ctx, witness); },
               [&](const ThresholdUnion& t) { return threshold::common_divisor_exists(t, set, ctx, witness); },
               [&](const QuadrantUnion&) -> Tri { quadrant_not_rational(); }},
      m.rep());
}

ElementList rational_members_up_to(const Monoid& m, const Rational& x, Ctx& ctx) {
  return std::visit(Overload{[&](const FgPuiseux& p) { return fg::members_up_to(p, x, ctx); },
                             [&](const GeneratorFamily& f) { return family::members_up_to(f, x, ctx); },
                             [&](const ThresholdUnion&) -> ElementList {
                               throw std::logic_error("members_up_to: threshold unions are never bases");
                             },
                             [&](const QuadrantUnion&) -> ElementList { quadrant_not_rational(); }},
                    m.rep());
}

Tri rational_positive_at_most(const Monoid& m, const Rational& x, Ctx& ctx, std::optional<Rational>& witness) {
  return std::visit(Overload{[&](const FgPuiseux& p) {
                               const auto& atoms = p.analysis->atoms;
                               if (atoms.empty() || x < atoms.front()) return Tri::No;
                               witness = atoms.front();
                               return Tri::Yes;
                             },
                             [&](const GeneratorFamily& f) { return family::positive_at_most(f, x, ctx, witness); },
                             [&](const ThresholdUnion& t) {
                               if (t.theta <= x) {
                                 witness = t.theta;
                                 return Tri::Yes;
                               }
                               return rational_positive_at_most(*t.base, x, ctx, witness);
                             },
                             [&](const QuadrantUnion&) -> Tri { quadrant_not_rational(); }},
                    m.rep());
}

} // namespace detail

namespace {

using detail::Ctx;
using detail::Tri;

Verdict verdict_of(Tri t) {
  switch (t) {
  case Tri::Yes: return Verdict::Yes;
  case Tri::No: return Verdict::No;
  case Tri::Unknown: return Verdict::UnknownAtBudget;
  }
  return Verdict::UnknownAtBudget;
}

void check_kind(const Monoid& m, const Element& q) {
  if (m.rational_elements() != q.is_rational())
    throw std::invalid_argument("element " + q.str() + " has the wrong kind for " + m.describe());
}

Witness membership_witness(const Monoid& m, const Element& q, Ctx& ctx, Tri& status) {
  Witness w;
  w.subject = {q};
  if (!m.rational_elements()) {
    const auto& p = q.point();
    status = detail::tri(detail::quadrant::member(p));
    if (status == Tri::No) {
      w.kind = Witness::Kind::NonMember;
      return w;
    }
    if (p.x >= 0 && p.y >= 0) {
      w.kind = Witness::Kind::Combination;
      if (p.x > 0) w.terms.emplace_back(LatticePoint{1, 0}, p.x);
      if (p.y > 0) w.terms.emplace_back(LatticePoint{0, 1}, p.y);
    } else {
      w.kind = Witness::Kind::Region;
      w.role = "second coordinate >= 2";
    }
    return w;
  }
  auto mem = detail::rational_membership(m, q.rational(), ctx);
  status = mem.status;
  if (status == Tri::No) {
    w.kind = Witness::Kind::NonMember;
  } else if (status == Tri::Yes && !mem.region.empty()) {
    w.kind = Witness::Kind::Region;
    w.role = mem.region;
  } else if (status == Tri::Yes) {
    w.kind = Witness::Kind::Combination;
    w.terms = mem.combination;
  }
  return w;
}

std::string membership_basis(const Monoid& m) {
  struct V {
    std::string operator()(const FgPuiseux&) const { return "scaled numerical-semigroup oracle"; }
    std::string operator()(const GeneratorFamily& f) const {
      if (f.rule == FamilyRule::Grams) return "odd-prime valuation reduction";
      if (f.rule == FamilyRule::PrimesSquared) return "prime-square valuation reduction";
      return f.custom->membership ? "membership rule" : "truncated search";
    }
    std::string operator()(const ThresholdUnion&) const { return "threshold or base membership"; }
    std::string operator()(const QuadrantUnion&) const { return "coordinate test"; }
  };
  return std::visit(V{}, m.rep());
}

Tri member_status(const Monoid& m, const Element& q, Ctx& ctx) {
  if (!m.rational_elements()) return detail::tri(detail::quadrant::member(q.point()));
  return detail::rational_member(m, q.rational(), ctx);
}

void require_member(const Monoid& m, const Element& q, Ctx& ctx) {
  if (member_status(m, q, ctx) == Tri::No)
    throw std::domain_error(q.str() + " is not in " + m.describe());
}

std::optional<Element> difference(const Element& q, const Element& d) {
  if (q.is_rational()) {
    auto r = q.rational().minus(d.rational());
    if (!r) return std::nullopt;
    return Element(*r);
  }
  return Element(LatticePoint{q.point().x - d.point().x, q.point().y - d.point().y});
}

Tri divides_status(const Monoid& m, const Element& d, const Element& q, Ctx& ctx) {
  auto rest = difference(q, d);
  if (!rest) return Tri::No;
  Tri a = member_status(m, d, ctx);
  if (a != Tri::Yes) return a;
  return member_status(m, *rest, ctx);
}

ElementList divisors_in_order(const Monoid& m, const Element& q, Ctx& ctx) {
  if (!m.rational_elements()) return detail::quadrant::divisors(q.point(), ctx);
  return detail::rational_divisors(m, q.rational(), ctx);
}

Tri common_divisor_exists(const Monoid& m, const std::vector<Element>& set, Ctx& ctx) {
  if (!m.rational_elements()) {
    std::vector<LatticePoint> pts;
    for (const auto& e : set) pts.push_back(e.point());
    std::optional<LatticePoint> w;
    return detail::quadrant::common_divisor_exists(pts, w);
  }
  std::vector<Rational> qs;
  for (const auto& e : set) qs.push_back(e.rational());
  std::optional<Rational> w;
  return detail::rational_common_divisor_exists(m, qs, ctx, w);
}

void finish(ElementList& l) { detail::sort_unique(l.items); }

std::vector<Element> checked_set(const Monoid& m, const std::vector<Element>& set, Ctx& ctx) {
  if (set.empty()) throw std::invalid_argument("common divisors need a nonempty set");
  for (const auto& s : set) {
    check_kind(m, s);
    require_member(m, s, ctx);
  }
  return set;
}

// The element whose divisors seed the common-divisor search: the smallest
// rational, or the pair with the fewest second coordinates.
Element seed(const std::vector<Element>& set) {
  return *std::min_element(set.begin(), set.end(), [](const Element& a, const Element& b) {
    if (a.is_rational()) return a < b;
    return a.point().y < b.point().y || (a.point().y == b.point().y && a < b);
  });
}

// Common divisors in generation order.
ElementList common_in_order(const Monoid& m, const std::vector<Element>& set, Ctx& ctx) {
  const Element s = seed(set);
  ElementList cands = divisors_in_order(m, s, ctx);
  ElementList out;
  out.exact = cands.exact;
  out.undecided = cands.undecided;
  for (const auto& d : cands.items) {
    Tri all = Tri::Yes;
    for (const auto& t : set) {
      if (t == s) continue;
      Tri x = divides_status(m, d, t, ctx);
      if (x == Tri::No) {
        all = Tri::No;
        break;
      }
      if (x == Tri::Unknown) all = Tri::Unknown;
    }
    if (all == Tri::Yes) out.items.push_back(d);
    if (all == Tri::Unknown) ++out.undecided;
  }
  if (out.undecided > 0) out.exact = false;
  return out;
}

} // namespace

namespace detail {

Tri is_mcd(const Monoid& m, const std::vector<Element>& set, const Element& d, Ctx& ctx) {
  std::vector<Element> shifted;
  for (const auto& s : set) {
    auto r = difference(s, d);
    if (!r) return Tri::No;
    Tri in = member_status(m, *r, ctx);
    if (in != Tri::Yes) return in;
    shifted.push_back(*r);
  }
  Tri c = common_divisor_exists(m, shifted, ctx);
  if (c == Tri::Unknown) return Tri::Unknown;
  return c == Tri::Yes ? Tri::No : Tri::Yes;
}

Tri member_of(const Monoid& m, const Element& q, Ctx& ctx) { return member_status(m, q, ctx); }
Tri divides_of(const Monoid& m, const Element& d, const Element& q, Ctx& ctx) { return divides_status(m, d, q, ctx); }

} // namespace detail

ProbeReport is_member(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  Ctx ctx(budget);
  ProbeReport r;
  Tri status = Tri::Unknown;
  Witness w = membership_witness(m, q, ctx, status);
  r.verdict = verdict_of(status);
  if (status != Tri::Unknown) r.witnesses.push_back(std::move(w));
  r.basis = membership_basis(m);
  r.budget_used = ctx.used();
  return r;
}

ProbeReport divides(const Monoid& m, const Element& d, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, d);
  check_kind(m, q);
  Ctx ctx(budget);
  ProbeReport r;
  r.basis = "d and q - d are members";
  auto rest = difference(q, d);
  if (!rest) {
    Witness w;
    w.kind = Witness::Kind::Difference;
    w.subject = {d, q};
    r.verdict = Verdict::No;
    r.witnesses.push_back(w);
    r.budget_used = ctx.used();
    return r;
  }
  Tri a = Tri::Unknown;
  Tri b = Tri::Unknown;
  Witness wd = membership_witness(m, d, ctx, a);
  wd.role = wd.role.empty() ? "divisor" : "divisor: " + wd.role;
  Witness wr = membership_witness(m, *rest, ctx, b);
  wr.role = wr.role.empty() ? "cofactor" : "cofactor: " + wr.role;
  if (a == Tri::No || b == Tri::No) {
    r.verdict = Verdict::No;
    r.witnesses.push_back(a == Tri::No ? wd : wr);
  } else if (a == Tri::Yes && b == Tri::Yes) {
    r.verdict = Verdict::Yes;
    r.witnesses = {wd, wr};
  } else {
    r.verdict = Verdict::UnknownAtBudget;
  }
  r.budget_used = ctx.used();
  return r;
}

ProbeReport is_atom(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  if (q.is_zero()) throw std::invalid_argument("is_atom: the identity is not a candidate atom");
  Ctx ctx(budget);
  require_member(m, q, ctx);
  detail::AtomCheck a = m.rational_elements() ? detail::rational_atom(m, q.rational(), ctx)
                                               : detail::quadrant::atom(q.point());
  ProbeReport r;
  r.verdict = verdict_of(a.status);
  r.basis = "no split into two nonzero members";
  if (a.status == Tri::Yes) {
    Witness w;
    w.kind = Witness::Kind::Atom;
    w.subject = {q};
    w.elements = {q};
    r.witnesses.push_back(w);
  } else if (a.status == Tri::No) {
    Witness w;
    w.kind = Witness::Kind::Split;
    w.subject = {q};
    w.elements = {a.split->first, a.split->second};
    r.witnesses.push_back(w);
  }
  r.budget_used = ctx.used();
  return r;
}

ElementList divisors(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  Ctx ctx(budget);
  require_member(m, q, ctx);
  ElementList l = divisors_in_order(m, q, ctx);
  finish(l);
  return l;
}

ElementList atoms_up_to(const Monoid& m, const Budget& budget, std::optional<Rational> cutoff) {
  budget.validate();
  Ctx ctx(budget);
  ElementList l;
  if (!m.rational_elements()) {
    l.items = {LatticePoint{0, 1}, LatticePoint{1, 0}};
  } else {
    l = detail::rational_atoms(m, ctx, cutoff);
  }
  finish(l);
  return l;
}

FactorizationList factorizations(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  Ctx ctx(budget);
  require_member(m, q, ctx);
  FactorizationList out;
  if (!m.rational_elements()) {
    out.items = detail::quadrant::factorizations(q.point());
    return out;
  }
  auto e = detail::rational_factorizations(m, q.rational(), ctx, [&](const Factorization& z) {
    out.items.push_back(z);
    return true;
  });
  out.exact = e.exact();
  std::sort(out.items.begin(), out.items.end(), factorization_precedes);
  out.items.erase(std::unique(out.items.begin(), out.items.end()), out.items.end());
  return out;
}

LengthSet length_set(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  Ctx ctx(budget);
  require_member(m, q, ctx);
  if (q.is_zero()) return {};
  if (!m.rational_elements()) {
    LengthSet l;
    for (const auto& z : detail::quadrant::factorizations(q.point())) l.lengths.push_back(z.length());
    return l;
  }
  return detail::rational_lengths(m, q.rational(), ctx);
}

ElementList atom_divisors(const Monoid& m, const Element& q, const Budget& budget) {
  budget.validate();
  check_kind(m, q);
  Ctx ctx(budget);
  require_member(m, q, ctx);
  ElementList l;
  if (q.is_zero()) return l;
  if (!m.rational_elements()) {
    for (const auto& a : {LatticePoint{0, 1}, LatticePoint{1, 0}})
      if (divides_status(m, a, q, ctx) == Tri::Yes) l.items.emplace_back(a);
  } else {
    l = detail::rational_atom_divisors(m, q.rational(), ctx);
  }
  finish(l);
  return l;
}

ElementList common_divisors(const Monoid& m, const std::vector<Element>& set, const Budget& budget) {
  budget.validate();
  Ctx ctx(budget);
  auto s = checked_set(m, set, ctx);
  ElementList l = common_in_order(m, s, ctx);
  finish(l);
  return l;
}

ElementList mcds(const Monoid& m, const std::vector<Element>& set, const Budget& budget) {
  budget.validate();
  Ctx ctx(budget);
  auto s = checked_set(m, set, ctx);
  ElementList common = common_in_order(m, s, ctx);
  ElementList out;
  out.exact = common.exact;
  out.undecided = common.undecided;
  for (const auto& d : common.items) {
    if (!common.exact && out.items.size() >= budget.witness_limit) break;
    Tri t = detail::is_mcd(m, s, d, ctx);
    if (t == Tri::Yes) out.items.push_back(d);
    if (t == Tri::Unknown) ++out.undecided;
  }
  if (out.undecided > 0) out.exact = false;
  finish(out);
  return out;
}

} // namespace uff
