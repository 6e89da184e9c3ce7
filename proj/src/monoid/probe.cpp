#include <set>
#include <stdexcept>

#include "internal.hpp"

namespace uff {

namespace {

using detail::Ctx;
using detail::Tri;

enum class Shape { Fg, Trivial, Grams, Squares, Halving, CustomOther, ThresholdFg, ThresholdFamily, Quadrant };

Shape shape_of(const Monoid& m) {
  if (const auto* p = std::get_if<FgPuiseux>(&m.rep())) return p->analysis->atoms.empty() ? Shape::Trivial : Shape::Fg;
  if (const auto* f = std::get_if<GeneratorFamily>(&m.rep())) {
    if (f->rule == FamilyRule::Grams) return Shape::Grams;
    if (f->rule == FamilyRule::PrimesSquared) return Shape::Squares;
    if (!f->custom->extension) return Shape::Fg;
    return f->custom->halving_closed ? Shape::Halving : Shape::CustomOther;
  }
  if (const auto* t = std::get_if<ThresholdUnion>(&m.rep()))
    return std::holds_alternative<FgPuiseux>(t->base->rep()) ? Shape::ThresholdFg : Shape::ThresholdFamily;
  return Shape::Quadrant;
}

Witness empty_z(const Element& q) {
  Witness w;
  w.kind = Witness::Kind::Factorizations;
  w.role = "no factorization";
  w.subject = {q};
  w.exact = true;
  return w;
}

Witness element_list(std::string role, std::vector<Element> subject, const ElementList& l) {
  Witness w;
  w.kind = Witness::Kind::Elements;
  w.role = std::move(role);
  w.subject = std::move(subject);
  w.elements = l.items;
  w.exact = l.exact;
  return w;
}

Witness factorization_list(const Element& q, const FactorizationList& z, std::string role = "factorizations") {
  Witness w;
  w.kind = Witness::Kind::Factorizations;
  w.role = std::move(role);
  w.subject = {q};
  w.factorizations = z.items;
  w.exact = z.exact;
  return w;
}

Witness lengths_of(const Element& q, const std::vector<Factorization>& zs, bool exact) {
  Witness w;
  w.kind = Witness::Kind::Lengths;
  w.role = "lengths";
  w.subject = {q};
  std::set<mpz_class> seen;
  for (const auto& z : zs) {
    if (z.length() == 0 || !seen.insert(z.length()).second) continue;
    w.factorizations.push_back(z);
  }
  w.lengths.assign(seen.begin(), seen.end());
  w.exact = exact;
  return w;
}

struct Probe {
  const Monoid& m;
  Property property;
  std::vector<Element> sample;
  const Budget& budget;
  Shape shape;
  ProbeReport r;
  Ctx ctx;

  Probe(const Monoid& m_, Property p, std::vector<Element> s, const Budget& b)
      : m(m_), property(p), sample(std::move(s)), budget(b), shape(shape_of(m_)), ctx(b) {}

  ProbeReport yes(std::string basis) {
    r.verdict = Verdict::Yes;
    r.basis = std::move(basis);
    if (r.witnesses.empty()) r.witnesses.push_back(element_list("atoms", {}, atoms_up_to(m, budget)));
    return r;
  }
  ProbeReport no(std::string basis, Witness w) {
    r.verdict = Verdict::No;
    r.basis = std::move(basis);
    r.witnesses.push_back(std::move(w));
    return r;
  }
  ProbeReport unknown(std::string basis) {
    r.verdict = Verdict::UnknownAtBudget;
    r.basis = std::move(basis);
    r.witnesses.clear();
    r.budget_used = ctx.used();
    r.budget_used.truncation_index = std::max(r.budget_used.truncation_index, budget.truncation_index);
    r.budget_used.enumeration_count = std::max<std::uint64_t>(r.budget_used.enumeration_count, 1);
    return r;
  }

  std::vector<Element> nonzero_sample() const {
    std::vector<Element> out;
    for (const auto& q : sample)
      if (!q.is_zero()) out.push_back(q);
    return out;
  }

  // A sample element with an exact empty factorization set.
  std::optional<Element> non_atomic_sample() {
    for (const auto& q : nonzero_sample()) {
      auto z = factorizations(m, q, budget);
      if (z.exact && z.items.empty()) return q;
    }
    return std::nullopt;
  }

  Element non_atomic_default() {
    if (auto q = non_atomic_sample()) return *q;
    if (shape == Shape::Quadrant) return LatticePoint{-1, 2};
    return std::get<GeneratorFamily>(m.rep()).generator(1);
  }

  // Grams elements with a positive dyadic free part factor through every
  // late index; 1 is the canonical choice.
  Element grams_element() const {
    for (const auto& q : nonzero_sample())
      if (detail::family::grams_first_route(q.rational())) return q;
    return Rational(1);
  }

  std::vector<Factorization> grams_routes(const Rational& q) const {
    std::vector<Factorization> out;
    std::size_t n = *detail::family::grams_first_route(q);
    for (std::size_t i = 0; i < budget.witness_limit; ++i) out.push_back(*detail::family::grams_route(q, n + i));
    return out;
  }

  const ThresholdUnion& threshold() const { return std::get<ThresholdUnion>(m.rep()); }

  // An element with two factor parts free to move inside the open atom
  // interval above theta: 2 theta + width / 2.
  Rational threshold_spread_element() {
    const auto& t = threshold();
    Rational w = *detail::threshold::threshold_atom_width(t, ctx);
    return t.theta + t.theta + w / Rational(2);
  }

  FactorizationList threshold_spread_factorizations(const Rational& q) {
    const auto& t = threshold();
    Rational w = *detail::threshold::threshold_atom_width(t, ctx);
    FactorizationList z;
    z.exact = false;
    const Rational hi = t.theta + w / Rational(2);
    detail::for_each_dyadic_point(t.theta, hi, budget.truncation_index + 32, [&](const Rational& x) {
      if (x == t.theta || x == hi) return true;
      Rational y = *q.minus(x);
      if (detail::threshold::atom(t, x, ctx).status == Tri::Yes && detail::threshold::atom(t, y, ctx).status == Tri::Yes) {
        Factorization f;
        f.add(x, 1);
        f.add(y, 1);
        if (std::find(z.items.begin(), z.items.end(), f) == z.items.end()) z.items.push_back(f);
      }
      return z.items.size() < budget.witness_limit && ctx.tick();
    });
    std::sort(z.items.begin(), z.items.end(), factorization_precedes);
    return z;
  }

  ProbeReport sample_refutes_atomic(const std::string& fallback) {
    if (auto q = non_atomic_sample()) return no("element without factorizations", empty_z(*q));
    return unknown(fallback);
  }

  ProbeReport run() {
    switch (property) {
    case Property::Atomic: return atomic();
    case Property::BF: return bf();
    case Property::FF: return ff();
    case Property::UFF: return uff();
    case Property::IDF: return idf();
    case Property::MCDFinite: return mcd_finite();
    case Property::Antimatter: return antimatter();
    }
    return unknown("unsupported property");
  }

  void add_sample_factorizations() {
    for (const auto& q : nonzero_sample()) r.witnesses.push_back(factorization_list(q, factorizations(m, q, budget)));
  }

  ProbeReport atomic() {
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial: return yes("finitely generated");
    case Shape::Grams:
    case Shape::Squares: return yes("generated by its atoms: every generator passes the family atom test");
    case Shape::ThresholdFg: return yes("positive elements are bounded away from 0");
    case Shape::Quadrant:
    case Shape::Halving: return no("element without factorizations", empty_z(non_atomic_default()));
    default: return sample_refutes_atomic("no sampled element lacks factorizations");
    }
  }

  void add_sample_lengths() {
    for (const auto& q : nonzero_sample()) {
      auto z = factorizations(m, q, budget);
      auto l = length_set(m, q, budget);
      Witness w = lengths_of(q, z.items, l.exact);
      r.witnesses.push_back(w);
    }
  }

  ProbeReport bf() {
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial: add_sample_lengths(); return yes("finitely generated");
    case Shape::Squares: add_sample_lengths(); return yes("finite factorization sets");
    case Shape::ThresholdFg: add_sample_lengths(); return yes("positive elements are bounded away from 0");
    case Shape::Quadrant:
    case Shape::Halving: return no("element without factorizations", empty_z(non_atomic_default()));
    case Shape::Grams: {
      Element q = grams_element();
      return no("free dyadic part absorbed at any index gives unboundedly many lengths",
                lengths_of(q, grams_routes(q.rational()), false));
    }
    default: return sample_refutes_atomic("length sets undecided at budget");
    }
  }

  ProbeReport ff() {
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial: add_sample_factorizations(); return yes("finitely generated");
    case Shape::Squares: add_sample_factorizations(); return yes("factorizations are partitions of a bounded integer");
    case Shape::Quadrant:
    case Shape::Halving: return no("element without factorizations", empty_z(non_atomic_default()));
    case Shape::Grams: {
      Element q = grams_element();
      FactorizationList z{grams_routes(q.rational()), false};
      return no("free dyadic part absorbed at any index gives infinitely many factorizations",
                factorization_list(q, z));
    }
    case Shape::ThresholdFg: {
      Rational q = threshold_spread_element();
      auto z = threshold_spread_factorizations(q);
      if (z.items.size() < budget.witness_limit) return unknown("too few atom pairs found at budget");
      return no("two atoms free to move inside the atom interval", factorization_list(q, z));
    }
    default: return sample_refutes_atomic("factorization sets undecided at budget");
    }
  }

  ProbeReport uff() {
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial: add_sample_factorizations(); return yes("finitely generated");
    case Shape::Squares: add_sample_factorizations(); return yes("factorizations are partitions of a bounded integer");
    case Shape::Quadrant: add_sample_factorizations(); return yes("atomic elements are in N0 x N0, each with one factorization");
    case Shape::Halving: return yes("no atoms, so only the identity is atomic");
    case Shape::Grams: {
      Element q = grams_element();
      FactorizationList z{grams_routes(q.rational()), false};
      return no("atomic element with infinitely many factorizations", factorization_list(q, z));
    }
    case Shape::ThresholdFg: {
      Rational q = threshold_spread_element();
      auto z = threshold_spread_factorizations(q);
      if (z.items.size() < budget.witness_limit) return unknown("too few atom pairs found at budget");
      return no("atomic element with infinitely many factorizations", factorization_list(q, z));
    }
    default: break;
    }
    auto s = nonzero_sample();
    if (s.empty()) return unknown("no sample to check");
    for (const auto& q : s) {
      auto z = factorizations(m, q, budget);
      if (!z.exact) return unknown("factorizations of " + q.str() + " not complete at budget");
      r.witnesses.push_back(factorization_list(q, z));
    }
    return yes("at sample: every atomic sampled element has an exact finite factorization set");
  }

  void add_sample_atom_divisors() {
    for (const auto& q : nonzero_sample()) r.witnesses.push_back(element_list("atom-divisors", {q}, atom_divisors(m, q, budget)));
  }

  ProbeReport idf_stream(const Element& q, const std::string& basis) {
    auto l = atom_divisors(m, q, budget);
    if (!l.exact && l.items.size() >= budget.witness_limit)
      return no(basis, element_list("atom-divisors", {q}, l));
    return unknown("atom divisor stream too short at budget");
  }

  ProbeReport idf() {
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial: add_sample_atom_divisors(); return yes("finitely many atoms");
    case Shape::Squares: add_sample_atom_divisors(); return yes("atom divisors lie in a finite prime window");
    case Shape::Quadrant: add_sample_atom_divisors(); return yes("finitely many atoms");
    case Shape::Halving: return yes("no atoms");
    case Shape::Grams: return idf_stream(grams_element(), "every late generator divides the element");
    case Shape::ThresholdFg: {
      const auto& t = threshold();
      for (const auto& q : nonzero_sample())
        if (t.theta + t.theta < q.rational()) return idf_stream(q, "atom interval below q - theta");
      return idf_stream(threshold_spread_element(), "atom interval below q - theta");
    }
    case Shape::ThresholdFamily: {
      const auto& t = threshold();
      for (const auto& q : nonzero_sample())
        if (t.theta < q.rational()) return idf_stream(q, "family atoms shrink to 0 below q - theta");
      auto rr = idf_stream(t.theta + t.theta, "family atoms shrink to 0 below q - theta");
      if (rr.verdict == Verdict::No) return rr;
      break;
    }
    default: break;
    }
    auto s = nonzero_sample();
    if (s.empty()) return unknown("no sample to check");
    for (const auto& q : s) {
      auto l = atom_divisors(m, q, budget);
      if (!l.exact) return unknown("atom divisors of " + q.str() + " not complete at budget");
      r.witnesses.push_back(element_list("atom-divisors", {q}, l));
    }
    return yes("at sample: every sampled element has an exact finite atom-divisor list");
  }

  ProbeReport mcd_finite() {
    auto s = sample;
    switch (shape) {
    case Shape::Fg:
    case Shape::Trivial:
    case Shape::Squares:
      if (!s.empty()) r.witnesses.push_back(element_list("mcds", s, mcds(m, s, budget)));
      return yes("finite factorization sets, hence finitely many MCDs");
    case Shape::Grams: return unknown("finitely many MCDs here is an external theorem, not certified by this engine");
    default: break;
    }
    if (s.empty()) return unknown("no sample set to check");
    auto l = mcds(m, s, budget);
    if (!l.exact && l.items.size() >= budget.witness_limit &&
        (shape == Shape::ThresholdFg || shape == Shape::Quadrant))
      return no("stream of pairwise distinct MCDs", element_list("mcds", s, l));
    return unknown("MCD stream too short at budget");
  }

  ProbeReport antimatter() {
    switch (shape) {
    case Shape::Halving: {
      auto s = nonzero_sample();
      Element q = s.empty() ? Element(std::get<GeneratorFamily>(m.rep()).generator(1)) : s.front();
      Witness w;
      w.kind = Witness::Kind::Split;
      w.role = "q = q/2 + q/2";
      w.subject = {q};
      Rational half = q.rational() / Rational(2);
      w.elements = {half, half};
      return yes_with("every member halves inside the monoid, so no member is an atom", w);
    }
    case Shape::Trivial: return yes("trivial monoid");
    default: break;
    }
    auto l = atoms_up_to(m, budget);
    if (!l.items.empty()) {
      Witness w;
      w.kind = Witness::Kind::Atom;
      w.subject = {l.items.front()};
      w.elements = {l.items.front()};
      return no("an atom exists", w);
    }
    return unknown("no atom found at budget");
  }

  ProbeReport yes_with(std::string basis, Witness w) {
    r.witnesses.push_back(std::move(w));
    return yes(std::move(basis));
  }
};

} // namespace

ProbeReport probe(const Monoid& m, Property property, const std::vector<Element>& sample, const Budget& budget) {
  budget.validate();
  Ctx ctx(budget);
  for (const auto& q : sample) {
    if (m.rational_elements() != q.is_rational())
      throw std::invalid_argument("sample element " + q.str() + " has the wrong kind");
    if (detail::member_of(m, q, ctx) == Tri::No) throw std::domain_error(q.str() + " is not in " + m.describe());
  }
  Probe p(m, property, sample, budget);
  ProbeReport r = p.run();
  if (r.verdict != Verdict::UnknownAtBudget) {
    r.budget_used = p.ctx.used();
    r.budget_used.truncation_index = budget.truncation_index;
  }
  return r;
}

} // namespace uff
