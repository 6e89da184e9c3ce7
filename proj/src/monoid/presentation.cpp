#include <stdexcept>

#include "internal.hpp"
#include "uff/primes.hpp"

namespace uff {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Yes: return "yes";
  case Verdict::No: return "no";
  case Verdict::UnknownAtBudget: return "unknown-at-budget";
  }
  return "unknown-at-budget";
}

std::string to_string(Witness::Kind k) {
  switch (k) {
  case Witness::Kind::Combination: return "combination";
  case Witness::Kind::Region: return "region";
  case Witness::Kind::NonMember: return "non-member";
  case Witness::Kind::Split: return "split";
  case Witness::Kind::Factorizations: return "factorizations";
  case Witness::Kind::Elements: return "elements";
  case Witness::Kind::Lengths: return "lengths";
  case Witness::Kind::Atom: return "atom";
  case Witness::Kind::Difference: return "difference";
  }
  return "elements";
}

std::string to_string(Property p) {
  switch (p) {
  case Property::Atomic: return "Atomic";
  case Property::BF: return "BF";
  case Property::IDF: return "IDF";
  case Property::MCDFinite: return "MCDFinite";
  case Property::FF: return "FF";
  case Property::UFF: return "UFF";
  case Property::Antimatter: return "Antimatter";
  }
  return "Atomic";
}

std::optional<Property> parse_property(std::string_view text) {
  for (auto p : {Property::Atomic, Property::BF, Property::IDF, Property::MCDFinite, Property::FF, Property::UFF,
                 Property::Antimatter}) {
    if (to_string(p) == text) return p;
  }
  if (text == "MCD-finite") return Property::MCDFinite;
  if (text == "U-FF") return Property::UFF;
  return std::nullopt;
}

void Budget::validate() const {
  if (truncation_index < 1 || witness_limit < 1 || enumeration_cap < 1)
    throw std::invalid_argument("Budget: every field must be at least 1");
}

Rational GeneratorFamily::generator(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("GeneratorFamily: indices start at 1");
  switch (rule) {
  case FamilyRule::Grams: {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
    den *= static_cast<unsigned long>(PrimeSequence::odd_primes().nth(n));
    return Rational(1, den);
  }
  case FamilyRule::PrimesSquared: {
    const auto p = static_cast<unsigned long>(PrimeSequence::all_primes().nth(n));
    mpz_class pz = p;
    return Rational(pz + 1, pz * pz);
  }
  case FamilyRule::Custom: {
    if (n <= custom->prefix.size()) return custom->prefix[n - 1];
    if (custom->extension) return custom->extension(n);
    throw std::out_of_range("GeneratorFamily: " + custom->name + " has only " + std::to_string(custom->prefix.size()) +
                            " generators");
  }
  }
  throw std::logic_error("GeneratorFamily: unknown rule");
}

std::string GeneratorFamily::name() const {
  switch (rule) {
  case FamilyRule::Grams: return "grams";
  case FamilyRule::PrimesSquared: return "primes-squared";
  case FamilyRule::Custom: return custom->name;
  }
  return "custom";
}

Monoid Monoid::fg_puiseux(std::vector<Rational> generators) {
  std::sort(generators.begin(), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) throw std::invalid_argument("FGPuiseux: generators must be positive");
    if (i > 0 && generators[i] == generators[i - 1])
      throw std::invalid_argument("FGPuiseux: duplicate generator " + generators[i].str());
  }
  auto analysis = detail::analyze_fg(generators);
  return Monoid(FgPuiseux{std::move(generators), std::move(analysis)});
}

Monoid Monoid::grams() { return Monoid(GeneratorFamily{FamilyRule::Grams, nullptr}); }

Monoid Monoid::primes_squared() { return Monoid(GeneratorFamily{FamilyRule::PrimesSquared, nullptr}); }

Monoid Monoid::dyadic() {
  CustomFamilySpec spec;
  spec.name = "dyadic";
  spec.extension = [](std::size_t n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n - 1);
    return Rational(1, den);
  };
  spec.membership = [](const Rational& q) {
    const mpz_class& d = q.denominator();
    return mpz_popcount(d.get_mpz_t()) == 1;
  };
  spec.halving_closed = true;
  return custom(std::move(spec));
}

Monoid Monoid::custom(CustomFamilySpec spec) {
  if (spec.name.empty()) throw std::invalid_argument("custom family needs a name");
  for (const auto& g : spec.prefix)
    if (g.is_zero()) throw std::invalid_argument("custom family generators must be positive");
  if (spec.prefix.empty() && !spec.extension) throw std::invalid_argument("custom family has no generators");
  return Monoid(GeneratorFamily{FamilyRule::Custom, std::make_shared<const CustomFamilySpec>(std::move(spec))});
}

Monoid Monoid::threshold_union(const Monoid& base, Rational theta) {
  if (theta.is_zero()) throw std::invalid_argument("ThresholdUnion: theta must be positive");
  if (!std::holds_alternative<FgPuiseux>(base.rep()) && !std::holds_alternative<GeneratorFamily>(base.rep()))
    throw std::invalid_argument("ThresholdUnion: base must be finitely generated or a generator family");
  return Monoid(ThresholdUnion{std::make_shared<const Monoid>(base), std::move(theta)});
}

Monoid Monoid::quadrant_union() { return Monoid(QuadrantUnion{}); }

Element Monoid::zero() const {
  if (rational_elements()) return Rational{};
  return LatticePoint{};
}

std::string Monoid::describe() const {
  struct V {
    std::string operator()(const FgPuiseux& p) const {
      std::string s = "<";
      for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : "") + p.generators[i].str();
      return s + ">";
    }
    std::string operator()(const GeneratorFamily& f) const { return "family " + f.name(); }
    std::string operator()(const ThresholdUnion& t) const {
      return "(" + t.base->describe() + ") union Q>=" + t.theta.str();
    }
    std::string operator()(const QuadrantUnion&) const { return "(N0 x N0) union (Z x N>=2)"; }
  };
  return std::visit(V{}, rep_);
}

bool same_presentation(const Monoid& a, const Monoid& b) {
  if (a.rep().index() != b.rep().index()) return false;
  if (const auto* p = std::get_if<FgPuiseux>(&a.rep())) return p->generators == std::get<FgPuiseux>(b.rep()).generators;
  if (const auto* f = std::get_if<GeneratorFamily>(&a.rep())) {
    const auto& g = std::get<GeneratorFamily>(b.rep());
    if (f->rule != g.rule) return false;
    if (f->rule != FamilyRule::Custom) return true;
    return f->custom == g.custom || (f->custom->name == g.custom->name && f->custom->prefix == g.custom->prefix &&
                                     f->custom->halving_closed == g.custom->halving_closed);
  }
  if (const auto* t = std::get_if<ThresholdUnion>(&a.rep())) {
    const auto& u = std::get<ThresholdUnion>(b.rep());
    return t->theta == u.theta && same_presentation(*t->base, *u.base);
  }
  return true;
}

} // namespace uff
