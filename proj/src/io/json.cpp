#include "uff/json.hpp"

#include <stdexcept>

namespace uff {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw std::invalid_argument(std::string("presentation: missing \"") + key + "\"");
  return doc.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string("presentation: ") + what + " must be a string");
  return j.get<std::string>();
}

json elements(const std::vector<Element>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

} // namespace

Monoid presentation_from_json(const json& doc) {
  const std::string kind = text(field(doc, "kind"), "kind");
  if (kind == "fg-puiseux") {
    const json& gens = field(doc, "generators");
    if (!gens.is_array()) throw std::invalid_argument("presentation: generators must be an array");
    std::vector<Rational> g;
    for (const auto& x : gens) g.push_back(Rational::parse(text(x, "generator")));
    return Monoid::fg_puiseux(std::move(g));
  }
  if (kind == "family") {
    const std::string rule = text(field(doc, "rule"), "rule");
    if (rule == "grams") return Monoid::grams();
    if (rule == "primes-squared") return Monoid::primes_squared();
    if (rule == "dyadic") return Monoid::dyadic();
    throw std::invalid_argument("presentation: unknown family rule \"" + rule + "\"");
  }
  if (kind == "threshold-union") {
    Monoid base = presentation_from_json(field(doc, "base"));
    return Monoid::threshold_union(base, Rational::parse(text(field(doc, "theta"), "theta")));
  }
  if (kind == "quadrant-union") return Monoid::quadrant_union();
  throw std::invalid_argument("presentation: unknown kind \"" + kind + "\"");
}

json presentation_to_json(const Monoid& m) {
  struct V {
    json operator()(const FgPuiseux& p) const {
      json g = json::array();
      for (const auto& x : p.generators) g.push_back(x.str());
      return {{"kind", "fg-puiseux"}, {"generators", g}};
    }
    json operator()(const GeneratorFamily& f) const {
      if (f.rule == FamilyRule::Custom && f.custom->name != "dyadic")
        throw std::invalid_argument("custom family " + f.custom->name + " has no document form");
      return {{"kind", "family"}, {"rule", f.name()}};
    }
    json operator()(const ThresholdUnion& t) const {
      return {{"kind", "threshold-union"}, {"base", presentation_to_json(*t.base)}, {"theta", t.theta.str()}};
    }
    json operator()(const QuadrantUnion&) const { return {{"kind", "quadrant-union"}}; }
  };
  return std::visit(V{}, m.rep());
}

json to_json(const Element& e) { return e.str(); }

Element element_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("element must be a string");
  return Element::parse(j.get<std::string>());
}

json to_json(const Factorization& z) {
  json a = json::array();
  for (const auto& [atom, mult] : z.parts()) a.push_back({{"atom", atom.str()}, {"mult", mult.get_str()}});
  return a;
}

json to_json(const Witness& w) {
  json j = {{"kind", to_string(w.kind)}, {"subject", elements(w.subject)}, {"exact", w.exact}};
  if (!w.role.empty()) j["role"] = w.role;
  if (!w.elements.empty()) j["elements"] = elements(w.elements);
  if (!w.terms.empty()) {
    json t = json::array();
    for (const auto& [e, c] : w.terms) t.push_back({{"atom", e.str()}, {"mult", c.get_str()}});
    j["terms"] = t;
  }
  if (!w.factorizations.empty() || w.kind == Witness::Kind::Factorizations) {
    json f = json::array();
    for (const auto& z : w.factorizations) f.push_back(to_json(z));
    j["factorizations"] = f;
  }
  if (!w.lengths.empty()) {
    json l = json::array();
    for (const auto& n : w.lengths) l.push_back(n.get_str());
    j["lengths"] = l;
  }
  return j;
}

json to_json(const BudgetUsed& b) {
  return {{"truncation_index", b.truncation_index},
          {"coefficient_bound", b.coefficient_bound.get_str()},
          {"enumeration_count", b.enumeration_count}};
}

json to_json(const ProbeReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(to_json(x));
  return {{"verdict", to_string(r.verdict)}, {"basis", r.basis}, {"witnesses", w}, {"budget_used", to_json(r.budget_used)}};
}

json to_json(const ElementList& l) {
  return {{"items", elements(l.items)}, {"exact", l.exact}, {"undecided", l.undecided}};
}

json to_json(const FactorizationList& l) {
  json f = json::array();
  for (const auto& z : l.items) f.push_back(to_json(z));
  return {{"factorizations", f}, {"exact", l.exact}};
}

json to_json(const LengthSet& l) {
  json a = json::array();
  for (const auto& n : l.lengths) a.push_back(n.get_str());
  return {{"lengths", a}, {"exact", l.exact}};
}

json to_json(const Budget& b) {
  return {{"truncation_index", b.truncation_index},
          {"witness_limit", b.witness_limit},
          {"enumeration_cap", b.enumeration_cap}};
}

} // namespace uff
