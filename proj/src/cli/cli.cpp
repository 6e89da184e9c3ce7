#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "uff/algebra.hpp"
#include "uff/catalog.hpp"
#include "uff/cli.hpp"
#include "uff/dplusm.hpp"
#include "uff/json.hpp"
#include "uff/monoid.hpp"

namespace uff::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string monoid;
  std::string output = "json";
  std::vector<std::string> elements;
  std::string divisor;
  std::string cutoff;
  std::size_t truncate = Budget{}.truncation_index;
  std::size_t limit = Budget{}.witness_limit;
  std::uint64_t cap = Budget{}.enumeration_cap;
  std::string property;
  std::vector<std::string> samples;
  std::string fixture;
  std::string field;
  std::uint32_t subfield_degree = 1;
  std::size_t exponent = 2;
  std::vector<std::string> reps;
  std::size_t quadratic = 0;
  std::size_t precision = dplusm::Series::kDefaultPrecision;
  std::string op;
  std::string f;
  std::string g;
};

/// Raised for bad input that CLI11 cannot see (malformed JSON, bad elements).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Monoid load_monoid(const std::string& source) {
  if (source.empty()) throw UsageError("--monoid is required");
  std::string text = source;
  if (source.front() != '{') {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read presentation file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed presentation JSON: ") + e.what());
  }
  return presentation_from_json(doc);
}

Budget budget_of(const Options& o) {
  Budget b{o.truncate, o.limit, o.cap};
  b.validate();
  return b;
}

std::vector<Element> parse_elements(const std::vector<std::string>& v) {
  std::vector<Element> out;
  for (const auto& s : v) out.push_back(Element::parse(s));
  return out;
}

Element single_element(const Options& o) {
  if (o.elements.size() != 1) throw UsageError("exactly one --element is required");
  return Element::parse(o.elements[0]);
}

json elements_json(const std::vector<Element>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

std::string join(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return "{" + s + "}";
}

std::string witness_text(const Witness& w) {
  std::string s = "  witness " + to_string(w.kind);
  if (!w.role.empty()) s += " [" + w.role + "]";
  if (!w.subject.empty()) s += " subject " + join(w.subject);
  if (!w.elements.empty()) s += " elements " + join(w.elements);
  if (!w.terms.empty()) {
    Factorization z;
    for (const auto& [e, c] : w.terms) z.add(e, c);
    s += " terms " + z.str();
  }
  for (const auto& z : w.factorizations) s += "\n    " + z.str();
  if (!w.lengths.empty()) {
    s += " lengths {";
    for (std::size_t i = 0; i < w.lengths.size(); ++i) s += (i ? ", " : "") + w.lengths[i].get_str();
    s += "}";
  }
  return s + (w.exact ? "" : " (partial)") + "\n";
}

class Runner {
public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), text_(o.output == "text") {}

  int report(const std::string& op, const ProbeReport& r, bool definite_is_success) {
    if (text_) {
      out_ << op << ": " << to_string(r.verdict) << "\n";
      if (!r.basis.empty()) out_ << "basis: " << r.basis << "\n";
      for (const auto& w : r.witnesses) out_ << witness_text(w);
    } else {
      json j = to_json(r);
      j["operation"] = op;
      out_ << j.dump(2) << "\n";
    }
    if (r.verdict == Verdict::UnknownAtBudget) return kExitUnknown;
    if (r.verdict == Verdict::No && !definite_is_success) return kExitNo;
    return kExitOk;
  }

  int envelope(const std::string& op, const json& input, const json& result, const std::string& text, bool exact) {
    if (text_) {
      out_ << text;
    } else {
      json j = {{"operation", op}, {"input", input}, {"result", result}};
      out_ << j.dump(2) << "\n";
    }
    return exact ? kExitOk : kExitUnknown;
  }

  int member() {
    auto m = load_monoid(o_.monoid);
    return report("member", is_member(m, single_element(o_), budget_of(o_)), false);
  }

  int divides_cmd() {
    auto m = load_monoid(o_.monoid);
    if (o_.divisor.empty()) throw UsageError("--divisor is required");
    return report("divides", divides(m, Element::parse(o_.divisor), single_element(o_), budget_of(o_)), false);
  }

  int atoms() {
    auto m = load_monoid(o_.monoid);
    std::optional<Rational> cutoff;
    if (!o_.cutoff.empty()) cutoff = Rational::parse(o_.cutoff);
    auto l = atoms_up_to(m, budget_of(o_), cutoff);
    json input = {{"presentation", presentation_to_json(m)}, {"budget", to_json(budget_of(o_))}};
    if (cutoff) input["cutoff"] = cutoff->str();
    return envelope("atoms", input, to_json(l), "atoms " + join(l.items) + (l.exact ? "" : " (partial)") + "\n",
                    l.exact);
  }

  int factor() {
    auto m = load_monoid(o_.monoid);
    auto q = single_element(o_);
    auto l = factorizations(m, q, budget_of(o_));
    // Streamed: a capped enumeration can hold about a million items.
    if (text_) {
      out_ << "factorizations of " << q.str() << (l.exact ? "" : " (partial)") << ":\n";
      for (const auto& z : l.items) out_ << "  " << z.str() << "\n";
    } else {
      out_ << "{\n  \"input\": " << input_of(m, {q}).dump() << ",\n  \"operation\": \"factor\",\n"
           << "  \"result\": {\n    \"exact\": " << (l.exact ? "true" : "false") << ",\n    \"factorizations\": [";
      for (std::size_t i = 0; i < l.items.size(); ++i) out_ << (i ? "," : "") << "\n      " << to_json(l.items[i]).dump();
      out_ << (l.items.empty() ? "]" : "\n    ]") << "\n  }\n}\n";
    }
    return l.exact ? kExitOk : kExitUnknown;
  }

  int lengths() {
    auto m = load_monoid(o_.monoid);
    auto q = single_element(o_);
    auto l = length_set(m, q, budget_of(o_));
    std::string text = "lengths of " + q.str() + ": {";
    for (std::size_t i = 0; i < l.lengths.size(); ++i) text += (i ? ", " : "") + l.lengths[i].get_str();
    text += std::string("}") + (l.exact ? "" : " (partial)") + "\n";
    return envelope("lengths", input_of(m, {q}), to_json(l), text, l.exact);
  }

  int mcd() {
    auto m = load_monoid(o_.monoid);
    if (o_.elements.empty()) throw UsageError("at least one --element is required");
    auto set = parse_elements(o_.elements);
    auto l = mcds(m, set, budget_of(o_));
    return envelope("mcd", input_of(m, set), to_json(l),
                    "mcds of " + join(set) + ": " + join(l.items) + (l.exact ? "" : " (partial)") + "\n", l.exact);
  }

  int probe_cmd() {
    auto m = load_monoid(o_.monoid);
    auto p = parse_property(o_.property);
    if (!p) throw UsageError("unknown property '" + o_.property + "'");
    return report("probe", probe(m, *p, parse_elements(o_.samples), budget_of(o_)), true);
  }

  int cosets() {
    auto K = std::make_shared<const dplusm::FiniteField>(dplusm::FiniteField::parse(o_.field));
    auto n = dplusm::coset_count(*K, o_.subfield_degree);
    dplusm::CosetSpace cs(K, o_.subfield_degree);
    json reps = json::array();
    std::string text = "K^x/k^x for " + K->spec() + " over its degree-" + std::to_string(o_.subfield_degree) +
                       " subfield: " + std::to_string(n) + " cosets\n  representatives:";
    for (auto u : cs.transversal()) {
      reps.push_back(K->str(u));
      text += " " + K->str(u);
    }
    json modulus = json::array();
    for (auto c : K->modulus()) modulus.push_back(c);
    return envelope("dplusm-cosets", {{"field", K->spec()}, {"subfield_degree", o_.subfield_degree}},
                    {{"count", n}, {"modulus", modulus}, {"transversal", reps}}, text + "\n", true);
  }

  int twist() {
    if (o_.quadratic > 0) return quadratic_twist();
    auto K = std::make_shared<const dplusm::FiniteField>(dplusm::FiniteField::parse(o_.field));
    dplusm::CosetSpace cs(K, o_.subfield_degree);
    std::vector<dplusm::FiniteField::Elem> reps;
    for (const auto& r : o_.reps) reps.push_back(K->parse_element(r));
    if (o_.reps.empty()) reps = cs.transversal();
    auto fam = dplusm::twist_family(K, o_.exponent, reps, o_.precision);
    auto te = dplusm::Series::monomial(K, 1, o_.exponent, o_.precision);
    json fs = json::array();
    std::string text = "factorizations of t^" + std::to_string(o_.exponent) + " in R:\n";
    bool products_ok = true;
    for (const auto& f : fam) {
      json factors = json::array();
      text += " ";
      for (const auto& s : f) {
        factors.push_back(s.str());
        text += " (" + s.str() + ")";
      }
      text += "\n";
      products_ok = products_ok && dplusm::product(f) == te;
      fs.push_back(factors);
    }
    std::size_t associate_pairs = 0;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        associate_pairs += dplusm::factorizations_associate(fam[i], fam[j], o_.subfield_degree);
    text += "products equal t^" + std::to_string(o_.exponent) + ": " + (products_ok ? "yes" : "no") +
            "\nassociate pairs (componentwise): " + std::to_string(associate_pairs) + "\n";
    json input = {{"field", K->spec()}, {"subfield_degree", o_.subfield_degree}, {"exponent", o_.exponent},
                  {"precision", o_.precision}};
    json result = {{"factorizations", fs},
                   {"products_verified", products_ok},
                   {"associate_pairs", associate_pairs},
                   {"up_to_precision", true}};
    return envelope("dplusm-twist", input, result, text, true);
  }

  int quadratic_twist() {
    auto u = dplusm::quadratic_twists(o_.quadratic);
    json us = json::array();
    std::string text = "twists of t^2 over Q(sqrt(2)) / Q:\n";
    for (const auto& x : u) {
      us.push_back(x.str());
      text += "  (" + x.str() + ") t * (" + x.inverse().str() + ") t\n";
    }
    std::size_t clashes = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) clashes += dplusm::same_rational_coset(u[i], u[j]);
    text += "same-coset pairs: " + std::to_string(clashes) + "\n";
    return envelope("dplusm-twist", {{"field", "Q(sqrt(2))"}, {"subfield", "Q"}, {"twists", o_.quadratic}},
                    {{"units", us}, {"same_coset_pairs", clashes}}, text, true);
  }

  int algebra_cmd() {
    auto field = algebra::CoefficientField::parse(o_.field.empty() ? "Q" : o_.field);
    auto m = std::make_shared<const Monoid>(o_.monoid.empty() ? Monoid::dyadic() : load_monoid(o_.monoid));
    if (o_.f.empty()) throw UsageError("--f is required");
    auto f = algebra::AlgebraElement::parse(field, m, o_.f);
    json input = {{"op", o_.op}, {"f", algebra::to_json(f)}};
    auto need_g = [&] {
      if (o_.g.empty()) throw UsageError("--g is required for " + o_.op);
      auto g = algebra::AlgebraElement::parse(field, m, o_.g);
      input["g"] = algebra::to_json(g);
      return g;
    };
    auto element = [&](const algebra::AlgebraElement& r) {
      return envelope("algebra", input, algebra::to_json(r), r.str() + "\n", true);
    };
    if (o_.op == "add") return element(algebra::add(f, need_g()));
    if (o_.op == "mul") return element(algebra::mul(f, need_g()));
    if (o_.op == "deg" || o_.op == "ord") {
      auto r = o_.op == "deg" ? algebra::deg(f) : algebra::ord(f);
      return envelope("algebra", input, {{"value", r.str()}}, r.str() + "\n", true);
    }
    if (o_.op == "content") {
      auto c = algebra::content(f);
      return envelope("algebra", input, {{"value", c.get_str()}}, c.get_str() + "\n", true);
    }
    if (o_.op == "primitive") {
      bool p = algebra::is_primitive(f);
      return envelope("algebra", input, {{"value", p}}, std::string(p ? "true" : "false") + "\n", true);
    }
    if (o_.op == "split") {
      auto [u, v] = algebra::antimatter_split(f);
      return envelope("algebra", input, {{"factors", {algebra::to_json(u), algebra::to_json(v)}}},
                      "(" + u.str() + ") * (" + v.str() + ")\n", true);
    }
    throw UsageError("unknown algebra operation '" + o_.op + "'");
  }

  int verify_paper() {
    std::vector<std::string> ids = catalog::list_fixtures();
    if (!o_.fixture.empty()) ids = {o_.fixture};
    json reports = json::array();
    bool all = true;
    std::string text;
    for (const auto& id : ids) {
      catalog::FixtureReport r;
      try {
        r = catalog::run_fixture(id);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      all = all && r.passed();
      reports.push_back(catalog::to_json(r));
      text += catalog::to_text(r);
    }
    if (text_) out_ << text << (all ? "all fixtures passed\n" : "some fixtures failed\n");
    else out_ << json{{"schema", "fixture_report.v1"}, {"passed", all}, {"fixtures", reports}}.dump(2) << "\n";
    return all ? kExitOk : kExitNo;
  }

private:
  json input_of(const Monoid& m, const std::vector<Element>& elems) const {
    return {{"presentation", presentation_to_json(m)}, {"elements", elements_json(elems)},
            {"budget", to_json(budget_of(o_))}};
  }

  const Options& o_;
  std::ostream& out_;
  bool text_;
};

void add_common(CLI::App* sub, Options& o, bool with_budget) {
  sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  if (!with_budget) return;
  sub->add_option("--monoid", o.monoid, "presentation JSON (inline) or a path to a JSON file");
  sub->add_option("--truncate", o.truncate, "truncation index for generator families");
  sub->add_option("--limit", o.limit, "witness limit");
  sub->add_option("--cap", o.cap, "enumeration cap in search nodes");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Factorization invariants of Puiseux-style monoids, monoid algebras and D+M constructions", "uff"};
  app.require_subcommand(1);

  auto* member = app.add_subcommand("member", "is the element in the monoid?");
  add_common(member, o, true);
  member->add_option("--element", o.elements, "element")->required();

  auto* div = app.add_subcommand("divides", "does --divisor divide --element?");
  add_common(div, o, true);
  div->add_option("--divisor", o.divisor, "candidate divisor")->required();
  div->add_option("--element", o.elements, "element")->required();

  auto* atoms = app.add_subcommand("atoms", "atoms up to the truncation index or a cutoff");
  add_common(atoms, o, true);
  atoms->add_option("--cutoff", o.cutoff, "largest atom value to list");

  auto* factor = app.add_subcommand("factor", "factorizations of an element");
  add_common(factor, o, true);
  factor->add_option("--element", o.elements, "element")->required();

  auto* lengths = app.add_subcommand("lengths", "length set of an element");
  add_common(lengths, o, true);
  lengths->add_option("--element", o.elements, "element")->required();

  auto* mcd = app.add_subcommand("mcd", "maximal common divisors of a set");
  add_common(mcd, o, true);
  mcd->add_option("--element", o.elements, "set member (repeatable)")->required();

  auto* prb = app.add_subcommand("probe", "finiteness-property probe");
  add_common(prb, o, true);
  prb->add_option("--property", o.property, "Atomic, BF, IDF, MCDFinite, FF, UFF or Antimatter")->required();
  prb->add_option("--sample", o.samples, "sample element (repeatable)");

  auto* cos = app.add_subcommand("dplusm-cosets", "the coset space K^x / k^x");
  add_common(cos, o, false);
  cos->add_option("--field", o.field, "GF(p^m)")->required();
  cos->add_option("--subfield-degree", o.subfield_degree, "degree d of k over F_p");

  auto* tw = app.add_subcommand("dplusm-twist", "twisted factorizations of t^e in k + tK[[t]]");
  add_common(tw, o, false);
  tw->add_option("--field", o.field, "GF(p^m)");
  tw->add_option("--subfield-degree", o.subfield_degree, "degree d of k over F_p");
  tw->add_option("--exponent", o.exponent, "e >= 2");
  tw->add_option("--rep", o.reps, "twist unit [a0,a1,...] (repeatable); default: a full transversal");
  tw->add_option("--precision", o.precision, "series precision N");
  tw->add_option("--quadratic", o.quadratic, "use Q(sqrt 2)/Q with this many twists");

  auto* alg = app.add_subcommand("algebra", "monoid-algebra arithmetic");
  add_common(alg, o, false);
  alg->add_option("--op", o.op, "add, mul, deg, ord, content, primitive or split")->required();
  alg->add_option("--field", o.field, "Q or F_p");
  alg->add_option("--monoid", o.monoid, "exponent monoid presentation; default dyadic");
  alg->add_option("--f", o.f, "first operand, e.g. '1 + 2*x^(1/2)'")->required();
  alg->add_option("--g", o.g, "second operand");

  auto* vp = app.add_subcommand("verify-paper", "run the example fixtures");
  add_common(vp, o, false);
  vp->add_option("--fixture", o.fixture, "fixture id; default all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "uff: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner r(o, out);
  try {
    if (member->parsed()) return r.member();
    if (div->parsed()) return r.divides_cmd();
    if (atoms->parsed()) return r.atoms();
    if (factor->parsed()) return r.factor();
    if (lengths->parsed()) return r.lengths();
    if (mcd->parsed()) return r.mcd();
    if (prb->parsed()) return r.probe_cmd();
    if (cos->parsed()) return r.cosets();
    if (tw->parsed()) {
      if (o.quadratic == 0 && o.field.empty()) throw UsageError("--field or --quadratic is required");
      return r.twist();
    }
    if (alg->parsed()) return r.algebra_cmd();
    if (vp->parsed()) return r.verify_paper();
  } catch (const UsageError& e) {
    err << "uff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "uff: invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "uff: precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "uff: out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "uff: no subcommand\n";
  return kExitUsage;
}

} // namespace uff::cli
