#include <stdexcept>

#include "uff/algebra.hpp"
#include "uff/json.hpp"
#include "uff/primes.hpp"

namespace uff::algebra {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpq_class parse_coefficient(std::string_view s) {
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  mpq_class c;
  if (c.set_str(std::string(s), 10) != 0 || c.get_den() == 0)
    throw std::invalid_argument("bad coefficient '" + std::string(s) + "'");
  c.canonicalize();
  return c;
}

void require_compatible(const AlgebraElement& f, const AlgebraElement& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("algebra: coefficient fields differ");
  if (!same_presentation(f.exponents(), g.exponents())) throw std::invalid_argument("algebra: exponent monoids differ");
}

bool two_divisible(const Monoid& m) {
  const auto* fam = std::get_if<GeneratorFamily>(&m.rep());
  return fam && fam->rule == FamilyRule::Custom && fam->custom && fam->custom->halving_closed;
}

} // namespace

CoefficientField CoefficientField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient field: " + std::to_string(p) + " is not prime");
  return CoefficientField{p};
}

CoefficientField CoefficientField::parse(std::string_view text) {
  text = strip(text);
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.substr(0, 2) == "F_") digits = text.substr(2);
  else if (text.substr(0, 3) == "GF(" && text.back() == ')') digits = text.substr(3, text.size() - 4);
  else if (text.substr(0, 1) == "F") digits = text.substr(1);
  else throw std::invalid_argument("unknown coefficient field '" + std::string(text) + "'");
  std::uint32_t p = 0;
  for (char c : digits) {
    if (c < '0' || c > '9' || p > 100'000'000) throw std::invalid_argument("bad prime in '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return prime(p);
}

std::string CoefficientField::str() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

mpq_class CoefficientField::reduce(const mpq_class& c) const {
  if (is_rational()) return c;
  mpz_class mod(p);
  mpz_class den = c.get_den();
  if (den % mod == 0) throw std::invalid_argument("coefficient " + c.get_str() + " is undefined in " + str());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (c.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return mpq_class(r);
}

AlgebraElement::AlgebraElement(Trusted, CoefficientField field, std::shared_ptr<const Monoid> exponents, Terms terms)
    : field_(field), monoid_(std::move(exponents)), terms_(std::move(terms)) {}

AlgebraElement::AlgebraElement(CoefficientField field, std::shared_ptr<const Monoid> exponents, const Terms& terms)
    : field_(field), monoid_(std::move(exponents)) {
  if (!monoid_) throw std::invalid_argument("algebra: missing exponent monoid");
  if (!monoid_->rational_elements()) throw std::invalid_argument("algebra: exponents must be rational");
  for (const auto& [e, c] : terms) {
    mpq_class r = field_.reduce(c);
    if (r == 0) continue;
    auto verdict = is_member(*monoid_, Element(e)).verdict;
    if (verdict != Verdict::Yes)
      throw std::invalid_argument("algebra: exponent " + e.str() + " is not a member of " + monoid_->describe());
    terms_[e] = r;
  }
}

AlgebraElement AlgebraElement::zero(CoefficientField field, std::shared_ptr<const Monoid> exponents) {
  return AlgebraElement(field, std::move(exponents), Terms{});
}

AlgebraElement AlgebraElement::monomial(CoefficientField field, std::shared_ptr<const Monoid> exponents, mpq_class c,
                                        Rational e) {
  return AlgebraElement(field, std::move(exponents), Terms{{std::move(e), std::move(c)}});
}

AlgebraElement AlgebraElement::parse(CoefficientField field, std::shared_ptr<const Monoid> exponents,
                                     std::string_view text) {
  text = strip(text);
  if (text.empty()) throw std::invalid_argument("algebra: empty expression");
  Terms terms;
  std::size_t i = 0;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto term = strip(text.substr(start, end - start));
    if (term.empty()) throw std::invalid_argument("algebra: empty term in '" + std::string(text) + "'");
    mpq_class c = 1;
    Rational e = 0;
    auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      c = parse_coefficient(term);
    } else {
      auto head = strip(term.substr(0, xpos));
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("algebra: expected '*' before x in '" + std::string(term) + "'");
        c = parse_coefficient(head.substr(0, head.size() - 1));
      }
      auto tail = strip(term.substr(xpos + 1));
      if (tail.empty()) {
        e = 1;
      } else {
        if (tail.front() != '^') throw std::invalid_argument("algebra: bad power in '" + std::string(term) + "'");
        tail = strip(tail.substr(1));
        if (!tail.empty() && tail.front() == '(' && tail.back() == ')') tail = strip(tail.substr(1, tail.size() - 2));
        e = Rational::parse(tail);
      }
    }
    if (negative) c = -c;
    terms[e] += c;
  };
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    start = 1;
    i = 1;
  }
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && i > start) {
      flush(i);
      negative = ch == '-';
      start = i + 1;
    }
  }
  flush(text.size());
  return AlgebraElement(field, std::move(exponents), terms);
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) s += sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    first = false;
    if (e.is_zero()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "x";
    if (e == Rational(1)) continue;
    s += e.is_integer() ? "^" + e.str() : "^(" + e.str() + ")";
  }
  return s;
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
  require_compatible(f, g);
  AlgebraElement::Terms t = f.terms_;
  for (const auto& [e, c] : g.terms_) {
    mpq_class s = f.field_.reduce(t[e] + c);
    if (s == 0) t.erase(e);
    else t[e] = s;
  }
  return AlgebraElement(AlgebraElement::Trusted{}, f.field_, f.monoid_, std::move(t));
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g) {
  require_compatible(f, g);
  AlgebraElement::Terms t;
  for (const auto& [a, c] : f.terms_)
    for (const auto& [b, d] : g.terms_) t[a + b] += c * d;
  AlgebraElement::Terms out;
  for (auto& [e, c] : t) {
    mpq_class r = f.field_.reduce(c);
    if (r != 0) out.emplace(e, r);
  }
  return AlgebraElement(AlgebraElement::Trusted{}, f.field_, f.monoid_, std::move(out));
}

AlgebraElement scale(const AlgebraElement& f, const mpq_class& c) {
  AlgebraElement::Terms out;
  for (const auto& [e, a] : f.terms_) {
    mpq_class r = f.field_.reduce(a * c);
    if (r != 0) out.emplace(e, r);
  }
  return AlgebraElement(AlgebraElement::Trusted{}, f.field_, f.monoid_, std::move(out));
}

AlgebraElement negate(const AlgebraElement& f) { return scale(f, -1); }

Rational deg(const AlgebraElement& f) {
  if (f.is_zero()) throw std::invalid_argument("deg: zero element");
  return f.terms().rbegin()->first;
}

Rational ord(const AlgebraElement& f) {
  if (f.is_zero()) throw std::invalid_argument("ord: zero element");
  return f.terms().begin()->first;
}

mpz_class content(const AlgebraElement& f) {
  if (!f.field().is_rational()) throw std::invalid_argument("content: coefficients must be rational integers");
  if (f.is_zero()) throw std::invalid_argument("content: zero element");
  mpz_class g = 0;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) throw std::invalid_argument("content: coefficient " + c.get_str() + " is not integral");
    mpz_class a = abs(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

bool is_primitive(const AlgebraElement& f) { return content(f) == 1; }

std::pair<AlgebraElement, AlgebraElement> antimatter_split(const AlgebraElement& f) {
  if (!two_divisible(f.exponents()))
    throw std::invalid_argument("antimatter_split: exponent monoid is not known to be 2-divisible");
  if (f.is_zero()) throw std::domain_error("split not applicable: zero element");
  const Rational o = ord(f);
  if (o.is_zero()) throw std::domain_error("split not applicable: nonzero constant term");
  const Rational half = o / Rational(2);
  AlgebraElement::Terms rest;
  for (const auto& [e, c] : f.terms()) rest.emplace(*e.minus(half), c);
  return {AlgebraElement::monomial(f.field(), f.exponents_ptr(), 1, half),
          AlgebraElement(f.field(), f.exponents_ptr(), rest)};
}

nlohmann::json to_json(const AlgebraElement& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e.str()}, {"coef", c.get_str()}});
  return {{"field", f.field().str()}, {"monoid", presentation_to_json(f.exponents())}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("monoid") || !doc.contains("terms"))
    throw std::invalid_argument("algebra document needs field, monoid and terms");
  auto field = CoefficientField::parse(doc.at("field").get<std::string>());
  auto monoid = std::make_shared<const Monoid>(presentation_from_json(doc.at("monoid")));
  AlgebraElement::Terms terms;
  for (const auto& t : doc.at("terms")) {
    auto e = Rational::parse(t.at("exp").get<std::string>());
    terms[e] += parse_coefficient(t.at("coef").get<std::string>());
  }
  return AlgebraElement(field, monoid, terms);
}

} // namespace uff::algebra
