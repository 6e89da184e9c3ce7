#include "uff/element.hpp"

#include <charconv>
#include <stdexcept>

namespace uff {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("Element: bad integer '" + std::string(s) + "'");
  return v;
}

mpz_class multiply(const mpz_class& m, std::int64_t v) {
  mpz_class r = m * static_cast<long>(v);
  return r;
}

} // namespace

Element Element::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("Element: unterminated pair '" + std::string(text) + "'");
    auto inner = text.substr(1, text.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("Element: pair needs a comma");
    return LatticePoint{parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1))};
  }
  return Rational::parse(text);
}

const Rational& Element::rational() const {
  if (!is_rational()) throw std::invalid_argument("element " + str() + " is not a rational");
  return std::get<Rational>(value_);
}

const LatticePoint& Element::point() const {
  if (!is_point()) throw std::invalid_argument("element " + str() + " is not an integer pair");
  return std::get<LatticePoint>(value_);
}

bool Element::is_zero() const {
  if (is_rational()) return rational().is_zero();
  return point() == LatticePoint{};
}

std::string Element::str() const {
  if (is_rational()) return rational().str();
  const auto& p = point();
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_rational()) return a.rational() <=> b.rational();
  return a.point() <=> b.point();
}

Element operator+(const Element& a, const Element& b) {
  if (a.is_rational()) return a.rational() + b.rational();
  const auto& p = a.point();
  const auto& q = b.point();
  return LatticePoint{p.x + q.x, p.y + q.y};
}

Factorization::Factorization(std::map<Element, mpz_class> parts) {
  for (auto& [atom, mult] : parts) add(atom, mult);
}

void Factorization::add(const Element& atom, const mpz_class& mult) {
  if (mult <= 0) return;
  parts_[atom] += mult;
}

mpz_class Factorization::length() const {
  mpz_class n = 0;
  for (const auto& [atom, mult] : parts_) n += mult;
  return n;
}

Element Factorization::evaluate(const Element& zero) const {
  if (zero.is_rational()) {
    mpq_class s = 0;
    for (const auto& [atom, mult] : parts_) s += atom.rational().value() * mult;
    return *Rational::from_mpq(s);
  }
  mpz_class x = 0, y = 0;
  for (const auto& [atom, mult] : parts_) {
    x += multiply(mult, atom.point().x);
    y += multiply(mult, atom.point().y);
  }
  if (!x.fits_slong_p() || !y.fits_slong_p()) throw std::overflow_error("Factorization: coordinate overflow");
  return LatticePoint{x.get_si(), y.get_si()};
}

std::string Factorization::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [atom, mult] : parts_) {
    if (!first) s += ", ";
    first = false;
    s += atom.str() + ":" + mult.get_str();
  }
  return s + "}";
}

bool factorization_precedes(const Factorization& a, const Factorization& b) {
  auto ia = a.parts().rbegin();
  auto ib = b.parts().rbegin();
  while (ia != a.parts().rend() || ib != b.parts().rend()) {
    if (ib == b.parts().rend() || (ia != a.parts().rend() && ib->first < ia->first)) return true;
    if (ia == a.parts().rend() || ia->first < ib->first) return false;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

} // namespace uff
