#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "uff/dplusm.hpp"
#include "uff/primes.hpp"

namespace uff::dplusm {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t parse_u32(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (m == 0) throw std::invalid_argument("FiniteField: degree must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > kMaxOrder) throw std::invalid_argument("FiniteField: order exceeds 65536");
  }
  order_ = static_cast<std::uint32_t>(order);

  const std::uint64_t lower = order_;
  for (std::uint64_t code = 0; code < lower; ++code) {
    Poly f(m + 1, 0);
    f[m] = 1;
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
    if (m == 1 || irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  const std::uint32_t units = order_ - 1;
  log_.assign(order_, 0);
  exp_.assign(2 * static_cast<std::size_t>(std::max<std::uint32_t>(units, 1)), 0);
  if (units == 0) return;
  for (Elem g = 1; g < order_; ++g) {
    Elem x = 1;
    std::uint32_t k = 0;
    bool generator = true;
    for (k = 0; k < units; ++k) {
      if (k > 0 && x == 1) {
        generator = false;
        break;
      }
      exp_[k] = x;
      x = poly_mul(x, g);
    }
    if (generator && x == 1) break;
  }
  for (std::uint32_t k = 0; k < units; ++k) {
    exp_[k + units] = exp_[k];
    log_[exp_[k]] = k;
  }
}

FiniteField FiniteField::parse(std::string_view spec) {
  if (spec.size() < 5 || spec.substr(0, 3) != "GF(" || spec.back() != ')')
    throw std::invalid_argument("field spec must look like GF(p^m): '" + std::string(spec) + "'");
  auto inner = spec.substr(3, spec.size() - 4);
  auto caret = inner.find('^');
  if (caret == std::string_view::npos) {
    // GF(q) with q a prime power.
    const std::uint32_t q = parse_u32(inner);
    if (q < 2) throw std::invalid_argument("field order must be a prime power: " + std::to_string(q));
    auto f = factor_integer(mpz_class(q));
    if (f.size() != 1) throw std::invalid_argument("field order must be a prime power: " + std::to_string(q));
    return FiniteField(static_cast<std::uint32_t>(f[0].first), f[0].second);
  }
  return FiniteField(parse_u32(inner.substr(0, caret)), parse_u32(inner.substr(caret + 1)));
}

std::string FiniteField::spec() const {
  return "GF(" + std::to_string(p_) + (m_ == 1 ? "" : "^" + std::to_string(m_)) + ")";
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

FiniteField::Elem FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > m_) throw std::invalid_argument("too many coefficients for " + spec());
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range for " + spec());
    a = a * p_ + c[i];
  }
  return a;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i, a /= p_, b /= p_, scale *= p_) r += ((a % p_ + b % p_) % p_) * scale;
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i, a /= p_, scale *= p_) r += ((p_ - a % p_) % p_) * scale;
  return r;
}

FiniteField::Elem FiniteField::poly_mul(Elem a, Elem b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  Poly prod(2 * m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_coefficients(r);
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no inverse in " + spec());
  const std::uint32_t units = order_ - 1;
  return exp_[(units - log_[a]) % units];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t units = order_ - 1;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % units)) % units)];
}

std::string FiniteField::str(Elem a) const {
  std::string s = "[";
  auto c = coefficients(a);
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

FiniteField::Elem FiniteField::parse_element(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("empty field element");
  if (text.front() != '[') {
    std::uint32_t v = parse_u32(text);
    if (v >= p_) throw std::invalid_argument("integer field element must be below the characteristic");
    return v;
  }
  if (text.back() != ']') throw std::invalid_argument("unterminated field element '" + std::string(text) + "'");
  std::vector<std::uint32_t> c;
  auto inner = text.substr(1, text.size() - 2);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    c.push_back(parse_u32(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return from_coefficients(c);
}

bool FiniteField::in_subfield(Elem a, std::uint32_t d) const {
  if (!has_subfield(d)) throw std::invalid_argument(spec() + " has no subfield of degree " + std::to_string(d));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) q *= p_;
  return pow(a, q) == a;
}

CosetSpace::CosetSpace(std::shared_ptr<const FiniteField> field, std::uint32_t d) : field_(std::move(field)), d_(d) {
  if (!field_->has_subfield(d)) throw std::invalid_argument(field_->spec() + " has no subfield of degree " + std::to_string(d));
  for (FiniteField::Elem x = 1; x < field_->order(); ++x)
    if (field_->in_subfield(x, d)) units_.push_back(x);
  coset_.assign(field_->order(), 0);
  std::vector<bool> seen(field_->order(), false);
  for (FiniteField::Elem u = 1; u < field_->order(); ++u) {
    if (seen[u]) continue;
    // u is the least element of its coset since smaller ones were all seen.
    const std::size_t id = reps_.size();
    reps_.push_back(u);
    for (auto k : units_) {
      auto v = field_->mul(u, k);
      seen[v] = true;
      coset_[v] = id;
    }
  }
}

std::size_t CosetSpace::coset_of(FiniteField::Elem u) const {
  if (u == 0 || u >= field_->order()) throw std::invalid_argument("coset_of: not a unit of " + field_->spec());
  return coset_[u];
}

std::uint64_t coset_count(const FiniteField& field, std::uint32_t d) {
  if (!field.has_subfield(d))
    throw std::invalid_argument(field.spec() + " has no subfield of degree " + std::to_string(d));
  std::uint64_t big = 1;
  std::uint64_t small = 1;
  for (std::uint32_t i = 0; i < field.degree(); ++i) big *= field.characteristic();
  for (std::uint32_t i = 0; i < d; ++i) small *= field.characteristic();
  const std::uint64_t formula = (big - 1) / (small - 1);
  CosetSpace space(std::make_shared<const FiniteField>(field), d);
  if (space.size() != formula) throw std::logic_error("coset_count: enumeration disagrees with the formula");
  return formula;
}

} // namespace uff::dplusm
