#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "uff/dplusm.hpp"

namespace uff::dplusm {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad exponent '" + std::string(s) + "'");
  return v;
}

// Splits on '+' outside brackets and parentheses.
std::vector<std::string_view> terms_of(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(strip(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(strip(text.substr(start)));
  return out;
}

} // namespace

Series::Series(std::shared_ptr<const FiniteField> field, std::vector<Elem> coeffs, std::size_t precision)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (precision == 0) throw std::invalid_argument("Series: precision must be positive");
  if (coeffs_.size() > precision) throw std::invalid_argument("Series: more coefficients than the precision");
  coeffs_.resize(precision, 0);
  for (auto c : coeffs_)
    if (c >= field_->order()) throw std::invalid_argument("Series: coefficient outside " + field_->spec());
}

Series Series::zero(std::shared_ptr<const FiniteField> field, std::size_t precision) {
  return Series(std::move(field), {}, precision);
}

Series Series::monomial(std::shared_ptr<const FiniteField> field, Elem c, std::size_t e, std::size_t precision) {
  std::vector<Elem> coeffs(precision, 0);
  if (e < precision) coeffs[e] = c;
  return Series(std::move(field), std::move(coeffs), precision);
}

Series Series::parse(std::shared_ptr<const FiniteField> field, std::string_view text) {
  std::size_t precision = kDefaultPrecision;
  std::vector<std::pair<std::size_t, Elem>> parts;
  for (auto term : terms_of(strip(text))) {
    if (term.empty()) throw std::invalid_argument("Series: empty term");
    if (term.substr(0, 4) == "O(t^" && term.back() == ')') {
      precision = parse_size(term.substr(4, term.size() - 5));
      continue;
    }
    if (term == "O(t)") {
      precision = 1;
      continue;
    }
    std::string_view coeff = term;
    std::size_t e = 0;
    auto star = term.find('*');
    std::string_view power;
    if (star != std::string_view::npos) {
      coeff = term.substr(0, star);
      power = term.substr(star + 1);
    } else if (term.front() == 't') {
      coeff = "1";
      power = term;
    }
    if (!power.empty()) {
      if (power == "t") e = 1;
      else if (power.substr(0, 2) == "t^") e = parse_size(power.substr(2));
      else throw std::invalid_argument("Series: bad power '" + std::string(power) + "'");
    }
    parts.emplace_back(e, field->parse_element(coeff));
  }
  std::vector<Elem> coeffs(precision, 0);
  for (auto [e, c] : parts)
    if (e < precision) coeffs[e] = field->add(coeffs[e], c);
  return Series(std::move(field), std::move(coeffs), precision);
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

std::size_t Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return coeffs_.size();
}

void Series::check_compatible(const Series& o) const {
  if (!(*field_ == *o.field_)) throw std::invalid_argument("Series: different coefficient fields");
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  const std::size_t n = std::min(precision(), o.precision());
  std::vector<Elem> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = field_->add(coeffs_[i], o.coeffs_[i]);
  return Series(field_, std::move(c), n);
}

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  const std::size_t n = std::min(precision(), o.precision());
  std::vector<Elem> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  return Series(field_, std::move(c), n);
}

Series Series::inverse() const {
  if (!is_unit()) throw std::domain_error("Series: constant term is zero, not a unit");
  const std::size_t n = precision();
  std::vector<Elem> inv(n, 0);
  const Elem c0 = field_->inv(coeffs_[0]);
  inv[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    Elem s = 0;
    for (std::size_t j = 1; j <= k; ++j) s = field_->add(s, field_->mul(coeffs_[j], inv[k - j]));
    inv[k] = field_->mul(field_->neg(s), c0);
  }
  return Series(field_, std::move(inv), n);
}

Series Series::shift_down(std::size_t k) const {
  if (k >= precision()) throw std::invalid_argument("Series: shift exceeds precision");
  return Series(field_, std::vector<Elem>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()), precision() - k);
}

Series Series::truncate(std::size_t n) const {
  if (n == 0 || n > precision()) throw std::invalid_argument("Series: bad truncation");
  return Series(field_, std::vector<Elem>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)), n);
}

std::string Series::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    s += field_->str(coeffs_[i]);
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
    s += " + ";
  }
  return s + "O(t^" + std::to_string(precision()) + ")";
}

bool Series::operator==(const Series& o) const { return *field_ == *o.field_ && coeffs_ == o.coeffs_; }

bool is_member_R(const Series& f, std::uint32_t d) { return f.field().in_subfield(f.coefficient(0), d); }

AssociateResult associate_in_R(const Series& a, const Series& b, std::uint32_t d) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("associate_in_R: arguments must be nonzero");
  if (!is_member_R(a, d) || !is_member_R(b, d)) throw std::domain_error("associate_in_R: arguments must lie in R");
  AssociateResult r;
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  if (va != vb) {
    r.verdict = Verdict::No;
    r.reason = "t-adic valuations differ";
    return r;
  }
  const std::size_t n = std::min(a.precision(), b.precision());
  Series u = a.truncate(n).shift_down(va) * b.truncate(n).shift_down(vb).inverse();
  r.quotient_prefix = u.coefficients();
  // Units of R are k^x (1 + tK[[t]]): only the constant term matters.
  if (a.field().in_subfield(u.coefficient(0), d)) {
    r.verdict = Verdict::Yes;
    r.reason = "quotient has constant term in the subfield";
  } else {
    r.verdict = Verdict::No;
    r.reason = "quotient constant term outside the subfield";
  }
  return r;
}

std::vector<std::vector<Series>> twist_family(std::shared_ptr<const FiniteField> field, std::size_t e,
                                              const std::vector<FiniteField::Elem>& reps, std::size_t precision) {
  if (e < 2) throw std::invalid_argument("twist_family: exponent must be at least 2");
  std::vector<std::vector<Series>> out;
  for (auto u : reps) {
    if (u == 0) throw std::invalid_argument("twist_family: representatives must be nonzero");
    std::vector<Series> f;
    f.push_back(Series::monomial(field, u, 1, precision));
    f.push_back(Series::monomial(field, field->inv(u), 1, precision));
    for (std::size_t i = 2; i < e; ++i) f.push_back(Series::monomial(field, 1, 1, precision));
    out.push_back(std::move(f));
  }
  return out;
}

Series product(const std::vector<Series>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  Series p = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
  return p;
}

bool factorizations_associate(const std::vector<Series>& f, const std::vector<Series>& g, std::uint32_t d) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (associate_in_R(f[i], g[i], d).verdict != Verdict::Yes) return false;
  return true;
}

bool factorizations_associate_unordered(const std::vector<Series>& f, const std::vector<Series>& g, std::uint32_t d) {
  if (f.size() != g.size()) return false;
  std::vector<bool> used(g.size(), false);
  // Associate classes are an equivalence, so greedy matching is exact.
  for (const auto& x : f) {
    bool matched = false;
    for (std::size_t j = 0; j < g.size() && !matched; ++j) {
      if (used[j] || associate_in_R(x, g[j], d).verdict != Verdict::Yes) continue;
      used[j] = true;
      matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

} // namespace uff::dplusm
