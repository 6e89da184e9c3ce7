#include <limits>
#include <queue>
#include <stdexcept>

#include "internal.hpp"

namespace uff::detail {

SemigroupOracle::SemigroupOracle(std::vector<std::int64_t> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) return;
  modulus_index_ = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] <= 0) throw std::invalid_argument("SemigroupOracle: generators must be positive");
    if (gens_[i] < gens_[modulus_index_]) modulus_index_ = i;
  }
  modulus_ = gens_[modulus_index_];
  if (modulus_ > kMaxModulus) throw std::length_error("SemigroupOracle: smallest scaled generator too large");

  const auto m = static_cast<std::size_t>(modulus_);
  apery_.assign(m, -1);
  via_.assign(m, -1);
  apery_[0] = 0;
  using Node = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [dist, r] = heap.top();
    heap.pop();
    if (dist != apery_[r]) continue;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (g == modulus_index_) continue;
      const std::int64_t step = gens_[g];
      if (dist > std::numeric_limits<std::int64_t>::max() - step) continue;
      const std::int64_t nd = dist + step;
      const auto nr = static_cast<std::size_t>((static_cast<std::int64_t>(r) + step % modulus_) % modulus_);
      if (apery_[nr] < 0 || nd < apery_[nr]) {
        apery_[nr] = nd;
        via_[nr] = static_cast<std::int32_t>(g);
        heap.emplace(nd, nr);
      }
    }
  }
}

bool SemigroupOracle::contains(const mpz_class& v) const {
  if (v < 0) return false;
  if (v == 0) return true;
  if (gens_.empty()) return false;
  mpz_class r = v % modulus_;
  const auto a = apery_[r.get_ui()];
  return a >= 0 && v >= a;
}

std::optional<std::vector<mpz_class>> SemigroupOracle::representation(const mpz_class& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<mpz_class> coeffs(gens_.size(), 0);
  if (v == 0) return coeffs;
  mpz_class r0 = v % modulus_;
  auto r = static_cast<std::int64_t>(r0.get_ui());
  const std::int64_t base = apery_[static_cast<std::size_t>(r)];
  while (r != 0) {
    const auto g = static_cast<std::size_t>(via_[static_cast<std::size_t>(r)]);
    coeffs[g] += 1;
    r = ((r - gens_[g] % modulus_) % modulus_ + modulus_) % modulus_;
  }
  coeffs[modulus_index_] += (v - base) / modulus_;
  return coeffs;
}

std::optional<mpz_class> FgAnalysis::scaled(const Rational& q) const {
  mpz_class n = q.numerator() * scale;
  if (n % q.denominator() != 0) return std::nullopt;
  return mpz_class(n / q.denominator());
}

std::shared_ptr<const FgAnalysis> analyze_fg(const std::vector<Rational>& generators) {
  auto a = std::make_shared<FgAnalysis>();
  for (const auto& g : generators) a->scale = lcm(a->scale, g.denominator());
  std::vector<std::int64_t> scaled;
  for (const auto& g : generators) {
    mpz_class s = g.numerator() * (a->scale / g.denominator());
    if (!s.fits_slong_p()) throw std::length_error("FGPuiseux: scaled generator exceeds 64 bits");
    scaled.push_back(s.get_si());
  }
  if (!scaled.empty() && scaled.front() > SemigroupOracle::kMaxModulus)
    throw std::length_error("FGPuiseux: smallest scaled generator too large for the membership oracle");

  // Generators arrive ascending, so an atom is one not generated by the
  // smaller atoms.
  SemigroupOracle current;
  a->prefix.emplace_back();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (current.contains(scaled[i])) continue;
    a->atoms.push_back(generators[i]);
    a->scaled_atoms.push_back(scaled[i]);
    current = SemigroupOracle(a->scaled_atoms);
    a->prefix.push_back(current);
  }
  a->oracle = current;
  return a;
}

Rational rational_from(const mpz_class& num, const mpz_class& den) { return Rational(num, den); }

void sort_unique(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void for_each_dyadic_point(const Rational& lo, const Rational& hi, std::size_t levels,
                           const std::function<bool(const Rational&)>& visit) {
  if (hi < lo) return;
  if (!visit(lo) || hi == lo) return;
  if (!visit(hi)) return;
  const Rational width = *hi.minus(lo);
  mpz_class parts = 1;
  for (std::size_t k = 1; k <= levels; ++k) {
    parts *= 2;
    for (mpz_class j = 1; j < parts; j += 2)
      if (!visit(lo + width * Rational(j, parts))) return;
  }
}

} // namespace uff::detail
