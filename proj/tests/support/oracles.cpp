#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

mpz_class common_scale(const std::vector<uff::Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  return l;
}

long scaled(const uff::Rational& x, const mpz_class& l) {
  mpz_class v = x.numerator() * (l / x.denominator());
  return v.get_si();
}

// All coefficient vectors c with sum c_i w_i == target.
void enumerate(const std::vector<long>& w, long target, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> c(w.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      long s = 0;
      for (std::size_t k = 0; k < w.size(); ++k) s += c[k] * w[k];
      if (s == target) visit(c);
      return;
    }
    for (long k = 0; k * w[i] <= target; ++k) {
      c[i] = k;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);
}

} // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<uff::Rational> fg_atoms(const std::vector<uff::Rational>& gens) {
  const mpz_class l = common_scale(gens);
  std::vector<uff::Rational> atoms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<long> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(scaled(gens[j], l));
    bool reducible = false;
    enumerate(others, scaled(gens[i], l), [&](const std::vector<long>&) { reducible = true; });
    if (!reducible) atoms.push_back(gens[i]);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::set<std::map<uff::Rational, long>> fg_factorizations(const std::vector<uff::Rational>& gens, const uff::Rational& q) {
  auto atoms = fg_atoms(gens);
  auto all = atoms;
  all.push_back(q);
  const mpz_class l = common_scale(all);
  std::vector<long> w;
  for (const auto& a : atoms) w.push_back(scaled(a, l));
  std::set<std::map<uff::Rational, long>> out;
  enumerate(w, scaled(q, l), [&](const std::vector<long>& c) {
    std::map<uff::Rational, long> z;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0) z[atoms[i]] = c[i];
    out.insert(z);
  });
  return out;
}

std::set<long> lengths(const std::set<std::map<uff::Rational, long>>& zs) {
  std::set<long> out;
  for (const auto& z : zs) {
    long n = 0;
    for (const auto& [a, c] : z) n += c;
    if (n > 0) out.insert(n);
  }
  return out;
}

std::map<uff::Rational, long> as_map(const uff::Factorization& z) {
  std::map<uff::Rational, long> out;
  for (const auto& [a, c] : z.parts()) out[a.rational()] = c.get_si();
  return out;
}

bool grams_truncated_member(const uff::Rational& q, std::size_t N) {
  // Odd primes by trial division.
  std::vector<long> odd;
  for (long p = 3; odd.size() < N; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) odd.push_back(p);
  }
  std::vector<uff::Rational> gens;
  for (std::size_t n = 1; n <= N; ++n) gens.emplace_back(mpz_class(1), mpz_class(odd[n - 1]) << n);
  auto all = gens;
  all.push_back(q);
  const mpz_class l = common_scale(all);
  const long target = scaled(q, l);
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (const auto& g : gens) {
    const long w = scaled(g, l);
    for (long s = w; s <= target; ++s)
      if (reach[static_cast<std::size_t>(s - w)]) reach[static_cast<std::size_t>(s)] = 1;
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

bool primes_squared_member(const uff::Rational& q) {
  if (q.is_zero()) return true;
  const mpz_class& den = q.denominator();
  mpz_class floor_q = q.numerator() / den;
  const std::uint64_t bound = std::max<std::uint64_t>(floor_q.get_ui(), 2);
  std::vector<std::uint64_t> ps;
  for (auto p : primes_up_to(std::max<std::uint64_t>(bound, 2)))
    if (mpz_class(p) < q.value() || mpz_divisible_ui_p(den.get_mpz_t(), p)) ps.push_back(p);
  // Prime divisors of the denominator above the bound.
  mpz_class rest = den;
  for (auto p : ps)
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  }
  std::sort(ps.rbegin(), ps.rend());
  std::function<bool(std::size_t, const mpq_class&)> rec = [&](std::size_t i, const mpq_class& left) {
    if (left == 0) return true;
    if (i == ps.size()) return false;
    const mpq_class a(mpz_class(ps[i] + 1), mpz_class(ps[i] * ps[i]));
    mpq_class r = left;
    while (r >= 0) {
      if (rec(i + 1, r)) return true;
      r -= a;
    }
    return false;
  };
  return rec(0, q.value());
}

} // namespace oracle
