#include "uff/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uff {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness set valid for all n < 3.3e24, hence for every 64-bit n.
constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr u64 kTrialBound = 1'000'000;

void require_prime(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
}

} // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

long padic_valuation(const mpz_class& n, u64 p) {
  require_prime(p);
  if (n == 0) return kInfiniteValuation;
  mpz_class m = abs(n);
  mpz_class pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

long padic_valuation(const mpq_class& q, u64 p) {
  require_prime(p);
  if (sgn(q) == 0) return kInfiniteValuation;
  mpq_class c = q;
  c.canonicalize();
  return padic_valuation(c.get_num(), p) - padic_valuation(c.get_den(), p);
}

long padic_valuation(const Rational& q, u64 p) { return padic_valuation(q.value(), p); }

std::vector<std::pair<u64, unsigned>> factor_integer(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("factor_integer: expected a positive integer");
  std::vector<std::pair<u64, unsigned>> out;
  mpz_class rest = n;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  for (u64 p = 3; p <= kTrialBound; p += 2) {
    if (rest == 1) break;
    if (mpz_class(static_cast<unsigned long>(p)) * p > rest) break;
    take(p);
  }
  if (rest != 1) {
    if (!rest.fits_ulong_p() || !is_prime(rest.get_ui())) {
      // With no factor below kTrialBound, a composite cofactor exceeds kTrialBound^2.
      if (rest.fits_ulong_p() && rest < mpz_class(static_cast<unsigned long>(kTrialBound)) * kTrialBound) {
        throw std::logic_error("factor_integer: trial division missed a factor");
      }
      throw std::domain_error("factor_integer: cofactor " + rest.get_str() + " is too large to factor");
    }
    out.emplace_back(rest.get_ui(), 1);
  }
  return out;
}

std::uint64_t PrimeSequence::nth(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("PrimeSequence::nth: index is 1-based");
  std::lock_guard lock(mutex_);
  extend_to_count(n);
  return cache_[n - 1];
}

std::optional<std::size_t> PrimeSequence::index_of(u64 p) const {
  if (!is_prime(p) || (kind_ == Kind::OddPrimes && p == 2)) return std::nullopt;
  std::lock_guard lock(mutex_);
  extend_past(p);
  auto it = std::lower_bound(cache_.begin(), cache_.end(), p);
  return static_cast<std::size_t>(it - cache_.begin()) + 1;
}

void PrimeSequence::extend_to_count(std::size_t count) const {
  u64 candidate = cache_.empty() ? (kind_ == Kind::AllPrimes ? 2 : 3) : cache_.back() + 1;
  while (cache_.size() < count) {
    if (is_prime(candidate)) cache_.push_back(candidate);
    ++candidate;
  }
}

void PrimeSequence::extend_past(u64 value) const {
  while (cache_.empty() || cache_.back() < value) extend_to_count(cache_.size() + 1);
}

const PrimeSequence& PrimeSequence::all_primes() {
  static const PrimeSequence seq(Kind::AllPrimes);
  return seq;
}

const PrimeSequence& PrimeSequence::odd_primes() {
  static const PrimeSequence seq(Kind::OddPrimes);
  return seq;
}

} // namespace uff
