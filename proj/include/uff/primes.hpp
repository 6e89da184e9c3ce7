#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "uff/rational.hpp"

namespace uff {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Sentinel returned by `padic_valuation` for zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// v_p(q) for a signed rational q; `kInfiniteValuation` when q = 0.
/// Throws std::invalid_argument when p is not prime.
long padic_valuation(const mpq_class& q, std::uint64_t p);
long padic_valuation(const Rational& q, std::uint64_t p);
long padic_valuation(const mpz_class& n, std::uint64_t p);

/// Prime factorization of a positive integer by trial division, with a
/// Miller-Rabin check on the final cofactor. Throws std::domain_error when a
/// composite cofactor survives the trial bound.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(const mpz_class& n);

/// Increasing prime sequence, extended lazily. Safe for concurrent use.
class PrimeSequence {
public:
  enum class Kind { AllPrimes, OddPrimes };

  explicit PrimeSequence(Kind kind) : kind_(kind) {}
  PrimeSequence(const PrimeSequence&) = delete;
  PrimeSequence& operator=(const PrimeSequence&) = delete;

  Kind kind() const { return kind_; }

  /// 1-based; n = 0 throws std::invalid_argument.
  std::uint64_t nth(std::size_t n) const;
  /// 1-based position of `p` in the sequence, or nullopt when absent.
  std::optional<std::size_t> index_of(std::uint64_t p) const;

  static const PrimeSequence& all_primes();
  static const PrimeSequence& odd_primes();

private:
  void extend_to_count(std::size_t count) const;
  void extend_past(std::uint64_t value) const;

  Kind kind_;
  mutable std::mutex mutex_;
  mutable std::vector<std::uint64_t> cache_;
};

} // namespace uff
