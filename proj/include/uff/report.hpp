#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "uff/element.hpp"

namespace uff {

enum class Verdict { Yes, No, UnknownAtBudget };

std::string to_string(Verdict v);

/// Evidence attached to a report. Which fields are populated depends on `kind`:
///
///  Combination     subject[0] = sum of terms (generator, coefficient)
///  Region          subject[0] lies in a region of the monoid described by `role`
///  NonMember       subject[0] is not in the monoid
///  Split           subject[0] = elements[0] + elements[1], both nonzero members
///  Factorizations  factorizations of subject[0]; empty + exact means non-atomic
///  Elements        a list with a `role` ("atoms", "atom-divisors", "divisors",
///                  "common-divisors", "mcds"); subject holds the element(s)
///  Lengths         distinct lengths of subject[0], each backed by a factorization
///  Atom            elements[0] is an atom
///  Difference      subject = {d, q} with q - d outside Q>=0
struct Witness {
  enum class Kind { Combination, Region, NonMember, Split, Factorizations, Elements, Lengths, Atom, Difference };

  Kind kind = Kind::Elements;
  std::string role;
  std::vector<Element> subject;
  std::vector<Element> elements;
  std::vector<std::pair<Element, mpz_class>> terms;
  std::vector<Factorization> factorizations;
  std::vector<mpz_class> lengths;
  bool exact = true;
};

std::string to_string(Witness::Kind k);

struct BudgetUsed {
  std::size_t truncation_index = 0;
  mpz_class coefficient_bound = 0;
  std::uint64_t enumeration_count = 0;
};

struct ProbeReport {
  Verdict verdict = Verdict::UnknownAtBudget;
  std::vector<Witness> witnesses;
  BudgetUsed budget_used;
  /// Which certified rule produced the verdict.
  std::string basis;
};

} // namespace uff
