#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "uff/monoid.hpp"

using namespace uff;

namespace {

std::vector<Element> E(std::initializer_list<const char*> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(Element::parse(x));
  return out;
}

bool contains(const std::vector<Element>& v, const Element& e) { return std::find(v.begin(), v.end(), e) != v.end(); }

Monoid bf_example() { return Monoid::threshold_union(Monoid::fg_puiseux({}), 1); }
Monoid uff_example() { return Monoid::threshold_union(Monoid::primes_squared(), 1); }

} // namespace

TEST(Presentation, Validation) {
  EXPECT_THROW(Monoid::fg_puiseux({0}), std::invalid_argument);
  EXPECT_THROW(Monoid::fg_puiseux({2, 2}), std::invalid_argument);
  EXPECT_THROW(Monoid::threshold_union(Monoid::quadrant_union(), 1), std::invalid_argument);
  EXPECT_THROW((Budget{0, 5, 10}.validate()), std::invalid_argument);
  EXPECT_NO_THROW(Monoid::fg_puiseux({}));
}

TEST(Membership, Examples) {
  auto r = is_member(Monoid::fg_puiseux({Rational(3, 4), Rational(5, 6)}), Element(Rational(19, 12)));
  EXPECT_EQ(r.verdict, Verdict::Yes);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(is_member(Monoid::grams(), Element(0)).verdict, Verdict::Yes);
  EXPECT_EQ(is_member(uff_example(), Element(2)).verdict, Verdict::Yes);
  EXPECT_EQ(is_member(Monoid::quadrant_union(), Element(LatticePoint{-3, 1})).verdict, Verdict::No);
  EXPECT_EQ(is_member(Monoid::quadrant_union(), Element(LatticePoint{-3, 2})).verdict, Verdict::Yes);
  EXPECT_THROW(is_member(Monoid::quadrant_union(), Element(3)), std::invalid_argument);
  EXPECT_THROW(is_member(Monoid::grams(), Element(LatticePoint{1, 1})), std::invalid_argument);
}

TEST(Membership, FgAgreesWithOracle) {
  for (const std::vector<Rational>& gens :
       {std::vector<Rational>{2, 3}, std::vector<Rational>{6, 9, 20}, std::vector<Rational>{Rational(3, 2), Rational(5, 3)}}) {
    Monoid m = Monoid::fg_puiseux(gens);
    for (long k = 0; k <= 120; ++k) {
      Rational q(k, 6);
      bool want = !oracle::fg_factorizations(gens, q).empty();
      ASSERT_EQ(is_member(m, Element(q)).verdict == Verdict::Yes, want) << q;
    }
  }
}

TEST(Membership, ClosedUnderAddition) {
  std::mt19937_64 rng(13);
  const std::vector<Monoid> ms{Monoid::fg_puiseux({Rational(3, 4), Rational(5, 6)}), Monoid::grams(),
                               Monoid::primes_squared(), uff_example(), bf_example(), Monoid::dyadic()};
  int pairs = 0;
  while (pairs < 1000) {
    const Monoid& m = ms[rng() % ms.size()];
    Rational a(static_cast<long>(rng() % 200), 1 + static_cast<long>(rng() % 60));
    Rational b(static_cast<long>(rng() % 200), 1 + static_cast<long>(rng() % 60));
    if (is_member(m, Element(a)).verdict != Verdict::Yes || is_member(m, Element(b)).verdict != Verdict::Yes) {
      // Pull a and b back into the monoid through known members.
      a = is_member(m, Element(a)).verdict == Verdict::Yes ? a : Rational(0);
      b = is_member(m, Element(b)).verdict == Verdict::Yes ? b : Rational(0);
    }
    ++pairs;
    ASSERT_EQ(is_member(m, Element(a + b)).verdict, Verdict::Yes) << m.describe() << " " << a << " + " << b;
  }
}

TEST(Membership, GramsAgreesWithTruncatedOracle) {
  std::mt19937_64 rng(17);
  const long L = 18480;
  for (int i = 0; i < 500; ++i) {
    Rational q(static_cast<long>(rng() % (3 * L)), L);
    ASSERT_EQ(is_member(Monoid::grams(), Element(q)).verdict == Verdict::Yes, oracle::grams_truncated_member(q, 4))
        << q;
  }
}

TEST(Membership, PrimesSquaredAgreesWithOracle) {
  for (long den : {4L, 9L, 36L, 225L, 100L, 12L})
    for (long num = 0; num <= 3 * den; ++num) {
      Rational q(num, den);
      ASSERT_EQ(is_member(Monoid::primes_squared(), Element(q)).verdict == Verdict::Yes,
                oracle::primes_squared_member(q))
          << q;
    }
}

TEST(Divides, Examples) {
  EXPECT_EQ(divides(uff_example(), Element(Rational(3, 4)), Element(2)).verdict, Verdict::Yes);
  EXPECT_EQ(divides(Monoid::fg_puiseux({2, 3}), Element(6), Element(6)).verdict, Verdict::Yes);
  EXPECT_EQ(divides(Monoid::fg_puiseux({2, 3}), Element(2), Element(3)).verdict, Verdict::No);
  EXPECT_EQ(divides(bf_example(), Element(3), Element(4)).verdict, Verdict::Yes);
  EXPECT_EQ(divides(bf_example(), Element(Rational(3, 2)), Element(2)).verdict, Verdict::No);
}

TEST(Divisors, Examples) {
  auto d = divisors(Monoid::fg_puiseux({2, 3}), Element(6));
  EXPECT_EQ(d.items, E({"0", "2", "3", "4", "6"}));
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(divisors(Monoid::grams(), Element(0)).items, E({"0"}));
  auto t = divisors(bf_example(), Element(3));
  EXPECT_FALSE(t.exact);
  EXPECT_TRUE(contains(t.items, Element(Rational(3, 2))));
  EXPECT_TRUE(contains(t.items, Element(Rational(7, 4))));
  EXPECT_THROW(divisors(Monoid::fg_puiseux({2, 3}), Element(1)), std::domain_error);
}

// Every listed divisor divides; for exact lists nothing else does.
TEST(Divisors, ConsistentWithDivides) {
  for (const std::vector<Rational>& gens : {std::vector<Rational>{2, 3}, std::vector<Rational>{Rational(3, 2), Rational(5, 3)}}) {
    Monoid m = Monoid::fg_puiseux(gens);
    for (long k = 0; k <= 60; ++k) {
      Rational q(k, 6);
      if (is_member(m, Element(q)).verdict != Verdict::Yes) continue;
      auto d = divisors(m, Element(q));
      ASSERT_TRUE(d.exact);
      for (long j = 0; j <= k; ++j) {
        Rational c(j, 6);
        bool listed = contains(d.items, Element(c));
        ASSERT_EQ(listed, divides(m, Element(c), Element(q)).verdict == Verdict::Yes) << c << " | " << q;
      }
    }
  }
  Budget b;
  b.truncation_index = 4;
  b.enumeration_cap = 20'000;
  for (const auto& q : E({"1", "3/4", "13/6"})) {
    auto d = divisors(Monoid::grams(), q, b);
    for (const auto& x : d.items) ASSERT_EQ(divides(Monoid::grams(), x, q, b).verdict, Verdict::Yes);
  }
}

TEST(Atoms, Examples) {
  EXPECT_EQ(is_atom(bf_example(), Element(Rational(3, 2))).verdict, Verdict::Yes);
  EXPECT_EQ(is_atom(bf_example(), Element(Rational(5, 2))).verdict, Verdict::No);
  EXPECT_EQ(is_atom(Monoid::grams(), Element(Rational(1, 6))).verdict, Verdict::Yes);
  EXPECT_EQ(is_atom(Monoid::quadrant_union(), Element(LatticePoint{1, 0})).verdict, Verdict::Yes);
  auto q = is_atom(Monoid::quadrant_union(), Element(LatticePoint{-1, 2}));
  EXPECT_EQ(q.verdict, Verdict::No);
  EXPECT_THROW(is_atom(Monoid::grams(), Element(0)), std::invalid_argument);
  EXPECT_THROW(is_atom(Monoid::fg_puiseux({2, 3}), Element(1)), std::domain_error);

  auto a = atoms_up_to(Monoid::fg_puiseux({2, 3}));
  EXPECT_EQ(a.items, E({"2", "3"}));
  EXPECT_TRUE(a.exact);
  Budget b;
  b.truncation_index = 4;
  auto g = atoms_up_to(Monoid::grams(), b);
  EXPECT_EQ(g.items, E({"1/176", "1/56", "1/20", "1/6"}));
  EXPECT_TRUE(g.exact);
  EXPECT_EQ(atoms_up_to(Monoid::fg_puiseux({2, 3, 4})).items, E({"2", "3"}));
}

TEST(Factorizations, Examples) {
  auto z = factorizations(Monoid::fg_puiseux({2, 3}), Element(6));
  ASSERT_EQ(z.items.size(), 2u);
  EXPECT_TRUE(z.exact);
  EXPECT_EQ(z.items[0].str(), "{3:2}");
  EXPECT_EQ(z.items[1].str(), "{2:3}");
  auto p = factorizations(Monoid::primes_squared(), Element(Rational(3, 4)));
  ASSERT_EQ(p.items.size(), 1u);
  EXPECT_TRUE(p.exact);
  Budget b;
  b.truncation_index = 2;
  auto g = factorizations(Monoid::grams(), Element(1), b);
  std::vector<std::string> strs;
  for (const auto& f : g.items) strs.push_back(f.str());
  EXPECT_NE(std::find(strs.begin(), strs.end(), "{1/6:6}"), strs.end());
  EXPECT_NE(std::find(strs.begin(), strs.end(), "{1/20:20}"), strs.end());
  auto q = factorizations(Monoid::quadrant_union(), Element(LatticePoint{-1, 2}));
  EXPECT_TRUE(q.items.empty());
  EXPECT_TRUE(q.exact);
  EXPECT_THROW(factorizations(Monoid::fg_puiseux({2, 3}), Element(1)), std::domain_error);
}

TEST(Factorizations, AgreeWithOracle) {
  for (const std::vector<Rational>& gens :
       {std::vector<Rational>{2, 3}, std::vector<Rational>{6, 9, 20}, std::vector<Rational>{Rational(3, 2), Rational(5, 3), 2}}) {
    Monoid m = Monoid::fg_puiseux(gens);
    for (long k = 0; k <= 240; ++k) {
      Rational q(k, 6);
      auto want = oracle::fg_factorizations(gens, q);
      if (want.empty()) continue;
      auto z = factorizations(m, Element(q));
      std::set<std::map<Rational, long>> got;
      for (const auto& f : z.items) got.insert(oracle::as_map(f));
      ASSERT_TRUE(z.exact);
      ASSERT_EQ(got, want) << q;
      auto l = length_set(m, Element(q));
      std::set<long> gl;
      for (const auto& x : l.lengths) gl.insert(x.get_si());
      ASSERT_EQ(gl, oracle::lengths(want)) << q;
    }
  }
}

TEST(Factorizations, CapProducesPartialList) {
  Budget b;
  b.enumeration_cap = 10;
  auto z = factorizations(Monoid::fg_puiseux({2, 3}), Element(200), b);
  EXPECT_FALSE(z.exact);
}

TEST(Lengths, Examples) {
  auto l = length_set(Monoid::fg_puiseux({2, 3}), Element(6));
  EXPECT_EQ(l.lengths, (std::vector<mpz_class>{2, 3}));
  EXPECT_EQ(length_set(Monoid::grams(), Element(Rational(1, 20))).lengths, (std::vector<mpz_class>{1}));
  Budget b;
  b.truncation_index = 3;
  auto g = length_set(Monoid::grams(), Element(1), b);
  for (int x : {6, 20, 56}) EXPECT_TRUE(std::binary_search(g.lengths.begin(), g.lengths.end(), mpz_class(x)));
}

TEST(AtomDivisors, Examples) {
  Budget b;
  b.witness_limit = 3;
  auto a = atom_divisors(uff_example(), Element(2), b);
  EXPECT_EQ(a.items, E({"6/25", "4/9", "3/4"}));
  EXPECT_FALSE(a.exact);
  auto f = atom_divisors(Monoid::fg_puiseux({2, 3}), Element(7));
  EXPECT_EQ(f.items, E({"2", "3"}));
  EXPECT_TRUE(f.exact);
  EXPECT_TRUE(atom_divisors(Monoid::grams(), Element(0)).items.empty());
}

TEST(CommonDivisors, Examples) {
  auto c = common_divisors(Monoid::fg_puiseux({2, 3}), {Element(2), Element(3)});
  EXPECT_EQ(c.items, E({"0"}));
  EXPECT_TRUE(c.exact);
  auto s = common_divisors(Monoid::fg_puiseux({2, 3}), {Element(6)});
  EXPECT_EQ(s.items, divisors(Monoid::fg_puiseux({2, 3}), Element(6)).items);
  auto t = common_divisors(bf_example(), {Element(3), Element(4)});
  EXPECT_FALSE(t.exact);
  for (const auto& d : t.items) {
    if (d.is_zero() || d == Element(3)) continue;
    EXPECT_GE(d.rational(), Rational(1));
    EXPECT_LE(d.rational(), Rational(2));
  }
  EXPECT_THROW(common_divisors(Monoid::grams(), {}), std::invalid_argument);
}

TEST(Mcds, Examples) {
  auto m = mcds(Monoid::fg_puiseux({2, 3}), {Element(2), Element(3)});
  EXPECT_EQ(m.items, E({"0"}));
  EXPECT_TRUE(m.exact);
  EXPECT_EQ(mcds(Monoid::fg_puiseux({2, 3}), {Element(6)}).items, E({"6"}));
  // 3 divides 4 in {0} union Q>=1, and it is the only MCD of {3, 4}.
  EXPECT_EQ(mcds(bf_example(), {Element(3), Element(4)}).items, E({"3"}));
  auto r = mcds(bf_example(), {Element(3), Element(Rational(7, 2))});
  EXPECT_EQ(r.items.size(), 5u);
  for (const auto& d : r.items) {
    EXPECT_GT(d.rational(), Rational(1));
    EXPECT_LE(d.rational(), Rational(2));
  }
}

// Each reported MCD is a common divisor whose shifted set has only 0 as a
// common divisor, checked by brute force on an FG monoid.
TEST(Mcds, SoundOnFgMonoids) {
  Monoid m = Monoid::fg_puiseux({3, 5, 7});
  std::vector<std::vector<long>> sets{{10, 12}, {15, 21}, {8, 9, 10}, {14}};
  for (const auto& s : sets) {
    std::vector<Element> set;
    for (long x : s) set.emplace_back(x);
    auto r = mcds(m, set);
    ASSERT_TRUE(r.exact);
    ASSERT_FALSE(r.items.empty());
    for (const auto& d : r.items) {
      std::vector<Element> shifted;
      for (long x : s) {
        ASSERT_EQ(divides(m, d, Element(x)).verdict, Verdict::Yes);
        shifted.emplace_back(*Rational(x).minus(d.rational()));
      }
      auto c = common_divisors(m, shifted);
      EXPECT_EQ(c.items, E({"0"}));
    }
  }
}

TEST(Quadrant, SignLaw) {
  Monoid m = Monoid::quadrant_union();
  for (std::int64_t x = -8; x <= 8; ++x)
    for (std::int64_t y = -3; y <= 6; ++y) {
      bool want = y >= 2 || (x >= 0 && y >= 0);
      ASSERT_EQ(is_member(m, Element(LatticePoint{x, y})).verdict == Verdict::Yes, want) << x << "," << y;
      if (!want || (x == 0 && y == 0)) continue;
      auto z = factorizations(m, Element(LatticePoint{x, y}));
      ASSERT_TRUE(z.exact);
      ASSERT_EQ(z.items.size(), (x >= 0 ? 1u : 0u));
      ASSERT_EQ(is_atom(m, Element(LatticePoint{x, y})).verdict == Verdict::Yes, (x + y == 1 && x >= 0));
    }
  auto d = divisors(m, Element(LatticePoint{2, 1}));
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(d.items.size(), 6u);
  EXPECT_FALSE(divisors(m, Element(LatticePoint{0, 2})).exact);
}
