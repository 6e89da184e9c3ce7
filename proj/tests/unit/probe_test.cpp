#include <gtest/gtest.h>

#include "uff/monoid.hpp"

using namespace uff;

namespace {

struct Case {
  const char* name;
  Monoid m;
  std::vector<Element> sample;
};

std::vector<Case> corpus() {
  return {
      {"fg23", Monoid::fg_puiseux({2, 3}), {Element(6), Element(7)}},
      {"fg-frac", Monoid::fg_puiseux({Rational(3, 4), Rational(5, 6)}), {Element(Rational(19, 12))}},
      {"trivial", Monoid::fg_puiseux({}), {}},
      {"grams", Monoid::grams(), {Element(1)}},
      {"primes-squared", Monoid::primes_squared(), {Element(Rational(3, 4))}},
      {"uff", Monoid::threshold_union(Monoid::primes_squared(), 1), {Element(2), Element(Rational(43, 36))}},
      {"bf", Monoid::threshold_union(Monoid::fg_puiseux({}), 1), {Element(3)}},
      {"fg-threshold", Monoid::threshold_union(Monoid::fg_puiseux({2, 3}), Rational(9, 2)), {Element(10)}},
      {"quadrant", Monoid::quadrant_union(), {Element(LatticePoint{-1, 2}), Element(LatticePoint{1, 1})}},
      {"dyadic", Monoid::dyadic(), {Element(Rational(3, 2))}},
  };
}

const Property kAll[] = {Property::Atomic, Property::BF,  Property::IDF,       Property::MCDFinite,
                         Property::FF,     Property::UFF, Property::Antimatter};

} // namespace

TEST(Probe, EveryWitnessReverifies) {
  for (const auto& c : corpus())
    for (auto p : kAll) {
      Budget b;
      b.truncation_index = 4;
      auto r = probe(c.m, p, c.sample, b);
      for (const auto& w : r.witnesses)
        EXPECT_TRUE(verify_witness(c.m, w, b)) << c.name << " " << to_string(p) << " " << to_string(w.kind);
      if (r.verdict != Verdict::UnknownAtBudget) EXPECT_FALSE(r.basis.empty()) << c.name << " " << to_string(p);
    }
}

TEST(Probe, Examples) {
  Budget b;
  b.truncation_index = 3;
  b.witness_limit = 3;
  auto g = probe(Monoid::grams(), Property::BF, {Element(1)}, b);
  EXPECT_EQ(g.verdict, Verdict::No);
  ASSERT_FALSE(g.witnesses.empty());
  EXPECT_EQ(g.witnesses[0].lengths, (std::vector<mpz_class>{6, 20, 56}));

  EXPECT_EQ(probe(Monoid::fg_puiseux({2, 3}), Property::FF).verdict, Verdict::Yes);
  EXPECT_EQ(probe(Monoid::fg_puiseux({2, 3}), Property::Antimatter).verdict, Verdict::No);
  auto d = probe(Monoid::dyadic(), Property::Antimatter);
  EXPECT_EQ(d.verdict, Verdict::Yes);
  auto u = probe(Monoid::threshold_union(Monoid::primes_squared(), 1), Property::UFF,
                 {Element(2), Element(Rational(3, 4) + Rational(4, 9))});
  EXPECT_EQ(u.verdict, Verdict::Yes);
  EXPECT_EQ(probe(Monoid::quadrant_union(), Property::Atomic).verdict, Verdict::No);
  EXPECT_EQ(probe(Monoid::quadrant_union(), Property::FF).verdict, Verdict::No);
  EXPECT_EQ(probe(Monoid::grams(), Property::MCDFinite).verdict, Verdict::UnknownAtBudget);
  EXPECT_EQ(probe(Monoid::grams(), Property::Atomic).verdict, Verdict::Yes);
  EXPECT_EQ(probe(Monoid::grams(), Property::IDF, {Element(1)}).verdict, Verdict::No);
  auto bf = Monoid::threshold_union(Monoid::fg_puiseux({}), 1);
  EXPECT_EQ(probe(bf, Property::BF).verdict, Verdict::Yes);
  EXPECT_EQ(probe(bf, Property::IDF, {Element(3)}).verdict, Verdict::No);
  EXPECT_EQ(probe(bf, Property::FF).verdict, Verdict::No);
}

TEST(Probe, RejectsBadSamples) {
  EXPECT_THROW(probe(Monoid::fg_puiseux({2, 3}), Property::BF, {Element(1)}), std::domain_error);
  EXPECT_THROW(probe(Monoid::quadrant_union(), Property::BF, {Element(1)}), std::invalid_argument);
}

TEST(Probe, Deterministic) {
  for (const auto& c : corpus())
    for (auto p : kAll) {
      auto a = probe(c.m, p, c.sample);
      auto b = probe(c.m, p, c.sample);
      ASSERT_EQ(a.verdict, b.verdict);
      ASSERT_EQ(a.basis, b.basis);
      ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
    }
}

TEST(VerifyWitness, RejectsForgeries) {
  Monoid m = Monoid::fg_puiseux({2, 3});
  Witness split;
  split.kind = Witness::Kind::Split;
  split.subject = {Element(5)};
  split.elements = {Element(1), Element(4)};
  EXPECT_FALSE(verify_witness(m, split));
  split.elements = {Element(2), Element(3)};
  EXPECT_TRUE(verify_witness(m, split));

  Witness atoms;
  atoms.kind = Witness::Kind::Elements;
  atoms.role = "atoms";
  atoms.elements = {Element(2), Element(4)};
  EXPECT_FALSE(verify_witness(m, atoms));

  Witness nm;
  nm.kind = Witness::Kind::NonMember;
  nm.subject = {Element(1)};
  EXPECT_TRUE(verify_witness(m, nm));
  nm.subject = {Element(5)};
  EXPECT_FALSE(verify_witness(m, nm));
}
