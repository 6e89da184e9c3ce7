// Acceptance run: one line per criterion, exit status 0 only if every
// selected criterion passes. `--criterion N` runs a single one.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "uff/algebra.hpp"
#include "uff/dplusm.hpp"
#include "uff/monoid.hpp"

using namespace uff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  std::size_t failures = 0;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (++failures > 4) {
      if (failures == 5) detail += "; ...";
      return;
    }
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

std::string join(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return "{" + s + "}";
}

std::vector<long> odd_primes(std::size_t n) {
  std::vector<long> out;
  for (auto p : oracle::primes_up_to(1000))
    if (p != 2 && out.size() < n) out.push_back(static_cast<long>(p));
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t compared = 0;
  for (const std::vector<Rational>& gens : {std::vector<Rational>{2, 3}, std::vector<Rational>{6, 9, 20}}) {
    Monoid m = Monoid::fg_puiseux(gens);
    for (long q = 0; q <= 60; ++q) {
      auto want = oracle::fg_factorizations(gens, q);
      bool member = is_member(m, Element(q)).verdict == Verdict::Yes;
      if (member != !want.empty()) {
        o.fail("membership of " + std::to_string(q) + " disagrees");
        continue;
      }
      if (!member) continue;
      ++compared;
      auto z = factorizations(m, Element(q));
      std::set<std::map<Rational, long>> got;
      for (const auto& f : z.items) got.insert(oracle::as_map(f));
      if (!z.exact || got != want || got.size() != z.items.size())
        o.fail("factorizations of " + std::to_string(q) + " disagree");
      auto l = length_set(m, Element(q));
      std::set<long> gl;
      for (const auto& x : l.lengths) gl.insert(x.get_si());
      if (!l.exact || gl != oracle::lengths(want)) o.fail("length set of " + std::to_string(q) + " disagrees");
    }
  }
  o.note(std::to_string(compared) + " members compared exactly");
  return o;
}

Outcome bf_not_idf_example() {
  Outcome o;
  Monoid m = Monoid::threshold_union(Monoid::fg_puiseux({}), 1);
  std::mt19937_64 rng(2);
  std::size_t atoms_checked = 0;
  for (int i = 0; i < 200; ++i) {
    long den = 1 + static_cast<long>(rng() % 60);
    long num = den + static_cast<long>(rng() % static_cast<unsigned long>(den)); // [1,2)
    Rational q(num, den);
    ++atoms_checked;
    if (is_atom(m, q).verdict != Verdict::Yes) o.fail(q.str() + " in [1,2) is not certified an atom");
    long num2 = 2 * den + static_cast<long>(rng() % static_cast<unsigned long>(8 * den)); // [2,10)
    Rational r(num2, den);
    if (is_atom(m, r).verdict != Verdict::No) o.fail(r.str() + " >= 2 is not refuted as an atom");
  }
  o.note(std::to_string(atoms_checked) + " + " + std::to_string(atoms_checked) + " atom samples");

  std::vector<Element> s{Element(3), Element(4)};
  auto l = mcds(m, s);
  Witness w;
  w.kind = Witness::Kind::Elements;
  w.role = "mcds";
  w.subject = s;
  w.elements = l.items;
  bool verified = verify_witness(m, w);
  if (l.items.size() < 5 || !verified)
    o.fail("mcds({3,4}) emitted " + std::to_string(l.items.size()) + " re-verified MCDs " + join(l.items) +
           ", need >= 5");
  else
    o.note("mcds({3,4}) = " + join(l.items));

  Budget ten;
  ten.witness_limit = 10;
  auto ad = atom_divisors(m, Element(2), ten);
  if (ad.items.size() < 10)
    o.fail("atom_divisors(2) emitted " + std::to_string(ad.items.size()) + " atoms " + join(ad.items) +
           ", need >= 10");
  else
    o.note("atom_divisors(2) has " + std::to_string(ad.items.size()) + " atoms");
  return o;
}

Outcome grams_fixture() {
  Outcome o;
  Monoid m = Monoid::grams();
  auto p = odd_primes(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    Rational a(mpz_class(1), mpz_class(p[n - 1]) << static_cast<unsigned>(n));
    if (is_atom(m, a).verdict != Verdict::Yes) o.fail("a_" + std::to_string(n) + " = " + a.str() + " not certified");
  }
  Budget b;
  b.truncation_index = 5;
  auto l = length_set(m, Element(1), b);
  for (long want : {6, 20, 56, 176, 416})
    if (!std::binary_search(l.lengths.begin(), l.lengths.end(), mpz_class(want)))
      o.fail("L(1) misses " + std::to_string(want));

  const long L = 18480; // lcm(6, 20, 56, 176)
  std::mt19937_64 rng(3);
  std::size_t yes = 0;
  for (int i = 0; i < 500; ++i) {
    Rational q(static_cast<long>(rng() % (2 * L + 1)), L);
    bool got = is_member(m, Element(q)).verdict == Verdict::Yes;
    bool want = oracle::grams_truncated_member(q, 4);
    yes += want;
    if (got != want) o.fail("membership of " + q.str() + " disagrees with the truncated oracle");
  }
  o.note("atoms n<=10 certified, L(1) contains {6,20,56,176,416}, 500 memberships agree (" + std::to_string(yes) +
         " members)");
  return o;
}

Outcome uff_not_idf_fixture() {
  Outcome o;
  Monoid m = Monoid::threshold_union(Monoid::primes_squared(), 1);
  Monoid s_only = Monoid::primes_squared();
  auto primes = oracle::primes_up_to(200);
  auto a = [&](std::uint64_t p) { return Rational(mpz_class(p + 1), mpz_class(p * p)); };
  for (std::size_t n = 1; n <= 10; ++n)
    if (divides(m, Element(a(primes[n - 1])), Element(2)).verdict != Verdict::Yes)
      o.fail("a_" + std::to_string(n) + " does not divide 2");

  const std::vector<Rational> sample{a(2), a(2) + a(2), a(2) + a(3), a(3) + a(5), a(3) + a(3) + a(3)};
  std::size_t checked_atoms = 0;
  for (const auto& q : sample) {
    auto z = factorizations(m, Element(q));
    if (!z.exact || z.items.empty()) o.fail("Z(" + q.str() + ") not exact and nonempty");
    for (const auto& f : z.items) {
      Witness w;
      w.kind = Witness::Kind::Factorizations;
      w.subject = {Element(q)};
      w.factorizations = {f};
      if (!verify_witness(m, w)) o.fail("factorization " + f.str() + " of " + q.str() + " fails re-verification");
    }
    // Index bound inside the atomic submonoid S.
    mpq_class bound = std::max(q.value(), mpq_class(q.denominator()));
    for (auto p : oracle::primes_up_to(3 * (mpz_class(bound.get_num() / bound.get_den()).get_ui() + 1))) {
      if (mpq_class(p) <= bound || mpq_class(p) > 3 * bound) continue;
      ++checked_atoms;
      bool lib = divides(s_only, Element(a(p)), Element(q)).verdict == Verdict::Yes;
      auto rest = q.minus(a(p));
      bool ref = rest && oracle::primes_squared_member(*rest);
      if (lib || ref) o.fail("a(" + std::to_string(p) + ") divides " + q.str() + " beyond the bound");
    }
  }
  o.note("a_n | 2 for n<=10; 5 samples exact; " + std::to_string(checked_atoms) + " atoms beyond the bound checked");
  return o;
}

Outcome quadrant_fixture() {
  Outcome o;
  Monoid m = Monoid::quadrant_union();
  auto l = atoms_up_to(m);
  std::vector<Element> want{Element(LatticePoint{0, 1}), Element(LatticePoint{1, 0})};
  if (l.items != want || !l.exact) o.fail("atoms are " + join(l.items));
  auto z = factorizations(m, Element(LatticePoint{-1, 2}));
  if (!z.items.empty() || !z.exact) o.fail("Z((-1,2)) is not exact-empty");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    LatticePoint q{static_cast<std::int64_t>(rng() % 25), static_cast<std::int64_t>(rng() % 25)};
    auto zq = factorizations(m, Element(q));
    if (zq.items.empty()) o.fail("Z(" + Element(q).str() + ") is empty");
    for (const auto& f : zq.items) {
      if (f.evaluate(m.zero()) != Element(q)) o.fail("unsound factorization of " + Element(q).str());
      for (const auto& [atom, mult] : f.parts())
        if (is_atom(m, atom).verdict != Verdict::Yes) o.fail(atom.str() + " is not an atom");
    }
  }
  o.note("atoms exact, Z((-1,2)) exact-empty, 100 members factor soundly");
  return o;
}

Outcome dplusm_criterion() {
  Outcome o;
  struct Case {
    std::uint32_t p, m, d;
    std::uint64_t want;
  };
  for (auto c : {Case{2, 2, 1, 3}, Case{2, 3, 1, 7}, Case{3, 2, 1, 4}, Case{2, 4, 2, 5}}) {
    dplusm::FiniteField K(c.p, c.m);
    auto n = dplusm::coset_count(K, c.d);
    dplusm::CosetSpace cs(std::make_shared<const dplusm::FiniteField>(K), c.d);
    if (n != c.want || cs.size() != c.want)
      o.fail("coset count for GF(" + std::to_string(c.p) + "^" + std::to_string(c.m) + ") is " + std::to_string(n));
  }
  auto K = std::make_shared<const dplusm::FiniteField>(2, 2);
  dplusm::CosetSpace cs(K, 1);
  auto fam = dplusm::twist_family(K, 2, cs.transversal());
  auto t2 = dplusm::Series::monomial(K, 1, 2);
  if (fam.size() != 3) o.fail("twist family has " + std::to_string(fam.size()) + " members");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!(dplusm::product(fam[i]) == t2)) o.fail("a twist does not multiply to t^2");
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (dplusm::factorizations_associate(fam[i], fam[j], 1)) o.fail("two twists are associate");
  }
  // Nonzero members c0 + c1 t of R with c0 in F2.
  std::vector<dplusm::Series> lin;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0)
    for (std::uint32_t c1 = 0; c1 < 4; ++c1)
      if (c0 || c1) lin.emplace_back(K, std::vector<std::uint32_t>{c0, c1});
  auto assoc = [&](const dplusm::Series& a, const dplusm::Series& b) {
    return dplusm::associate_in_R(a, b, 1).verdict == Verdict::Yes;
  };
  std::size_t triples = 0;
  for (const auto& a : lin) {
    if (!assoc(a, a)) o.fail("not reflexive at " + a.str());
    for (const auto& b : lin) {
      if (assoc(a, b) != assoc(b, a)) o.fail("not symmetric");
      for (const auto& c : lin) {
        ++triples;
        if (assoc(a, b) && assoc(b, c) && !assoc(a, c)) o.fail("not transitive");
      }
    }
  }
  o.note("coset counts {3,7,4,5}; 3 non-associate twists; " + std::to_string(triples) + " triples checked");
  return o;
}

algebra::AlgebraElement random_dyadic(std::mt19937_64& rng, std::shared_ptr<const Monoid> m, bool positive_order) {
  algebra::AlgebraElement::Terms t;
  int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    long k = static_cast<long>(rng() % 12) + (positive_order ? 1 : 0);
    long den = 1L << (rng() % 4);
    mpq_class c(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    c.canonicalize();
    t[Rational(k, den)] += c;
  }
  return algebra::AlgebraElement(algebra::CoefficientField::rationals(), m, t);
}

Outcome algebra_criterion() {
  Outcome o;
  auto m = std::make_shared<const Monoid>(Monoid::dyadic());
  std::mt19937_64 rng(7);
  using algebra::add;
  using algebra::mul;
  for (int i = 0; i < 1000; ++i) {
    auto f = random_dyadic(rng, m, false);
    auto g = random_dyadic(rng, m, false);
    auto h = random_dyadic(rng, m, false);
    if (!(add(add(f, g), h) == add(f, add(g, h)))) o.fail("addition not associative");
    if (!(add(f, g) == add(g, f))) o.fail("addition not commutative");
    if (!(mul(mul(f, g), h) == mul(f, mul(g, h)))) o.fail("multiplication not associative");
    if (!(mul(f, g) == mul(g, f))) o.fail("multiplication not commutative");
    if (!(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)))) o.fail("distributivity fails");
  }
  std::size_t splits = 0;
  while (splits < 200) {
    auto f = random_dyadic(rng, m, true);
    if (f.is_zero()) continue;
    ++splits;
    auto [u, v] = algebra::antimatter_split(f);
    if (!(mul(u, v) == f)) o.fail("split of " + f.str() + " does not multiply back");
    if (algebra::ord(u).is_zero() || algebra::ord(v).is_zero()) o.fail("split factor is a unit");
  }
  std::size_t pairs = 0;
  while (pairs < 500) {
    auto f = random_dyadic(rng, m, false);
    auto g = random_dyadic(rng, m, false);
    if (f.is_zero() || g.is_zero()) continue;
    ++pairs;
    auto fg = mul(f, g);
    if (algebra::deg(fg) != algebra::deg(f) + algebra::deg(g)) o.fail("degree not additive");
    if (algebra::ord(fg) != algebra::ord(f) + algebra::ord(g)) o.fail("order not additive");
  }
  o.note("1000 ring-law triples, 200 splits, 500 degree pairs");
  return o;
}

Outcome consistency_ladder() {
  Outcome o;
  struct Case {
    std::string name;
    Monoid m;
    std::vector<Element> sample;
  };
  std::vector<Case> cases{
      {"<2,3>", Monoid::fg_puiseux({2, 3}), {Element(6), Element(7)}},
      {"<6,9,20>", Monoid::fg_puiseux({6, 9, 20}), {Element(60), Element(44)}},
      {"<3/2,5/3>", Monoid::fg_puiseux({Rational(3, 2), Rational(5, 3)}), {Element(3), Element(Rational(19, 6))}},
      {"{0}", Monoid::fg_puiseux({}), {Element(0)}},
      {"grams", Monoid::grams(), {Element(1), Element(Rational(1, 6))}},
      {"primes-squared", Monoid::primes_squared(), {Element(Rational(3, 4)), Element(Rational(43, 36))}},
      {"primes-squared+Q>=1", Monoid::threshold_union(Monoid::primes_squared(), 1),
       {Element(Rational(3, 4)), Element(Rational(3, 2)), Element(2)}},
      {"{0}+Q>=1", Monoid::threshold_union(Monoid::fg_puiseux({}), 1), {Element(3), Element(Rational(7, 2))}},
      {"<2,3>+Q>=5", Monoid::threshold_union(Monoid::fg_puiseux({2, 3}), 5), {Element(6), Element(Rational(11, 2))}},
      {"quadrant", Monoid::quadrant_union(), {Element(LatticePoint{2, 3}), Element(LatticePoint{-1, 2})}},
      {"dyadic", Monoid::dyadic(), {Element(1), Element(Rational(3, 2))}},
  };
  const std::vector<std::pair<Property, Property>> implications{
      {Property::FF, Property::MCDFinite}, {Property::FF, Property::BF},   {Property::FF, Property::IDF},
      {Property::FF, Property::UFF},       {Property::BF, Property::Atomic}, {Property::IDF, Property::UFF},
  };
  std::size_t probes = 0;
  for (const auto& c : cases) {
    std::map<Property, Verdict> v;
    for (auto p : {Property::Atomic, Property::BF, Property::IDF, Property::MCDFinite, Property::FF, Property::UFF}) {
      auto r = probe(c.m, p, c.sample);
      ++probes;
      v[p] = r.verdict;
      for (const auto& w : r.witnesses)
        if (!verify_witness(c.m, w)) o.fail(c.name + ": " + to_string(p) + " witness fails re-verification");
    }
    for (auto [a, b] : implications)
      if (v[a] == Verdict::Yes && v[b] == Verdict::No)
        o.fail(c.name + ": " + to_string(a) + " yes but " + to_string(b) + " no");
    if (v[Property::IDF] == Verdict::Yes)
      for (const auto& q : c.sample)
        if (!factorizations(c.m, q).exact) o.fail(c.name + ": IDF yes but Z(" + q.str() + ") not exact");
  }
  o.note(std::to_string(cases.size()) + " presentations, " + std::to_string(probes) + " probes, no violations");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "BF-not-IDF-not-MCD-finite example", bf_not_idf_example},
      {3, "Grams fixture", grams_fixture},
      {4, "U-FF-not-IDF fixture", uff_not_idf_fixture},
      {5, "quadrant-union fixture", quadrant_fixture},
      {6, "D+M coset twisting", dplusm_criterion},
      {7, "monoid algebra laws", algebra_criterion},
      {8, "consistency ladder", consistency_ladder},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && out.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << " [" << c.name << "]: " << (out.pass ? "PASS" : "FAIL") << " ("
         << secs << " s) " << out.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
