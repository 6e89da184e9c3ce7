#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uff/algebra.hpp"
#include "uff/catalog.hpp"
#include "uff/dplusm.hpp"
#include "uff/json.hpp"
#include "uff/monoid.hpp"

namespace uff::catalog {

namespace {

std::string join(const std::vector<Element>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

std::string join(const std::vector<mpz_class>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "}";
}

std::string exactness(bool exact) { return exact ? " (exact)" : " (partial)"; }

class Builder {
public:
  Builder(std::string id, std::string title, nlohmann::json presentation) {
    report_.id = std::move(id);
    report_.title = std::move(title);
    report_.presentation = std::move(presentation);
  }

  /// `check` fills `observed` and returns pass/fail; exceptions fail the claim.
  void claim(std::string id, std::string anchor, std::string expected, const std::function<bool(std::string&)>& check) {
    ClaimResult c{std::move(id), std::move(anchor), std::move(expected), "", false};
    try {
      c.pass = check(c.observed);
    } catch (const std::exception& e) {
      c.observed = std::string("error: ") + e.what();
      c.pass = false;
    }
    report_.claims.push_back(std::move(c));
  }

  FixtureReport done() { return std::move(report_); }

private:
  FixtureReport report_;
};

bool all_verified(const Monoid& m, const ProbeReport& r, const Budget& b) {
  return std::all_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) { return verify_witness(m, w, b); });
}

FixtureReport antimatter_dyadic() {
  auto m = std::make_shared<const Monoid>(Monoid::dyadic());
  Builder b("antimatter-dyadic", "N0[1/2] has no atoms and its algebra over Q splits every element of positive order",
            presentation_to_json(*m));
  const auto Q = algebra::CoefficientField::rationals();

  b.claim("probe-antimatter", "the dyadic monoid has no atoms", "yes", [&](std::string& out) {
    auto r = probe(*m, Property::Antimatter, {Element(Rational(3, 2)), Element(1)});
    out = to_string(r.verdict) + ", " + std::to_string(r.witnesses.size()) + " witnesses";
    return r.verdict == Verdict::Yes && all_verified(*m, r, {});
  });
  b.claim("no-atoms-listed", "no generator of the dyadic monoid is an atom", "{} (exact)", [&](std::string& out) {
    auto l = atoms_up_to(*m);
    out = join(l.items) + exactness(l.exact);
    return l.items.empty() && l.exact;
  });
  b.claim("split-x^(3/2)+x^2", "x^q f splits as x^(q/2) times x^(q/2) f",
          "(x^(3/4), x^(3/4) + x^(5/4))", [&](std::string& out) {
            auto f = algebra::AlgebraElement::parse(Q, m, "x^(3/2) + x^2");
            auto [u, v] = algebra::antimatter_split(f);
            out = "(" + u.str() + ", " + v.str() + ")";
            return u.str() == "x^(3/4)" && v.str() == "x^(3/4) + x^(5/4)" && algebra::mul(u, v) == f;
          });
  b.claim("split-x", "x = x^(1/2) x^(1/2)", "(x^(1/2), x^(1/2))", [&](std::string& out) {
    auto f = algebra::AlgebraElement::parse(Q, m, "x");
    auto [u, v] = algebra::antimatter_split(f);
    out = "(" + u.str() + ", " + v.str() + ")";
    return u.str() == "x^(1/2)" && v.str() == "x^(1/2)";
  });
  b.claim("split-needs-positive-order", "the halving split requires a zero constant term",
          "domain error for 1 + x", [&](std::string& out) {
            auto f = algebra::AlgebraElement::parse(Q, m, "1 + x");
            try {
              (void)algebra::antimatter_split(f);
              out = "split returned";
              return false;
            } catch (const std::domain_error& e) {
              out = std::string("domain error: ") + e.what();
              return true;
            }
          });
  return b.done();
}

FixtureReport bf_not_idf() {
  const Monoid base = Monoid::fg_puiseux({});
  const Monoid m = Monoid::threshold_union(base, 1);
  Builder b("bf-not-idf", "{0} union Q>=1: bounded factorizations, infinitely many atom divisors and MCDs",
            presentation_to_json(m));

  b.claim("atoms-in-[1,2)", "the atoms are exactly the rationals in [1,2)", "yes on 1, 3/2, 7/4, 19/10",
          [&](std::string& out) {
            bool ok = true;
            for (auto q : {Rational(1), Rational(3, 2), Rational(7, 4), Rational(19, 10)}) {
              auto v = is_atom(m, q).verdict;
              out += q.str() + ":" + to_string(v) + " ";
              ok = ok && v == Verdict::Yes;
            }
            return ok;
          });
  b.claim("non-atoms-from-2", "rationals at least 2 are not atoms", "no on 2, 5/2, 3, 11/3", [&](std::string& out) {
    bool ok = true;
    for (auto q : {Rational(2), Rational(5, 2), Rational(3), Rational(11, 3)}) {
      auto v = is_atom(m, q).verdict;
      out += q.str() + ":" + to_string(v) + " ";
      ok = ok && v == Verdict::No;
    }
    return ok;
  });
  b.claim("probe-bf", "every element has a bounded set of lengths", "yes", [&](std::string& out) {
    auto r = probe(m, Property::BF, {Element(3), Element(Rational(7, 2))});
    out = to_string(r.verdict);
    return r.verdict == Verdict::Yes;
  });
  b.claim("atom-divisors-of-3", "every atom divides each element of M at least 3", ">= 5 distinct atoms",
          [&](std::string& out) {
            auto l = atom_divisors(m, Element(3));
            out = join(l.items) + exactness(l.exact);
            Budget bud;
            for (const auto& a : l.items)
              if (is_atom(m, a, bud).verdict != Verdict::Yes || divides(m, a, Element(3)).verdict != Verdict::Yes)
                return false;
            return l.items.size() >= 5;
          });
  b.claim("probe-idf", "the element 3 has infinitely many atom divisors", "no", [&](std::string& out) {
    auto r = probe(m, Property::IDF, {Element(3)});
    out = to_string(r.verdict);
    return r.verdict == Verdict::No && all_verified(m, r, {});
  });
  b.claim("mcds-of-{3,7/2}", "every rational in (1,2] is an MCD of {3, 7/2}", ">= 5 distinct re-verified MCDs",
          [&](std::string& out) {
            std::vector<Element> s{Element(3), Element(Rational(7, 2))};
            auto l = mcds(m, s);
            out = join(l.items) + exactness(l.exact);
            Witness w;
            w.kind = Witness::Kind::Elements;
            w.role = "mcds";
            w.subject = s;
            w.elements = l.items;
            return l.items.size() >= 5 && verify_witness(m, w);
          });
  b.claim("mcds-of-{3,4}", "3 divides 4 here, so 3 is the only MCD of {3, 4}", "{3}", [&](std::string& out) {
    auto l = mcds(m, {Element(3), Element(4)});
    out = join(l.items) + exactness(l.exact);
    return l.items == std::vector<Element>{Element(3)};
  });
  return b.done();
}

FixtureReport dplusm_f4() {
  auto K = std::make_shared<const dplusm::FiniteField>(2, 2);
  const std::uint32_t d = 1;
  Builder b("dplusm-f4", "R = F2 + t F4[[t]]: coset twists of t^2",
            {{"field", K->spec()}, {"subfield_degree", d}, {"precision", dplusm::Series::kDefaultPrecision}});
  const auto w = K->primitive();
  const auto w2 = K->mul(w, w);

  b.claim("coset-count", "F4^x / F2^x has order 3", "3", [&](std::string& out) {
    auto n = dplusm::coset_count(*K, d);
    out = std::to_string(n);
    return n == 3;
  });
  b.claim("twist-family", "t^2 = (u t)(u^-1 t) for each coset representative u", "3 factorizations with product t^2",
          [&](std::string& out) {
            dplusm::CosetSpace cs(K, d);
            auto fam = dplusm::twist_family(K, 2, cs.transversal());
            auto t2 = dplusm::Series::monomial(K, 1, 2);
            bool ok = fam.size() == 3;
            for (const auto& f : fam) ok = ok && dplusm::product(f) == t2;
            out = std::to_string(fam.size()) + " factorizations";
            return ok;
          });
  b.claim("twists-pairwise-non-associate", "twists by u and v are associate iff u k^x = v k^x",
          "pairwise non-associate componentwise", [&](std::string& out) {
            dplusm::CosetSpace cs(K, d);
            auto fam = dplusm::twist_family(K, 2, cs.transversal());
            int associate_pairs = 0;
            for (std::size_t i = 0; i < fam.size(); ++i)
              for (std::size_t j = i + 1; j < fam.size(); ++j)
                associate_pairs += dplusm::factorizations_associate(fam[i], fam[j], d);
            out = std::to_string(associate_pairs) + " associate pairs";
            return associate_pairs == 0;
          });
  b.claim("associate-w-t", "w t and w^2 t differ by the unit w, which is not in F2", "no", [&](std::string& out) {
    auto r = dplusm::associate_in_R(dplusm::Series::monomial(K, w, 1), dplusm::Series::monomial(K, w2, 1), d);
    out = to_string(r.verdict) + " (" + r.reason + ")";
    return r.verdict == Verdict::No;
  });
  b.claim("membership-in-R", "R consists of the series with constant term in F2", "1 + w t in R, w + t not",
          [&](std::string& out) {
            auto f = dplusm::Series::parse(K, "1 + " + K->str(w) + "*t");
            auto g = dplusm::Series::parse(K, K->str(w) + " + t");
            bool a = dplusm::is_member_R(f, d);
            bool c = dplusm::is_member_R(g, d);
            out = std::string(a ? "true" : "false") + ", " + (c ? "true" : "false");
            return a && !c;
          });
  b.claim("unordered-collapse", "as unordered factorizations the twists by w and w^2 coincide",
          "associate up to order", [&](std::string& out) {
            auto fam = dplusm::twist_family(K, 2, {w, w2});
            bool same = dplusm::factorizations_associate_unordered(fam[0], fam[1], d);
            out = same ? "associate up to order" : "distinct";
            return same;
          });
  return b.done();
}

FixtureReport dplusm_quadratic() {
  const std::size_t count = 6;
  Builder b("dplusm-quadratic", "Q(sqrt 2)^x / Q^x is infinite: arbitrarily many twists of t^2",
            {{"field", "Q(sqrt(2))"}, {"subfield", "Q"}, {"twists", count}});
  b.claim("twists-distinct-cosets", "the units 1 + j sqrt(2) lie in distinct cosets of Q^x",
          std::to_string(count) + " pairwise distinct cosets", [&](std::string& out) {
            auto u = dplusm::quadratic_twists(count);
            std::size_t clashes = 0;
            for (std::size_t i = 0; i < u.size(); ++i)
              for (std::size_t j = i + 1; j < u.size(); ++j) clashes += dplusm::same_rational_coset(u[i], u[j]);
            out = std::to_string(u.size() * (u.size() - 1) / 2 - clashes) + " of " +
                  std::to_string(u.size() * (u.size() - 1) / 2) + " pairs distinct";
            return clashes == 0 && u.size() == count;
          });
  b.claim("twists-distinct-unordered", "no twist unit is in the coset of another one's inverse",
          "no u_i in u_j^-1 Q^x", [&](std::string& out) {
            auto u = dplusm::quadratic_twists(count);
            std::size_t clashes = 0;
            for (std::size_t i = 0; i < u.size(); ++i)
              for (std::size_t j = 0; j < u.size(); ++j)
                clashes += dplusm::same_rational_coset(u[i], u[j].inverse());
            out = std::to_string(clashes) + " clashes";
            return clashes == 0;
          });
  b.claim("twist-products", "(u t)(u^-1 t) = t^2", "u u^-1 = 1 for every twist", [&](std::string& out) {
    auto u = dplusm::quadratic_twists(count);
    bool ok = true;
    for (const auto& x : u) ok = ok && (x * x.inverse()) == dplusm::QuadraticSurd{1, 0};
    out = u.front().str() + " ... " + u.back().str();
    return ok;
  });
  return b.done();
}

FixtureReport grams() {
  const Monoid m = Monoid::grams();
  Builder b("grams", "the monoid generated by 1/(2^n p_n), p_n the n-th odd prime", presentation_to_json(m));

  b.claim("atoms-are-generators", "the atoms are exactly the defining generators", "1/(2^n p_n) for n <= 5 (exact)",
          [&](std::string& out) {
            Budget bud;
            bud.truncation_index = 5;
            auto l = atoms_up_to(m, bud);
            std::vector<Element> want;
            for (int den : {416, 176, 56, 20, 6}) want.emplace_back(Rational(1, den));
            out = join(l.items) + exactness(l.exact);
            return l.items == want && l.exact;
          });
  b.claim("lengths-of-1", "1 is the sum of 2^n p_n copies of the n-th generator", "contains {6, 20, 56}",
          [&](std::string& out) {
            Budget bud;
            bud.truncation_index = 3;
            auto l = length_set(m, Element(1), bud);
            out = join(l.lengths) + exactness(l.exact);
            for (int x : {6, 20, 56})
              if (!std::binary_search(l.lengths.begin(), l.lengths.end(), mpz_class(x))) return false;
            return true;
          });
  b.claim("atom-divisors-of-1", "every generator divides 1", ">= 5 distinct atom divisors", [&](std::string& out) {
    auto l = atom_divisors(m, Element(1));
    out = join(l.items) + exactness(l.exact);
    return l.items.size() >= 5;
  });
  b.claim("probe-bf", "1 has unboundedly long factorizations", "no", [&](std::string& out) {
    Budget bud;
    bud.truncation_index = 3;
    bud.witness_limit = 3;
    auto r = probe(m, Property::BF, {Element(1)}, bud);
    out = to_string(r.verdict);
    return r.verdict == Verdict::No && all_verified(m, r, bud);
  });
  b.claim("mcd-finite-external", "MCD-finiteness rests on an external theorem", "unknown-at-budget, mcds within cap",
          [&](std::string& out) {
            Budget bud;
            bud.enumeration_cap = 20'000;
            auto r = probe(m, Property::MCDFinite, {Element(1), Element(Rational(1, 2))}, bud);
            auto l = mcds(m, {Element(1), Element(Rational(1, 2))}, bud);
            out = to_string(r.verdict) + " [" + r.basis + "], " + std::to_string(l.items.size()) + " mcds";
            return r.verdict == Verdict::UnknownAtBudget && l.items.size() <= bud.witness_limit;
          });
  return b.done();
}

FixtureReport quadrant_union() {
  const Monoid m = Monoid::quadrant_union();
  Builder b("quadrant-union", "(N0 x N0) union (Z x N>=2)", presentation_to_json(m));
  const Element bad(LatticePoint{-1, 2});

  b.claim("atoms", "the atoms are (1,0) and (0,1)", "{(1,0), (0,1)} (exact)", [&](std::string& out) {
    auto l = atoms_up_to(m);
    out = join(l.items) + exactness(l.exact);
    std::vector<Element> want{Element(LatticePoint{0, 1}), Element(LatticePoint{1, 0})};
    return l.items == want && l.exact;
  });
  b.claim("member-(-1,2)", "(-1,2) lies in Z x N>=2", "yes", [&](std::string& out) {
    auto v = is_member(m, bad).verdict;
    out = to_string(v);
    return v == Verdict::Yes;
  });
  b.claim("no-factorization-(-1,2)", "(-1,2) has no factorization into atoms", "{} (exact)", [&](std::string& out) {
    auto z = factorizations(m, bad);
    out = std::to_string(z.items.size()) + " factorizations" + exactness(z.exact);
    return z.items.empty() && z.exact;
  });
  b.claim("probe-atomic", "the monoid is not atomic", "no", [&](std::string& out) {
    auto r = probe(m, Property::Atomic, {bad});
    out = to_string(r.verdict);
    return r.verdict == Verdict::No && all_verified(m, r, {});
  });
  b.claim("factorization-(2,3)", "(2,3) factors uniquely as 2(1,0) + 3(0,1)", "1 factorization (exact)",
          [&](std::string& out) {
            auto z = factorizations(m, Element(LatticePoint{2, 3}));
            out = std::to_string(z.items.size()) + " factorizations" + exactness(z.exact);
            return z.items.size() == 1 && z.exact;
          });
  return b.done();
}

FixtureReport uff_not_idf() {
  const Monoid m = Monoid::threshold_union(Monoid::primes_squared(), 1);
  Builder b("uff-not-idf", "<(p_n+1)/p_n^2> union Q>=1: finitely many factorizations of atomic elements, not IDF",
            presentation_to_json(m));
  const Monoid fam = Monoid::primes_squared();
  const std::vector<Element> sample{Element(Rational(3, 4)), Element(Rational(3, 2)), Element(Rational(7, 4)),
                                    Element(Rational(9, 4)), Element(3)};

  b.claim("a_n-divides-2", "a_n divides 2 for every n", "yes for n <= 10", [&](std::string& out) {
    bool ok = true;
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto& gen = std::get<GeneratorFamily>(fam.rep());
      auto v = divides(m, Element(gen.generator(n)), Element(2)).verdict;
      ok = ok && v == Verdict::Yes;
      if (v != Verdict::Yes) out += "n=" + std::to_string(n) + ":" + to_string(v) + " ";
    }
    if (ok) out = "all yes";
    return ok;
  });
  b.claim("factorizations-finite", "atomic elements have finitely many factorizations",
          "exact nonempty lists on the sample", [&](std::string& out) {
            bool ok = true;
            for (const auto& q : sample) {
              auto z = factorizations(m, q);
              out += q.str() + ":" + std::to_string(z.items.size()) + (z.exact ? "" : "?") + " ";
              ok = ok && z.exact && !z.items.empty();
              for (const auto& f : z.items) {
                Witness w;
                w.kind = Witness::Kind::Factorizations;
                w.subject = {q};
                w.factorizations = {f};
                ok = ok && verify_witness(m, w);
              }
            }
            return ok;
          });
  b.claim("probe-idf", "2 has infinitely many atom divisors", "no", [&](std::string& out) {
    auto r = probe(m, Property::IDF, {Element(2)});
    out = to_string(r.verdict);
    return r.verdict == Verdict::No && all_verified(m, r, {});
  });
  b.claim("probe-uff", "finitely many factorizations at each sampled element", "yes", [&](std::string& out) {
    auto r = probe(m, Property::UFF, sample);
    out = to_string(r.verdict) + " [" + r.basis + "]";
    return r.verdict == Verdict::Yes;
  });
  return b.done();
}

const std::map<std::string, FixtureReport (*)()>& registry() {
  static const std::map<std::string, FixtureReport (*)()> r{
      {"antimatter-dyadic", antimatter_dyadic}, {"bf-not-idf", bf_not_idf},   {"dplusm-f4", dplusm_f4},
      {"dplusm-quadratic", dplusm_quadratic},   {"grams", grams},             {"quadrant-union", quadrant_union},
      {"uff-not-idf", uff_not_idf},
  };
  return r;
}

} // namespace

bool FixtureReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::vector<std::string> list_fixtures() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

FixtureReport run_fixture(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::out_of_range("unknown fixture '" + id + "'");
  return it->second();
}

nlohmann::json to_json(const FixtureReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims)
    claims.push_back(
        {{"id", c.id}, {"anchor", c.anchor}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  return {{"schema", "fixture_report.v1"}, {"id", r.id},         {"title", r.title},
          {"presentation", r.presentation}, {"passed", r.passed()}, {"claims", claims}};
}

std::string to_text(const FixtureReport& r) {
  std::ostringstream os;
  os << "fixture " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << "\n  " << r.title << "\n";
  for (const auto& c : r.claims) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.anchor << "\n";
    os << "         expected " << c.expected << "; observed " << c.observed << "\n";
  }
  return os.str();
}

} // namespace uff::catalog
