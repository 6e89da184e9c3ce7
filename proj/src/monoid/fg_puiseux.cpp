#include <stdexcept>

#include "internal.hpp"

namespace uff::detail::fg {

namespace {

struct Dfs {
  const FgAnalysis& a;
  Ctx& ctx;
  const FactorizationSink& sink;
  std::vector<mpz_class> coeffs;
  bool stopped = false;

  void emit() {
    Factorization f;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      f.add(a.atoms[i], coeffs[i]);
      ctx.use_coefficient(coeffs[i]);
    }
    if (!sink(f)) stopped = true;
  }

  // Atoms are visited from the largest (index k-1) down; prefix[i] decides
  // whether the remainder is still reachable with the i smallest atoms.
  void run(std::size_t i, const mpz_class& rem) {
    if (stopped) return;
    if (!ctx.tick()) {
      stopped = true;
      return;
    }
    const mpz_class atom = a.scaled_atoms[i];
    if (i == 0) {
      if (rem % atom == 0) {
        coeffs[0] = rem / atom;
        emit();
        coeffs[0] = 0;
      }
      return;
    }
    for (mpz_class c = rem / atom; c >= 0 && !stopped; --c) {
      mpz_class next = rem - c * atom;
      if (!a.prefix[i].contains(next)) continue;
      coeffs[i] = c;
      run(i - 1, next);
      coeffs[i] = 0;
      if (!stopped && !ctx.tick()) stopped = true;
    }
  }
};

Rational unscale(const FgAnalysis& a, const mpz_class& v) { return Rational(v, a.scale); }

} // namespace

FgPuiseux from_generators(const std::vector<Rational>& generators) {
  std::vector<Rational> g = generators;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  auto analysis = analyze_fg(g);
  return FgPuiseux{std::move(g), std::move(analysis)};
}

Membership membership(const FgPuiseux& p, const Rational& q, Ctx& ctx) {
  Membership m;
  const auto& a = *p.analysis;
  auto s = a.scaled(q);
  if (!s) {
    m.status = Tri::No;
    return m;
  }
  auto rep = a.oracle.representation(*s);
  if (!rep) {
    m.status = Tri::No;
    return m;
  }
  m.status = Tri::Yes;
  for (std::size_t i = 0; i < rep->size(); ++i) {
    if ((*rep)[i] == 0) continue;
    m.combination.emplace_back(a.atoms[i], (*rep)[i]);
    ctx.use_coefficient((*rep)[i]);
  }
  return m;
}

AtomCheck atom(const FgPuiseux& p, const Rational& q, Ctx& ctx) {
  AtomCheck r;
  const auto& a = *p.analysis;
  if (std::binary_search(a.atoms.begin(), a.atoms.end(), q)) {
    r.status = Tri::Yes;
    return r;
  }
  auto m = membership(p, q, ctx);
  if (m.status != Tri::Yes || m.combination.empty()) throw std::logic_error("fg::atom: not a nonzero member");
  const Rational& u = m.combination.front().first.rational();
  r.status = Tri::No;
  r.split = std::make_pair(u, *q.minus(u));
  return r;
}

Enumeration factorizations(const FgPuiseux& p, const Rational& q, Ctx& ctx, const FactorizationSink& sink) {
  Enumeration e;
  const auto& a = *p.analysis;
  auto s = a.scaled(q);
  if (!s || !a.oracle.contains(*s)) return e;
  if (*s == 0) {
    sink(Factorization{});
    return e;
  }
  Dfs dfs{a, ctx, sink, std::vector<mpz_class>(a.atoms.size(), 0)};
  dfs.run(a.atoms.size() - 1, *s);
  e.complete = !dfs.stopped;
  return e;
}

ElementList members_up_to(const FgPuiseux& p, const Rational& x, Ctx& ctx) {
  ElementList out;
  const auto& a = *p.analysis;
  mpz_class top = x.numerator() * a.scale / x.denominator();
  for (mpz_class j = 0; j <= top; ++j) {
    if (!ctx.tick()) {
      out.exact = false;
      break;
    }
    if (a.oracle.contains(j)) out.items.emplace_back(unscale(a, j));
  }
  return out;
}

ElementList atoms(const FgPuiseux& p, const std::optional<Rational>& cutoff) {
  ElementList out;
  for (const auto& g : p.analysis->atoms)
    if (!cutoff || g <= *cutoff) out.items.emplace_back(g);
  return out;
}

ElementList atom_divisors(const FgPuiseux& p, const Rational& q, Ctx& ctx) {
  ElementList out;
  const auto& a = *p.analysis;
  auto s = a.scaled(q);
  if (!s) return out;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    ctx.tick();
    if (a.oracle.contains(*s - a.scaled_atoms[i])) out.items.emplace_back(a.atoms[i]);
  }
  return out;
}

ElementList divisors(const FgPuiseux& p, const Rational& q, Ctx& ctx) {
  ElementList out;
  const auto& a = *p.analysis;
  auto s = a.scaled(q);
  if (!s) return out;
  for (mpz_class j = 0; j <= *s; ++j) {
    if (!ctx.tick()) {
      out.exact = false;
      break;
    }
    if (a.oracle.contains(j) && a.oracle.contains(*s - j)) out.items.emplace_back(unscale(a, j));
  }
  return out;
}

// In an atomic monoid every nonzero common divisor has an atom factor that
// is itself a common divisor, so checking atoms is complete.
Tri common_divisor_exists(const FgPuiseux& p, const std::vector<Rational>& set, std::optional<Rational>& witness) {
  const auto& a = *p.analysis;
  std::vector<mpz_class> scaled;
  for (const auto& t : set) {
    auto s = a.scaled(t);
    if (!s) throw std::logic_error("fg::common_divisor_exists: non-member");
    if (*s == 0) return Tri::No;
    scaled.push_back(*s);
  }
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    bool all = true;
    for (const auto& s : scaled) {
      if (!a.oracle.contains(s - a.scaled_atoms[i])) {
        all = false;
        break;
      }
    }
    if (all) {
      witness = a.atoms[i];
      return Tri::Yes;
    }
  }
  return Tri::No;
}

} // namespace uff::detail::fg
