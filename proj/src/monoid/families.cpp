#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "uff/primes.hpp"

namespace uff::detail::family {

namespace {

struct Forced {
  std::size_t index;
  mpz_class mult;
};

// q = sum of forced multiples + free, where the free part is a nonnegative
// dyadic rational (Grams) or a nonnegative integer (primes-squared).
struct Decomposition {
  std::vector<Forced> forced; // ascending index
  Rational free;
};

mpz_class forced_length(const Decomposition& d) {
  mpz_class n = 0;
  for (const auto& f : d.forced) n += f.mult;
  return n;
}

std::size_t two_exponent(const Rational& q) {
  return q.is_zero() ? 0 : mpz_sizeinbase(q.denominator().get_mpz_t(), 2) - 1;
}

mpz_class pow2(std::size_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_class x = a % m;
  if (x < 0) x += m;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("inverse_mod: not invertible");
  return r;
}

// For each odd prime p = p_n with v_p(q) = -1, the multiplicity of a_n is
// pinned modulo p: q * 2^n * p has p-adic unit part r_n. What remains after
// subtracting the minimal forced multiples is dyadic.
std::optional<Decomposition> grams_decompose(const Rational& q) {
  Decomposition d;
  const mpz_class& num = q.numerator();
  const mpz_class& den = q.denominator();
  mpq_class rest = q.value();
  for (auto [p, e] : factor_integer(den)) {
    if (p == 2) continue;
    if (e > 1) return std::nullopt;
    auto n = PrimeSequence::odd_primes().index_of(p);
    mpz_class pz = static_cast<unsigned long>(p);
    mpz_class two_n;
    mpz_class two = 2;
    mpz_powm_ui(two_n.get_mpz_t(), two.get_mpz_t(), *n, pz.get_mpz_t());
    mpz_class r = (num % pz) * two_n % pz * inverse_mod(den / pz, pz) % pz;
    d.forced.push_back({*n, r});
    rest -= mpq_class(r, pow2(*n) * pz);
  }
  rest.canonicalize();
  auto free = Rational::from_mpq(rest);
  if (!free) return std::nullopt;
  d.free = *free;
  std::sort(d.forced.begin(), d.forced.end(), [](const Forced& a, const Forced& b) { return a.index < b.index; });
  return d;
}

// For each prime p = p_n with v_p(q) < 0, the multiplicity of a_n is pinned
// modulo p^2. The remainder is an integer sum of parts p_n + 1.
std::optional<Decomposition> squares_decompose(const Rational& q) {
  Decomposition d;
  const mpz_class& num = q.numerator();
  const mpz_class& den = q.denominator();
  mpq_class rest = q.value();
  for (auto [p, e] : factor_integer(den)) {
    if (e > 2) return std::nullopt;
    auto n = PrimeSequence::all_primes().index_of(p);
    mpz_class pz = static_cast<unsigned long>(p);
    mpz_class p2 = pz * pz;
    mpz_class cofactor = den;
    for (unsigned i = 0; i < e; ++i) cofactor /= pz;
    mpz_class scaled = num;
    for (unsigned i = e; i < 2; ++i) scaled *= pz;
    mpz_class r = (scaled % p2) * inverse_mod(cofactor, p2) % p2 * inverse_mod(pz + 1, p2) % p2;
    d.forced.push_back({*n, r});
    rest -= mpq_class(r * (pz + 1), p2);
  }
  rest.canonicalize();
  if (rest.get_den() != 1) throw std::logic_error("squares_decompose: non-integral remainder");
  auto free = Rational::from_mpq(rest);
  if (!free) return std::nullopt;
  const mpz_class& R = free->numerator();
  if (R == 1 || R == 2 || R == 5) return std::nullopt;
  d.free = *free;
  std::sort(d.forced.begin(), d.forced.end(), [](const Forced& a, const Forced& b) { return a.index < b.index; });
  return d;
}

std::optional<Decomposition> decompose(const GeneratorFamily& f, const Rational& q) {
  if (f.rule == FamilyRule::Grams) return grams_decompose(q);
  return squares_decompose(q);
}

std::uint64_t prime_of(const GeneratorFamily& f, std::size_t n) {
  return f.rule == FamilyRule::Grams ? PrimeSequence::odd_primes().nth(n) : PrimeSequence::all_primes().nth(n);
}

Factorization forced_factorization(const GeneratorFamily& f, const Decomposition& d, Ctx& ctx) {
  Factorization z;
  for (const auto& x : d.forced) {
    z.add(f.generator(x.index), x.mult);
    ctx.use_index(x.index);
    ctx.use_coefficient(x.mult);
  }
  return z;
}

bool custom_finite(const GeneratorFamily& f) { return f.rule == FamilyRule::Custom && !f.custom->extension; }

std::vector<Rational> materialize(const GeneratorFamily& f, std::size_t count, Ctx& ctx) {
  std::vector<Rational> g;
  for (std::size_t n = 1; n <= count; ++n) {
    if (f.rule == FamilyRule::Custom && n > f.custom->prefix.size() && !f.custom->extension) break;
    g.push_back(f.generator(n));
    ctx.use_index(n);
  }
  return g;
}

FgPuiseux finite_view(const GeneratorFamily& f) { return fg::from_generators(f.custom->prefix); }

// Generators used for truncated search, restricted to what a 64-bit
// scaled oracle can handle.
std::optional<FgPuiseux> truncated_view(const GeneratorFamily& f, Ctx& ctx) {
  auto g = materialize(f, ctx.budget.truncation_index, ctx);
  try {
    return fg::from_generators(g);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

Tri custom_member(const GeneratorFamily& f, const Rational& q, Ctx& ctx) {
  return membership(f, q, ctx).status;
}

// Enumerates factorizations of q whose non-forced part J/2^W is spread over
// a_1..a_W as a binary partition: k_n parts of size 2^(W-n).
struct GramsDfs {
  const GeneratorFamily& f;
  const Decomposition& d;
  std::size_t width;
  Ctx& ctx;
  const FactorizationSink& sink;
  std::vector<mpz_class> k;
  bool stopped = false;

  void emit() {
    Factorization z = forced_factorization(f, d, ctx);
    for (std::size_t n = 1; n <= width; ++n) {
      if (k[n] == 0) continue;
      mpz_class c = k[n] * static_cast<unsigned long>(prime_of(f, n));
      z.add(f.generator(n), c);
    }
    for (const auto& [atom, mult] : z.parts()) ctx.use_coefficient(mult);
    if (!sink(z)) stopped = true;
  }

  void run(std::size_t n, const mpz_class& rem) {
    if (stopped) return;
    if (!ctx.tick()) {
      stopped = true;
      return;
    }
    if (n == width) {
      k[n] = rem;
      emit();
      k[n] = 0;
      return;
    }
    const mpz_class part = pow2(width - n);
    for (mpz_class c = rem / part; c >= 0 && !stopped; --c) {
      k[n] = c;
      run(n + 1, rem - c * part);
    }
    k[n] = 0;
  }
};

// Partitions of R into parts p + 1, largest atom (smallest prime) first.
struct SquaresDfs {
  const GeneratorFamily& f;
  const Decomposition& d;
  std::vector<std::int64_t> parts; // p_n + 1, ascending n
  std::vector<SemigroupOracle> suffix;
  Ctx& ctx;
  const FactorizationSink& sink;
  std::vector<mpz_class> k;
  bool stopped = false;

  void emit() {
    Factorization z = forced_factorization(f, d, ctx);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (k[i] == 0) continue;
      mpz_class p = parts[i] - 1;
      z.add(f.generator(i + 1), k[i] * p * p);
      ctx.use_index(i + 1);
    }
    for (const auto& [atom, mult] : z.parts()) ctx.use_coefficient(mult);
    if (!sink(z)) stopped = true;
  }

  bool reachable(std::size_t i, const mpz_class& rem) const {
    if (rem == 0) return true;
    if (i >= parts.size()) return false;
    if (suffix.empty()) return true;
    return suffix[i].contains(rem);
  }

  void run(std::size_t i, const mpz_class& rem) {
    if (stopped) return;
    if (!ctx.tick()) {
      stopped = true;
      return;
    }
    if (rem == 0) {
      emit();
      return;
    }
    if (i >= parts.size()) return;
    for (mpz_class c = rem / parts[i]; c >= 0 && !stopped; --c) {
      mpz_class next = rem - c * parts[i];
      if (!reachable(i + 1, next)) continue;
      k[i] = c;
      run(i + 1, next);
    }
    k[i] = 0;
  }
};

} // namespace

std::optional<std::size_t> grams_first_route(const Rational& q) {
  auto d = grams_decompose(q);
  if (!d || d->free.is_zero()) return std::nullopt;
  return std::max<std::size_t>(1, two_exponent(d->free));
}

std::optional<Factorization> grams_route(const Rational& q, std::size_t index) {
  auto d = grams_decompose(q);
  if (!d || d->free.is_zero() || index < two_exponent(d->free) || index == 0) return std::nullopt;
  GeneratorFamily g{FamilyRule::Grams, nullptr};
  Factorization z;
  for (const auto& x : d->forced) z.add(g.generator(x.index), x.mult);
  mpz_class copies = d->free.numerator() * pow2(index) / d->free.denominator();
  z.add(g.generator(index), copies * static_cast<unsigned long>(PrimeSequence::odd_primes().nth(index)));
  return z;
}

Membership membership(const GeneratorFamily& f, const Rational& q, Ctx& ctx) {
  Membership m;
  if (q.is_zero()) {
    m.status = Tri::Yes;
    return m;
  }
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::membership(finite_view(f), q, ctx);
    auto view = truncated_view(f, ctx);
    if (view) {
      auto r = fg::membership(*view, q, ctx);
      if (r.status == Tri::Yes) return r;
    }
    if (f.custom->membership) {
      m.status = tri(f.custom->membership(q));
      if (m.status == Tri::Yes) m.region = "membership rule of " + f.custom->name;
      return m;
    }
    m.status = Tri::Unknown;
    return m;
  }
  auto d = decompose(f, q);
  if (!d) {
    m.status = Tri::No;
    return m;
  }
  m.status = Tri::Yes;
  // Any one factorization serves as the combination.
  std::optional<Factorization> first;
  factorizations(f, q, ctx, [&](const Factorization& z) {
    first = z;
    return false;
  });
  if (first)
    for (const auto& [atom, mult] : first->parts()) m.combination.emplace_back(atom, mult);
  return m;
}

AtomCheck atom(const GeneratorFamily& f, const Rational& q, Ctx& ctx) {
  AtomCheck r;
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::atom(finite_view(f), q, ctx);
    if (f.custom->halving_closed) {
      Rational half = q / Rational(2);
      r.status = Tri::No;
      r.split = std::make_pair(half, half);
      return r;
    }
    // A decomposition q = u + v can always be moved onto a generator g <= u.
    for (const auto& g : materialize(f, ctx.budget.truncation_index, ctx)) {
      if (!(g < q)) continue;
      if (custom_member(f, *q.minus(g), ctx) == Tri::Yes) {
        r.status = Tri::No;
        r.split = std::make_pair(g, *q.minus(g));
        return r;
      }
    }
    r.status = Tri::Unknown;
    return r;
  }
  auto d = decompose(f, q);
  if (!d) throw std::logic_error("family::atom: not a member");
  if (d->free.is_zero() && forced_length(*d) == 1) {
    r.status = Tri::Yes;
    for (const auto& x : d->forced) ctx.use_index(x.index);
    return r;
  }
  std::optional<Factorization> z;
  factorizations(f, q, ctx, [&](const Factorization& x) {
    if (x.length() < 2) return true;
    z = x;
    return false;
  });
  if (!z) throw std::logic_error("family::atom: no factorization of length >= 2");
  const Rational& u = z->parts().begin()->first.rational();
  r.status = Tri::No;
  r.split = std::make_pair(u, *q.minus(u));
  return r;
}

Enumeration factorizations(const GeneratorFamily& f, const Rational& q, Ctx& ctx, const FactorizationSink& sink) {
  Enumeration e;
  if (q.is_zero()) {
    sink(Factorization{});
    return e;
  }
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::factorizations(finite_view(f), q, ctx, sink);
    if (f.custom->halving_closed) return e; // no atoms at all
    // Only generators certified as atoms may appear.
    e.complete = false;
    e.finite = false;
    auto view = truncated_view(f, ctx);
    if (!view) return e;
    fg::factorizations(*view, q, ctx, [&](const Factorization& z) {
      for (const auto& [a, mult] : z.parts())
        if (atom(f, a.rational(), ctx).status != Tri::Yes) return true;
      return sink(z);
    });
    return e;
  }
  auto d = decompose(f, q);
  if (!d) return e;
  if (d->free.is_zero()) {
    sink(forced_factorization(f, *d, ctx));
    return e;
  }
  if (f.rule == FamilyRule::Grams) {
    // Infinitely many factorizations: every finer binary split works.
    e.finite = false;
    std::size_t width = std::max<std::size_t>({ctx.budget.truncation_index, two_exponent(d->free), std::size_t{1}});
    for (const auto& x : d->forced) width = std::max(width, x.index);
    ctx.use_index(width);
    mpz_class total = d->free.numerator() * pow2(width) / d->free.denominator();
    GramsDfs dfs{f, *d, width, ctx, sink, std::vector<mpz_class>(width + 1, 0)};
    dfs.run(1, total);
    e.complete = !dfs.stopped;
    return e;
  }
  const mpz_class& R = d->free.numerator();
  SquaresDfs dfs{f, *d, {}, {}, ctx, sink, {}};
  for (std::size_t n = 1;; ++n) {
    auto p = PrimeSequence::all_primes().nth(n);
    if (R < static_cast<unsigned long>(p + 1)) break;
    dfs.parts.push_back(static_cast<std::int64_t>(p + 1));
  }
  if (R <= 5000) {
    dfs.suffix.resize(dfs.parts.size() + 1);
    for (std::size_t i = 0; i < dfs.parts.size(); ++i)
      dfs.suffix[i] = SemigroupOracle(std::vector<std::int64_t>(dfs.parts.begin() + static_cast<long>(i), dfs.parts.end()));
  }
  dfs.k.assign(dfs.parts.size(), 0);
  dfs.run(0, R);
  e.complete = !dfs.stopped;
  return e;
}

ElementList atoms(const GeneratorFamily& f, Ctx& ctx, const std::optional<Rational>& cutoff) {
  ElementList out;
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::atoms(finite_view(f), cutoff);
    if (f.custom->halving_closed) return out;
  }
  for (std::size_t n = 1; n <= ctx.budget.truncation_index; ++n) {
    if (f.rule == FamilyRule::Custom && n > f.custom->prefix.size() && !f.custom->extension) break;
    Rational g = f.generator(n);
    ctx.use_index(n);
    if (cutoff && *cutoff < g) continue;
    auto r = atom(f, g, ctx);
    if (r.status == Tri::Yes) out.items.emplace_back(g);
    if (r.status == Tri::Unknown) ++out.undecided;
  }
  // Family generators decrease to 0, so a value window holds infinitely many.
  if (cutoff || out.undecided > 0) out.exact = false;
  return out;
}

ElementList atom_divisors(const GeneratorFamily& f, const Rational& q, Ctx& ctx) {
  ElementList out;
  if (q.is_zero()) return out;
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::atom_divisors(finite_view(f), q, ctx);
    if (f.custom->halving_closed) return out;
    out.exact = false;
    for (const auto& a : atoms(f, ctx, std::nullopt).items) {
      auto rest = q.minus(a.rational());
      if (rest && custom_member(f, *rest, ctx) == Tri::Yes) out.items.push_back(a);
    }
    return out;
  }
  auto d = decompose(f, q);
  if (!d) throw std::logic_error("family::atom_divisors: not a member");
  if (f.rule == FamilyRule::Grams) {
    if (d->free.is_zero()) {
      for (const auto& x : d->forced) out.items.emplace_back(f.generator(x.index));
      return out;
    }
    // a_n divides q for every n past the first route index: a stream.
    out.exact = false;
    for (std::size_t n = 1; out.items.size() < ctx.budget.witness_limit; ++n) {
      ctx.use_index(n);
      Rational a = f.generator(n);
      auto rest = q.minus(a);
      if (rest && grams_decompose(*rest)) out.items.emplace_back(a);
      if (!ctx.tick()) break;
    }
    return out;
  }
  // a_n | q needs p_n | d(q) or p_n + 1 <= q, so the window is finite.
  std::set<std::size_t> window;
  for (const auto& x : d->forced) window.insert(x.index);
  for (std::size_t n = 1;; ++n) {
    auto p = PrimeSequence::all_primes().nth(n);
    if (q < Rational(static_cast<std::int64_t>(p + 1))) break;
    window.insert(n);
  }
  for (auto n : window) {
    ctx.use_index(n);
    ctx.tick();
    Rational a = f.generator(n);
    auto rest = q.minus(a);
    if (rest && squares_decompose(*rest)) out.items.emplace_back(a);
  }
  return out;
}

ElementList members_up_to(const GeneratorFamily& f, const Rational& x, Ctx& ctx) {
  ElementList out;
  if (f.rule == FamilyRule::Custom && custom_finite(f)) return fg::members_up_to(finite_view(f), x, ctx);
  out.exact = x.is_zero();
  auto gens = materialize(f, ctx.budget.truncation_index, ctx);
  std::set<Rational> seen{Rational{}};
  std::vector<Rational> frontier{Rational{}};
  while (!frontier.empty() && !ctx.capped) {
    std::vector<Rational> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Rational s = v + g;
        if (x < s || !ctx.tick()) continue;
        if (seen.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& v : seen) out.items.emplace_back(v);
  return out;
}

ElementList divisors(const GeneratorFamily& f, const Rational& q, Ctx& ctx) {
  ElementList out;
  if (f.rule == FamilyRule::Custom) {
    if (custom_finite(f)) return fg::divisors(finite_view(f), q, ctx);
    out.exact = false;
    std::set<Rational> found;
    std::vector<Rational> candidates;
    for (const auto& e : members_up_to(f, q, ctx).items) candidates.push_back(e.rational());
    if (f.custom->halving_closed) {
      Rational h = q;
      for (std::size_t j = 0; j <= ctx.budget.truncation_index; ++j, h = h / Rational(2)) candidates.push_back(h);
    }
    for (const auto& c : candidates) {
      auto rest = q.minus(c);
      if (!rest || found.count(c)) continue;
      if (custom_member(f, c, ctx) == Tri::Yes && custom_member(f, *rest, ctx) == Tri::Yes) {
        found.insert(c);
        out.items.emplace_back(c);
      }
    }
    return out;
  }
  auto d = decompose(f, q);
  if (!d) throw std::logic_error("family::divisors: not a member");
  // Every divisor is a sub-sum of some factorization.
  std::set<Rational> found;
  auto collect = [&](const Factorization& z) {
    std::vector<std::pair<Rational, mpz_class>> parts;
    for (const auto& [a, mult] : z.parts()) parts.emplace_back(a.rational(), mult);
    std::vector<mpz_class> c(parts.size(), 0);
    while (true) {
      if (!ctx.tick()) return false;
      mpq_class s = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) s += parts[i].first.value() * c[i];
      s.canonicalize();
      Rational v = *Rational::from_mpq(s);
      if (found.insert(v).second) out.items.emplace_back(v);
      std::size_t i = 0;
      while (i < parts.size() && c[i] == parts[i].second) c[i++] = 0;
      if (i == parts.size()) return true;
      c[i] += 1;
    }
  };
  Enumeration e = factorizations(f, q, ctx, collect);
  out.exact = e.exact() && !ctx.capped;
  return out;
}

Tri positive_at_most(const GeneratorFamily& f, const Rational& x, Ctx& ctx, std::optional<Rational>& witness) {
  if (x.is_zero()) return Tri::No;
  if (f.rule != FamilyRule::Custom) {
    for (std::size_t n = 1;; ++n) {
      Rational a = f.generator(n);
      ctx.use_index(n);
      if (a <= x) {
        witness = a;
        return Tri::Yes;
      }
    }
  }
  auto gens = materialize(f, ctx.budget.truncation_index, ctx);
  for (const auto& g : gens) {
    if (g <= x) {
      witness = g;
      return Tri::Yes;
    }
  }
  if (f.custom->halving_closed && !gens.empty()) {
    Rational h = gens.front();
    while (x < h) h = h / Rational(2);
    witness = h;
    return Tri::Yes;
  }
  return custom_finite(f) && gens.size() == f.custom->prefix.size() ? Tri::No : Tri::Unknown;
}

Tri common_divisor_exists(const GeneratorFamily& f, const std::vector<Rational>& set, Ctx& ctx,
                          std::optional<Rational>& witness) {
  for (const auto& t : set)
    if (t.is_zero()) return Tri::No;
  if (f.rule == FamilyRule::Custom && custom_finite(f))
    return fg::common_divisor_exists(finite_view(f), set, witness);
  auto divides_all = [&](const Rational& e) {
    for (const auto& t : set) {
      auto rest = t.minus(e);
      if (!rest) return Tri::No;
      Tri m = membership(f, *rest, ctx).status;
      if (m != Tri::Yes) return m;
    }
    return Tri::Yes;
  };
  const Rational t_min = *std::min_element(set.begin(), set.end());
  if (f.rule == FamilyRule::Custom) {
    std::vector<Rational> candidates;
    if (f.custom->halving_closed) {
      Rational h = t_min;
      for (std::size_t j = 0; j < ctx.budget.truncation_index; ++j) candidates.push_back(h = h / Rational(2));
    }
    for (const auto& g : materialize(f, ctx.budget.truncation_index, ctx)) candidates.push_back(g);
    for (const auto& e : candidates) {
      if (divides_all(e) == Tri::Yes) {
        witness = e;
        return Tri::Yes;
      }
    }
    return Tri::Unknown;
  }
  // Atomic: a nonzero common divisor exists iff a common atom divisor does.
  std::vector<std::optional<Decomposition>> ds;
  for (const auto& t : set) ds.push_back(decompose(f, t));
  std::optional<std::size_t> exact_source;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (f.rule == FamilyRule::PrimesSquared || ds[i]->free.is_zero()) exact_source = i;
  if (exact_source) {
    for (const auto& a : atom_divisors(f, set[*exact_source], ctx).items) {
      if (divides_all(a.rational()) == Tri::Yes) {
        witness = a.rational();
        return Tri::Yes;
      }
    }
    return Tri::No;
  }
  // Every element has a positive dyadic free part; a_n with 2^n past all of
  // them divides each element, so this search terminates.
  for (std::size_t n = 1;; ++n) {
    ctx.use_index(n);
    Rational a = f.generator(n);
    if (divides_all(a) == Tri::Yes) {
      witness = a;
      return Tri::Yes;
    }
  }
}

} // namespace uff::detail::family
