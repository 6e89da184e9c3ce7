#include <set>
#include <stdexcept>

#include "internal.hpp"

namespace uff::detail::threshold {

namespace {

const FgPuiseux* fg_base(const ThresholdUnion& t) { return std::get_if<FgPuiseux>(&t.base->rep()); }

const GeneratorFamily* family_base(const ThresholdUnion& t) { return std::get_if<GeneratorFamily>(&t.base->rep()); }

Tri member(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  if (t.theta <= q) return Tri::Yes;
  return rational_member(*t.base, q, ctx);
}

Tri divides_in(const ThresholdUnion& t, const Rational& d, const Rational& q, Ctx& ctx) {
  auto rest = q.minus(d);
  if (!rest) return Tri::No;
  Tri a = member(t, d, ctx);
  if (a != Tri::Yes) return a;
  return member(t, *rest, ctx);
}

// Base atoms below theta, ascending. These are exactly the atoms of the
// union that lie below theta.
std::vector<Rational> low_atoms(const FgPuiseux& b, const Rational& theta) {
  std::vector<Rational> out;
  for (const auto& a : b.analysis->atoms)
    if (a < theta) out.push_back(a);
  return out;
}

// Families whose atoms all sit below theta and whose only atom at or above
// theta can be theta itself.
bool family_splits_cleanly(const ThresholdUnion& t) {
  const auto* f = family_base(t);
  if (!f) return false;
  if (f->rule == FamilyRule::Custom) return f->custom->halving_closed;
  return f->generator(1) < t.theta;
}

// Coefficient vectors over `atoms` with weighted sum <= bound.
struct BoundedDfs {
  const std::vector<Rational>& atoms;
  Ctx& ctx;
  std::function<bool(const std::vector<mpz_class>&, const Rational&, const mpz_class&)> visit;
  std::vector<mpz_class> coeffs;
  bool stopped = false;

  void run(std::size_t i, const Rational& used, const Rational& bound, const mpz_class& length) {
    if (stopped) return;
    if (!ctx.tick()) {
      stopped = true;
      return;
    }
    if (i == atoms.size()) {
      if (!visit(coeffs, used, length)) stopped = true;
      return;
    }
    // Largest atom first, most copies first.
    const std::size_t j = atoms.size() - 1 - i;
    Rational room = *bound.minus(used);
    mpz_class max_c = (room / atoms[j]).numerator() / (room / atoms[j]).denominator();
    for (mpz_class c = max_c; c >= 0 && !stopped; --c) {
      coeffs[j] = c;
      run(i + 1, used + atoms[j] * Rational(c, 1), bound, length + c);
    }
    coeffs[j] = 0;
  }
};

mpz_class floor_div(const Rational& a, const Rational& b) {
  Rational r = a / b;
  return r.numerator() / r.denominator();
}

} // namespace

Membership membership(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  if (t.theta <= q) {
    Membership m;
    m.status = Tri::Yes;
    m.region = "q >= " + t.theta.str();
    return m;
  }
  return rational_membership(*t.base, q, ctx);
}

AtomCheck atom(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  AtomCheck r;
  const Rational two_theta = t.theta + t.theta;
  if (two_theta <= q) {
    r.status = Tri::No;
    r.split = std::make_pair(t.theta, *q.minus(t.theta));
    return r;
  }
  bool unsure = false;
  if (t.theta <= q) {
    std::optional<Rational> u;
    Tri small = rational_positive_at_most(*t.base, *q.minus(t.theta), ctx, u);
    if (small == Tri::Yes) {
      r.status = Tri::No;
      r.split = std::make_pair(*u, *q.minus(*u));
      return r;
    }
    if (small == Tri::Unknown) unsure = true;
  }
  // Remaining splits have both parts below theta, hence inside the base.
  Tri in_base = rational_member(*t.base, q, ctx);
  if (in_base == Tri::Unknown) unsure = true;
  if (in_base == Tri::Yes) {
    AtomCheck b = rational_atom(*t.base, q, ctx);
    if (b.status == Tri::No) return b;
    if (b.status == Tri::Unknown) unsure = true;
  }
  r.status = unsure ? Tri::Unknown : Tri::Yes;
  return r;
}

std::optional<Rational> threshold_atom_width(const ThresholdUnion& t, Ctx&) {
  if (const auto* b = fg_base(t)) {
    if (b->analysis->atoms.empty()) return t.theta;
    return std::min(t.theta, b->analysis->atoms.front());
  }
  if (family_splits_cleanly(t)) return Rational{};
  return std::nullopt;
}

Enumeration factorizations(const ThresholdUnion& t, const Rational& q, Ctx& ctx, const FactorizationSink& sink) {
  Enumeration e;
  if (member(t, q, ctx) != Tri::Yes) return e;
  if (q.is_zero()) {
    sink(Factorization{});
    return e;
  }
  const Tri theta_atom = atom(t, t.theta, ctx).status;
  if (theta_atom == Tri::Unknown) e.complete = false;

  if (const auto* b = fg_base(t)) {
    const auto atoms = low_atoms(*b, t.theta);
    const Rational width = *threshold_atom_width(t, ctx);
    const Rational upper = t.theta + width;
    BoundedDfs dfs{atoms, ctx, {}, std::vector<mpz_class>(atoms.size(), 0)};
    dfs.visit = [&](const std::vector<mpz_class>& c, const Rational& used, const mpz_class&) {
      const Rational r = *q.minus(used);
      auto with_base = [&](Factorization z) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          z.add(atoms[i], c[i]);
          ctx.use_coefficient(c[i]);
        }
        return sink(z);
      };
      if (r.is_zero()) return with_base({});
      if (r < t.theta) return true;
      if (r < upper && atom(t, r, ctx).status == Tri::Yes) {
        Factorization z;
        z.add(r, 1);
        if (!with_base(z)) return false;
      }
      const mpz_class t_max = floor_div(r, t.theta);
      for (mpz_class k = 2; k <= t_max; ++k) {
        const Rational low = t.theta * Rational(k, 1);
        if (r == low) {
          if (theta_atom != Tri::Yes) continue;
          Factorization z;
          z.add(t.theta, k);
          if (!with_base(z)) return false;
        } else if (r < upper * Rational(k, 1)) {
          // Perturbing k parts inside (theta, theta + width) gives infinitely
          // many factorizations; one equal split is reported.
          e.finite = false;
          const Rational part = r / Rational(k, 1);
          if (atom(t, part, ctx).status == Tri::Yes) {
            Factorization z;
            z.add(part, k);
            if (!with_base(z)) return false;
          }
        }
      }
      return true;
    };
    dfs.run(0, Rational{}, q, 0);
    if (dfs.stopped) e.complete = false;
    return e;
  }

  if (!family_splits_cleanly(t)) {
    e.complete = false;
    e.finite = false;
    return e;
  }
  const mpz_class t_max = theta_atom == Tri::Yes ? floor_div(q, t.theta) : mpz_class(0);
  bool stopped = false;
  for (mpz_class k = t_max; k >= 0 && !stopped; --k) {
    const Rational r = *q.minus(t.theta * Rational(k, 1));
    Tri in_base = rational_member(*t.base, r, ctx);
    if (in_base == Tri::Unknown) e.complete = false;
    if (in_base != Tri::Yes) continue;
    Enumeration sub = rational_factorizations(*t.base, r, ctx, [&](const Factorization& z) {
      Factorization full = z;
      full.add(t.theta, k);
      if (!sink(full)) {
        stopped = true;
        return false;
      }
      return true;
    });
    e.complete = e.complete && sub.complete;
    e.finite = e.finite && sub.finite;
  }
  if (stopped) e.complete = false;
  return e;
}

LengthSet lengths(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  LengthSet out;
  std::set<mpz_class> found;
  const auto* b = fg_base(t);
  if (!b) {
    Enumeration e = factorizations(t, q, ctx, [&](const Factorization& z) {
      if (z.length() > 0) found.insert(z.length());
      return true;
    });
    out.exact = e.exact();
    out.lengths.assign(found.begin(), found.end());
    return out;
  }
  // With a finitely generated base the feasible numbers of parts at or above
  // theta are decided directly, so the length set stays exact even where the
  // factorization set is infinite.
  const Tri theta_atom = atom(t, t.theta, ctx).status;
  const auto atoms = low_atoms(*b, t.theta);
  const Rational upper = t.theta + *threshold_atom_width(t, ctx);
  BoundedDfs dfs{atoms, ctx, {}, std::vector<mpz_class>(atoms.size(), 0)};
  dfs.visit = [&](const std::vector<mpz_class>&, const Rational& used, const mpz_class& len) {
    const Rational r = *q.minus(used);
    if (r.is_zero()) {
      if (len > 0) found.insert(len);
      return true;
    }
    if (r < t.theta) return true;
    if (r < upper && atom(t, r, ctx).status == Tri::Yes) found.insert(len + 1);
    const mpz_class t_max = floor_div(r, t.theta);
    for (mpz_class k = 2; k <= t_max; ++k) {
      const Rational low = t.theta * Rational(k, 1);
      if ((r == low && theta_atom == Tri::Yes) || (low < r && r < upper * Rational(k, 1))) found.insert(len + k);
    }
    return true;
  };
  dfs.run(0, Rational{}, q, 0);
  out.exact = !dfs.stopped && theta_atom != Tri::Unknown;
  out.lengths.assign(found.begin(), found.end());
  return out;
}

ElementList atoms(const ThresholdUnion& t, Ctx& ctx, const std::optional<Rational>& cutoff) {
  ElementList out;
  auto consider = [&](const Rational& a) {
    if (cutoff && *cutoff < a) return;
    Tri s = atom(t, a, ctx).status;
    if (s == Tri::Yes) out.items.emplace_back(a);
    if (s == Tri::Unknown) ++out.undecided;
  };
  if (const auto* b = fg_base(t)) {
    for (const auto& a : low_atoms(*b, t.theta)) consider(a);
    if (cutoff && *cutoff < t.theta) return out;
    // Atoms at or above theta fill an interval minus finitely many holes.
    out.exact = false;
    const Rational upper = t.theta + *threshold_atom_width(t, ctx);
    const std::size_t goal = out.items.size() + ctx.budget.witness_limit;
    for_each_dyadic_point(t.theta, upper, ctx.budget.truncation_index + 32, [&](const Rational& g) {
      if (g < upper) consider(g);
      return out.items.size() < goal && ctx.tick();
    });
    return out;
  }
  ElementList base = rational_atoms(*t.base, ctx, cutoff);
  for (const auto& a : base.items) consider(a.rational());
  consider(t.theta);
  out.exact = base.exact && out.undecided == 0 && family_splits_cleanly(t);
  return out;
}

ElementList atom_divisors(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  ElementList out;
  if (q.is_zero()) return out;
  std::set<Rational> seen;
  auto consider = [&](const Rational& a) {
    if (seen.count(a)) return;
    Tri d = divides_in(t, a, q, ctx);
    if (d == Tri::Unknown) ++out.undecided;
    if (d != Tri::Yes) return;
    Tri s = atom(t, a, ctx).status;
    if (s == Tri::Unknown) ++out.undecided;
    if (s != Tri::Yes) return;
    seen.insert(a);
    out.items.emplace_back(a);
  };
  const Rational two_theta = t.theta + t.theta;
  if (const auto* b = fg_base(t)) {
    for (const auto& a : low_atoms(*b, t.theta)) consider(a);
    const Rational upper = t.theta + *threshold_atom_width(t, ctx);
    if (q <= two_theta) {
      // An atom a >= theta dividing q leaves q - a below theta, in the base.
      consider(q);
      for (const auto& m : rational_members_up_to(*t.base, q, ctx).items) {
        auto a = q.minus(m.rational());
        if (a && t.theta <= *a && *a < upper) consider(*a);
      }
      if (q == two_theta) consider(t.theta);
      return out;
    }
    // Every atom in [theta, min(upper, q - theta)] divides q: a stream.
    out.exact = false;
    const Rational hi = std::min(upper, *q.minus(t.theta));
    const std::size_t goal = out.items.size() + ctx.budget.witness_limit;
    for_each_dyadic_point(t.theta, hi, ctx.budget.truncation_index + 32, [&](const Rational& g) {
      if (g < upper) consider(g);
      return out.items.size() < goal && ctx.tick();
    });
    return out;
  }
  if (q <= t.theta) {
    ElementList base = rational_atom_divisors(*t.base, q, ctx);
    for (const auto& a : base.items) consider(a.rational());
    if (q == t.theta) consider(t.theta);
    out.exact = base.exact && family_splits_cleanly(t) && out.undecided == 0;
    return out;
  }
  // Family atoms shrink to 0, so all late ones divide q.
  out.exact = false;
  const auto* f = family_base(t);
  for (std::size_t n = 1; out.items.size() < ctx.budget.witness_limit && ctx.tick(); ++n) {
    if (f->rule == FamilyRule::Custom && (f->custom->halving_closed || n > ctx.budget.truncation_index)) break;
    ctx.use_index(n);
    Rational a = f->generator(n);
    if (f->rule == FamilyRule::Custom || rational_atom(*t.base, a, ctx).status == Tri::Yes) consider(a);
  }
  if (out.items.size() < ctx.budget.witness_limit) consider(t.theta);
  return out;
}

ElementList divisors(const ThresholdUnion& t, const Rational& q, Ctx& ctx) {
  ElementList out;
  std::set<Rational> seen;
  auto consider = [&](const Rational& d) {
    if (seen.count(d)) return;
    Tri s = divides_in(t, d, q, ctx);
    if (s == Tri::Unknown) ++out.undecided;
    if (s != Tri::Yes) return;
    seen.insert(d);
    out.items.emplace_back(d);
  };
  // A divisor d has d or q - d below theta (unless both are >= theta), and
  // below theta the union agrees with the base.
  ElementList base = rational_members_up_to(*t.base, q, ctx);
  for (const auto& b : base.items) {
    consider(b.rational());
    consider(*q.minus(b.rational()));
  }
  const Rational two_theta = t.theta + t.theta;
  if (two_theta <= q) {
    for_each_dyadic_point(t.theta, *q.minus(t.theta), ctx.budget.truncation_index, [&](const Rational& g) {
      consider(g);
      return ctx.tick();
    });
  }
  out.exact = base.exact && q <= two_theta && out.undecided == 0;
  return out;
}

Tri common_divisor_exists(const ThresholdUnion& t, const std::vector<Rational>& set, Ctx& ctx,
                          std::optional<Rational>& witness) {
  for (const auto& s : set)
    if (s.is_zero()) return Tri::No;
  auto divides_all = [&](const Rational& e) {
    Tri all = Tri::Yes;
    for (const auto& s : set) {
      Tri d = divides_in(t, e, s, ctx);
      if (d == Tri::No) return Tri::No;
      if (d == Tri::Unknown) all = Tri::Unknown;
    }
    return all;
  };
  const Rational t_min = *std::min_element(set.begin(), set.end());
  // Any nonzero member u <= t_min - theta divides every element: each
  // s - u >= theta.
  if (t.theta <= t_min) {
    const Rational room = *t_min.minus(t.theta);
    if (t.theta <= room) {
      witness = t.theta;
      return Tri::Yes;
    }
    std::optional<Rational> u;
    Tri small = rational_positive_at_most(*t.base, room, ctx, u);
    if (small == Tri::Yes) {
      witness = *u;
      return Tri::Yes;
    }
    if (small == Tri::Unknown) return Tri::Unknown;
  }
  // Otherwise a common divisor e exceeds t_min - theta, so t_min - e lies
  // below theta and belongs to the base.
  std::vector<Rational> candidates;
  bool complete = true;
  if (fg_base(t)) {
    const Rational limit = std::min(t.theta, t_min);
    ElementList members = rational_members_up_to(*t.base, limit, ctx);
    complete = members.exact;
    for (const auto& b : members.items)
      if (b.rational() < limit) candidates.push_back(*t_min.minus(b.rational()));
  } else {
    if (rational_member(*t.base, t_min, ctx) == Tri::Yes) {
      ElementList base = rational_divisors(*t.base, t_min, ctx);
      complete = base.exact;
      for (const auto& d : base.items)
        if (!d.is_zero()) candidates.push_back(d.rational());
    }
    if (t.theta <= t_min) candidates.push_back(t_min);
  }
  bool unsure = !complete;
  for (const auto& e : candidates) {
    if (e.is_zero()) continue;
    Tri d = divides_all(e);
    if (d == Tri::Yes) {
      witness = e;
      return Tri::Yes;
    }
    if (d == Tri::Unknown) unsure = true;
  }
  return unsure ? Tri::Unknown : Tri::No;
}

} // namespace uff::detail::threshold
