#include <limits>
#include <stdexcept>

#include "internal.hpp"

namespace uff::detail::quadrant {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

const LatticePoint kRight{1, 0};
const LatticePoint kUp{0, 1};

// First coordinates a with (a, b) in M and (c - a, d - b) in M.
std::pair<std::int64_t, std::int64_t> divisor_range(const LatticePoint& p, std::int64_t b) {
  const std::int64_t lo = b <= 1 ? 0 : kNegInf;
  const std::int64_t hi = p.y - b <= 1 ? p.x : kPosInf;
  return {lo, hi};
}

} // namespace

bool member(const LatticePoint& p) { return p.y >= 2 || (p.y >= 0 && p.x >= 0); }

AtomCheck atom(const LatticePoint& p) {
  AtomCheck r;
  if (p == kRight || p == kUp) {
    r.status = Tri::Yes;
    return r;
  }
  r.status = Tri::No;
  // Both (1,0) and the remainder stay in M here.
  if (p.y >= 2 || p.x >= 1) {
    r.split = std::make_pair(Element(kRight), Element(LatticePoint{p.x - 1, p.y}));
    return r;
  }
  // Only (0, 0) and (0, 1) remain among members, handled above or excluded.
  throw std::logic_error("quadrant::atom: identity has no atom status");
}

std::vector<Factorization> factorizations(const LatticePoint& p) {
  if (!member(p) || p.x < 0) return {};
  Factorization z;
  z.add(Element(kRight), p.x);
  z.add(Element(kUp), p.y);
  return {z};
}

ElementList divisors(const LatticePoint& p, Ctx& ctx) {
  ElementList out;
  if (p.y <= 1) {
    for (std::int64_t b = 0; b <= p.y; ++b)
      for (std::int64_t a = 0; a <= p.x; ++a) {
        ctx.tick();
        out.items.emplace_back(LatticePoint{a, b});
      }
    return out;
  }
  // Some second coordinates leave the first unbounded: emit |a| ascending up
  // to a window around p.
  out.exact = false;
  const std::int64_t radius = std::max<std::int64_t>(std::abs(p.x), 0) + static_cast<std::int64_t>(ctx.budget.truncation_index);
  for (std::int64_t r = 0; r <= radius; ++r) {
    for (std::int64_t b = 0; b <= p.y; ++b) {
      auto [lo, hi] = divisor_range(p, b);
      std::vector<std::int64_t> firsts{-r};
      if (r > 0) firsts.push_back(r);
      for (std::int64_t a : firsts) {
        if (a < lo || a > hi) continue;
        if (!ctx.tick()) return out;
        out.items.emplace_back(LatticePoint{a, b});
      }
    }
  }
  return out;
}

Tri common_divisor_exists(const std::vector<LatticePoint>& set, std::optional<LatticePoint>& witness) {
  std::int64_t d_min = kPosInf;
  for (const auto& s : set) {
    if (s == LatticePoint{}) return Tri::No;
    d_min = std::min(d_min, s.y);
  }
  for (std::int64_t b = 0; b <= d_min; ++b) {
    std::int64_t lo = b <= 1 ? 0 : kNegInf;
    std::int64_t hi = kPosInf;
    for (const auto& s : set)
      if (s.y - b <= 1) hi = std::min(hi, s.x);
    if (b == 0 && lo < 1) lo = 1; // exclude the identity
    if (lo > hi) continue;
    std::int64_t a = lo != kNegInf ? lo : (hi != kPosInf ? hi : 0);
    witness = LatticePoint{a, b};
    return Tri::Yes;
  }
  return Tri::No;
}

} // namespace uff::detail::quadrant
