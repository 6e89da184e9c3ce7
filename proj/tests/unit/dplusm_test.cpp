#include <set>

#include <gtest/gtest.h>

#include "uff/dplusm.hpp"

using namespace uff;
using namespace uff::dplusm;

namespace {

std::shared_ptr<const FiniteField> F(std::uint32_t p, std::uint32_t m) { return std::make_shared<const FiniteField>(p, m); }

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

} // namespace

// Full field axioms for every field of order at most 16.
TEST(FiniteField, AxiomsUpToSixteen) {
  const std::pair<std::uint32_t, std::uint32_t> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                            {3, 2}, {11, 1}, {13, 1}, {2, 4}};
  for (auto [p, m] : fields) {
    FiniteField k(p, m);
    const std::uint32_t q = k.order();
    ASSERT_EQ(q, ipow(p, m));
    for (std::uint32_t a = 0; a < q; ++a) {
      ASSERT_EQ(k.add(a, k.neg(a)), 0u);
      ASSERT_EQ(k.mul(a, 1), a);
      if (a) ASSERT_EQ(k.mul(a, k.inv(a)), 1u);
      ASSERT_EQ(k.pow(a, q), a);
      ASSERT_EQ(k.parse_element(k.str(a)), a);
      ASSERT_EQ(k.from_coefficients(k.coefficients(a)), a);
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(k.add(a, b), k.add(b, a));
        ASSERT_EQ(k.mul(a, b), k.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
          ASSERT_EQ(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
        }
      }
    }
    // The primitive element generates the unit group.
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i + 1 < q; ++i) seen.insert(k.pow(k.primitive(), i));
    ASSERT_EQ(seen.size(), q - 1);
  }
}

TEST(FiniteField, ParseAndErrors) {
  EXPECT_EQ(FiniteField::parse("GF(2^2)").order(), 4u);
  EXPECT_EQ(FiniteField::parse("GF(9)").degree(), 2u);
  EXPECT_THROW(FiniteField::parse("GF(6)"), std::invalid_argument);
  EXPECT_THROW(FiniteField::parse("GF(1)"), std::invalid_argument);
  EXPECT_THROW(FiniteField(4, 1), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 17), std::invalid_argument);
  EXPECT_THROW(F(2, 2)->parse_element("[2,0]"), std::invalid_argument);
  EXPECT_EQ(F(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(F(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(F(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, Subfields) {
  auto k = F(2, 4);
  std::size_t in2 = 0;
  for (std::uint32_t a = 0; a < 16; ++a) in2 += k->in_subfield(a, 2);
  EXPECT_EQ(in2, 4u);
  EXPECT_FALSE(k->has_subfield(3));
}

TEST(Cosets, Partition) {
  for (auto [p, m, d] : {std::tuple{2u, 2u, 1u}, {3u, 2u, 1u}, {2u, 4u, 2u}, {2u, 3u, 1u}, {5u, 2u, 1u}}) {
    auto k = F(p, m);
    CosetSpace cs(k, d);
    const std::uint64_t q = k->order(), s = ipow(p, d);
    ASSERT_EQ(cs.size(), (q - 1) / (s - 1));
    ASSERT_EQ(coset_count(*k, d), cs.size());
    ASSERT_EQ(cs.subfield_units().size(), s - 1);
    std::vector<std::size_t> sizes(cs.size(), 0);
    for (std::uint32_t u = 1; u < q; ++u) {
      ++sizes[cs.coset_of(u)];
      for (auto c : cs.subfield_units()) ASSERT_TRUE(cs.same_coset(u, k->mul(u, c)));
    }
    for (auto n : sizes) ASSERT_EQ(n, s - 1);
    for (std::size_t i = 0; i < cs.size(); ++i) ASSERT_EQ(cs.coset_of(cs.transversal()[i]), i);
  }
  EXPECT_EQ(CosetSpace(F(2, 2), 1).size(), 3u);
  EXPECT_THROW(CosetSpace(F(2, 3), 2), std::invalid_argument);
}

TEST(Series, MembershipInR) {
  auto k = F(2, 2);
  const auto w = k->primitive();
  EXPECT_TRUE(is_member_R(Series::parse(k, "[1,0] + [0,1]*t"), 1));
  EXPECT_FALSE(is_member_R(Series::monomial(k, w, 0), 1));
  EXPECT_TRUE(is_member_R(Series::monomial(k, w, 3), 1));
  EXPECT_TRUE(is_member_R(Series::zero(k), 1));
  auto f = Series::parse(k, "[0,1] + t^2 + O(t^10)");
  EXPECT_EQ(f.precision(), 10u);
  EXPECT_EQ(Series::parse(k, f.str()), f);
}

TEST(Series, InverseAndProduct) {
  auto k = F(3, 2);
  Series f(k, {1, 2, 0, 5}, 16);
  auto g = f.inverse();
  EXPECT_EQ(f * g, Series::monomial(k, 1, 0, 16));
  EXPECT_THROW(Series(k, {0, 1}, 16).inverse(), std::domain_error);
}

TEST(Series, Associates) {
  auto k = F(2, 2);
  const auto w = k->primitive();
  auto t = Series::monomial(k, 1, 1);
  auto wt = Series::monomial(k, w, 1);
  EXPECT_EQ(associate_in_R(t, t, 1).verdict, Verdict::Yes);
  EXPECT_EQ(associate_in_R(t, wt, 1).verdict, Verdict::No);
  EXPECT_EQ(associate_in_R(t, t * t, 1).verdict, Verdict::No);
  auto fam = twist_family(k, 2, {1, w, k->mul(w, w)});
  ASSERT_EQ(fam.size(), 3u);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(product(fam[i]), product(fam[0]));
    for (std::size_t j = 0; j < fam.size(); ++j)
      EXPECT_EQ(factorizations_associate(fam[i], fam[j], 1), i == j) << i << "," << j;
  }
}

TEST(Quadratic, Cosets) {
  QuadraticSurd u{1, 1};
  EXPECT_EQ(u * u.inverse(), (QuadraticSurd{1, 0}));
  EXPECT_TRUE(same_rational_coset(u, QuadraticSurd{3, 3}));
  EXPECT_FALSE(same_rational_coset(u, QuadraticSurd{1, 2}));
  auto tw = quadratic_twists(6);
  ASSERT_EQ(tw.size(), 6u);
  for (std::size_t i = 0; i < tw.size(); ++i)
    for (std::size_t j = 0; j < tw.size(); ++j) EXPECT_EQ(same_rational_coset(tw[i], tw[j]), i == j);
}
