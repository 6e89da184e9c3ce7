#include <gtest/gtest.h>

#include "uff/algebra.hpp"

using namespace uff;
using namespace uff::algebra;

namespace {

auto dyadic() { return std::make_shared<const Monoid>(Monoid::dyadic()); }
auto naturals() { return std::make_shared<const Monoid>(Monoid::fg_puiseux({1})); }

AlgebraElement Q(const std::string& s, std::shared_ptr<const Monoid> m = dyadic()) {
  return AlgebraElement::parse(CoefficientField::rationals(), m, s);
}

} // namespace

TEST(CoefficientField, Parse) {
  EXPECT_TRUE(CoefficientField::parse("Q").is_rational());
  EXPECT_EQ(CoefficientField::parse("F_5").p, 5u);
  EXPECT_EQ(CoefficientField::parse("GF(7)").p, 7u);
  EXPECT_THROW(CoefficientField::parse("F_6"), std::invalid_argument);
  EXPECT_THROW(CoefficientField::parse("R"), std::invalid_argument);
  EXPECT_EQ(CoefficientField::prime(5).reduce(mpq_class(-3)), mpq_class(2));
  EXPECT_EQ(CoefficientField::prime(5).reduce(mpq_class(1, 2)), mpq_class(3));
}

TEST(Algebra, ArithmeticExamples) {
  auto f = Q("1 + x^(1/2)");
  auto g = Q("1 - x^(1/2)");
  EXPECT_EQ(mul(f, g), Q("1 - x"));
  EXPECT_EQ(add(f, g), Q("2"));
  EXPECT_EQ(add(f, negate(f)).str(), "0");
  EXPECT_EQ(deg(Q("x^(3/4) + 2*x^3")), Rational(3));
  EXPECT_EQ(ord(Q("x^(3/4) + 2*x^3")), Rational(3, 4));
  EXPECT_EQ(Q("1 + 2*x^(1/2) - x^3").str(), "1 + 2*x^(1/2) - x^3");
  EXPECT_THROW(deg(Q("0")), std::invalid_argument);
  auto p = AlgebraElement::parse(CoefficientField::prime(2), dyadic(), "1 + x^(1/2)");
  EXPECT_EQ(mul(p, p), AlgebraElement::parse(CoefficientField::prime(2), dyadic(), "1 + x"));
}

TEST(Algebra, ExponentsMustBeMembers) {
  EXPECT_THROW(Q("x^(1/3)"), std::invalid_argument);
  EXPECT_THROW(Q("x^(1/2)", naturals()), std::invalid_argument);
  EXPECT_THROW(Q("1 + + x"), std::invalid_argument);
}

TEST(Algebra, ContentAndPrimitive) {
  EXPECT_EQ(content(Q("2*x + 4*x^3", naturals())), 2);
  EXPECT_TRUE(is_primitive(Q("3*x + 5", naturals())));
  EXPECT_FALSE(is_primitive(Q("6*x + 9", naturals())));
  auto f = Q("2*x^(1/2) + 6*x^2");
  for (long c : {1L, 3L, 7L}) EXPECT_EQ(content(scale(f, mpq_class(c))), c * content(f));
  EXPECT_THROW(content(Q("1/2*x")), std::invalid_argument);
  EXPECT_THROW(content(AlgebraElement::parse(CoefficientField::prime(3), naturals(), "x")), std::invalid_argument);
}

TEST(Algebra, MulIsCommutativeAndDegreeAdds) {
  std::vector<std::string> polys{"1 + x^(1/2)", "x^(3/4) - 2*x", "3 + x^(1/8) + x^5", "x^(5/2)"};
  for (const auto& a : polys)
    for (const auto& b : polys) {
      auto fa = Q(a), fb = Q(b);
      ASSERT_EQ(mul(fa, fb), mul(fb, fa));
      ASSERT_EQ(deg(mul(fa, fb)), deg(fa) + deg(fb));
      ASSERT_EQ(ord(mul(fa, fb)), ord(fa) + ord(fb));
    }
}

TEST(Algebra, AntimatterSplit) {
  auto f = Q("x^(1/2) + x");
  auto [g, h] = antimatter_split(f);
  EXPECT_EQ(mul(g, h), f);
  EXPECT_EQ(ord(g), ord(h));
  EXPECT_THROW(antimatter_split(Q("1 + x")), std::domain_error);
  EXPECT_THROW(antimatter_split(Q("x", naturals())), std::invalid_argument);
}

TEST(Algebra, JsonRoundTrip) {
  auto f = Q("1 + 2*x^(1/2) - x^3");
  EXPECT_EQ(algebra_from_json(to_json(f)), f);
}
