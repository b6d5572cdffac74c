#include <gtest/gtest.h>

#include <random>

#include "blocklie/errors.hpp"
#include "blocklie/field.hpp"
#include "support.hpp"

namespace blocklie {
namespace {

using testing::q;
using testing::z;

Polynomial a_squared_minus_one() { return Polynomial::variable("a", 2) - Polynomial(1L); }
Polynomial a_minus_one() { return Polynomial::variable("a") - Polynomial(1L); }

TEST(FieldArith, AddsRationals) {
  EXPECT_EQ(fe_arith(ArithKind::add, q(1, 2), q(1, 3)), q(5, 6));
  EXPECT_EQ(fe_arith(ArithKind::add, q(1, 2), q(1, 3)).to_string(), "5/6");
}

TEST(FieldArith, MultipliesIndeterminates) {
  const FieldElement a = z("a");
  EXPECT_EQ(fe_arith(ArithKind::mul, a, a), FieldElement(Polynomial::variable("a", 2)));
}

TEST(FieldArith, DividesToNormalizedQuotient) {
  const FieldElement num(a_squared_minus_one());
  const FieldElement den(a_minus_one());
  const FieldElement r = fe_arith(ArithKind::div, num, den);
  EXPECT_TRUE(fe_eq(r, z("a") + FieldElement(1L)));
}

TEST(FieldArith, DivisionByZeroThrows) {
  EXPECT_THROW(fe_arith(ArithKind::div, q(1), FieldElement(0L)), DivisionByZero);
  EXPECT_THROW(z("a") / (z("a") - z("a")), DivisionByZero);
}

TEST(FieldEq, Examples) {
  EXPECT_TRUE(fe_eq(q(2, 4), q(1, 2)));
  EXPECT_TRUE(fe_eq(FieldElement::unreduced(a_squared_minus_one(), a_minus_one()),
                    z("a") + FieldElement(1L)));
  EXPECT_FALSE(fe_eq(z("a"), z("b")));
}

TEST(FieldReduce, Examples) {
  EXPECT_EQ(fe_reduce(q(2, 4)).to_string(), "1/2");
  const FieldElement r = fe_reduce(FieldElement::unreduced(a_squared_minus_one(), a_minus_one()));
  EXPECT_EQ(r.denominator(), Polynomial(1L));
  EXPECT_EQ(r.numerator(), Polynomial::variable("a") + Polynomial(1L));
  const FieldElement ab = fe_reduce(z("a") / z("b"));
  EXPECT_EQ(ab.numerator(), Polynomial::variable("a"));
  EXPECT_EQ(ab.denominator(), Polynomial::variable("b"));
}

TEST(FieldParse, RoundTripsRendering) {
  const std::vector<std::string> names{"a", "b"};
  for (const char* text : {"5/6", "-3", "a", "a^2 - 1", "(a + 1)/(b - 2)", "-1/2*a*b"}) {
    const FieldElement x = parse_scalar(text, &names);
    EXPECT_EQ(parse_scalar(x.to_string(), &names), x) << text;
  }
}

TEST(FieldParse, RejectsUnknownIdentifier) {
  const std::vector<std::string> names{"a"};
  EXPECT_THROW(parse_scalar("b", &names), SyntaxError);
  EXPECT_THROW(parse_scalar("1/", &names), SyntaxError);
}

TEST(FieldRoots, ExactRoot) {
  EXPECT_EQ(exact_root(q(4, 9), 2), q(2, 3));
  EXPECT_FALSE(exact_root(q(2), 2).has_value());
  const FieldElement sq = (z("a") + FieldElement(1L)) * (z("a") + FieldElement(1L));
  ASSERT_TRUE(exact_root(sq, 2).has_value());
  EXPECT_EQ(exact_root(sq, 2)->pow(2), sq);
}

// Random rational functions in a and b with small integer coefficients.
class FieldGen {
 public:
  explicit FieldGen(std::uint64_t seed) : rng_(seed) {}
  FieldElement poly() {
    FieldElement out(0L);
    const int terms = pick(1, 3);
    for (int k = 0; k < terms; ++k) {
      FieldElement t(static_cast<long>(pick(-3, 3)));
      for (const char* v : {"a", "b"}) t *= z(v).pow(pick(0, 2));
      out += t;
    }
    return out;
  }
  FieldElement element() {
    FieldElement den = poly();
    while (den.is_zero()) den = poly();
    return poly() / den;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

TEST(FieldProperties, FieldAxiomsOnRandomElements) {
  FieldGen gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    const FieldElement x = gen.element(), y = gen.element(), w = gen.element();
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + w, x + (y + w));
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
    EXPECT_TRUE(fe_eq(fe_reduce(x), x));
  }
}

}  // namespace
}  // namespace blocklie
