#include <gtest/gtest.h>

#include "blocklie/realizations.hpp"
#include "blocklie/sampling.hpp"
#include "support.hpp"

namespace blocklie {
namespace {

using testing::av;

TEST(ConcreteBracket, Examples) {
  const RealizationMap c1 = make_realization(1, 1);
  const Signature& s1 = c1.signature;
  const auto x1 = LaurentElement::variable(s1, "x1");
  const auto x3 = LaurentElement::variable(s1, "x3");
  const auto t2 = LaurentElement::variable(s1, "t2");
  EXPECT_EQ(concrete_bracket(1, 1, x1, t2), x1 * x1 * x3);
  EXPECT_TRUE(concrete_bracket(1, 1, x1 * t2, x1 * t2).is_zero());

  const RealizationMap c3 = make_realization(3, 1);
  const auto y1 = LaurentElement::variable(c3.signature, "x1");
  const auto y3 = LaurentElement::variable(c3.signature, "x3");
  const auto t4 = LaurentElement::variable(c3.signature, "t4");
  EXPECT_EQ(concrete_bracket(3, 1, y1, t4), y1 * y3 + y1);
}

TEST(Realize, Examples) {
  const RealizationMap c1 = make_realization(1, 1);
  const Algebra a1(c1.spec);
  const auto& s = c1.signature;
  const auto x1 = LaurentElement::variable(s, "x1");
  const auto x3 = LaurentElement::variable(s, "x3");
  const auto t2 = LaurentElement::variable(s, "t2");
  EXPECT_EQ(realize(c1, a1, a1.x(av({2, 1}), {0, 1, 0, 0})), x1 * x1 * x3 * t2);
  EXPECT_EQ(realize(c1, a1, a1.one()), LaurentElement::constant(s, FieldElement(1L)));

  const RealizationMap c3 = make_realization(3, 1);
  const Algebra a3(c3.spec);
  EXPECT_EQ(realize(c3, a3, a3.x(a3.sigma())), LaurentElement::variable(c3.signature, "x1"));
}

TEST(Realize, IsMultiplicative) {
  for (int c = 1; c <= 4; ++c) {
    const RealizationMap map = make_realization(c, 2);
    const Algebra alg(map.spec);
    Sampler sampler(alg, 9, {}, map.indeterminates);
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraElement u = sampler.element(), v = sampler.element();
      EXPECT_EQ(realize(map, alg, elem_mul(alg, u, v)), realize(map, alg, u) * realize(map, alg, v));
    }
  }
}

TEST(Crosscheck, CasesOneToThree) {
  for (int c = 1; c <= 3; ++c) {
    for (long m : {1L, -1L, 2L}) {
      const CrosscheckReport r = crosscheck(make_realization(c, m), 40, 11);
      EXPECT_TRUE(r.ok) << "case " << c << " m " << m << ": " << r.detail;
    }
  }
}

TEST(Crosscheck, CaseFourSelectsOneReading) {
  const CrosscheckReport sym = crosscheck(make_realization(4, 1, Case4Reading::symmetric), 60, 13);
  const CrosscheckReport printed = crosscheck(make_realization(4, 1, Case4Reading::printed), 60, 13);
  EXPECT_TRUE(sym.ok) << sym.detail;
  EXPECT_FALSE(printed.ok);
}

TEST(LaurentElement, Basics) {
  const RealizationMap c1 = make_realization(1, 1);
  const auto& s = c1.signature;
  const auto x1 = LaurentElement::variable(s, "x1");
  const auto inv = LaurentElement::variable(s, "x1", -1);
  EXPECT_EQ(x1 * inv, LaurentElement::constant(s, FieldElement(1L)));
  EXPECT_EQ(inv.diff("x1"), FieldElement(-1L) * LaurentElement::variable(s, "x1", -2));
  const RealizationMap c4 = make_realization(4, 1);
  EXPECT_THROW(x1 + LaurentElement::variable(c4.signature, "x1"), SignatureMismatch);
}

}  // namespace
}  // namespace blocklie
