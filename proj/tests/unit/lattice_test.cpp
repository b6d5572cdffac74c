#include <gtest/gtest.h>

#include <random>

#include "blocklie/lattice.hpp"
#include "support.hpp"

namespace blocklie {
namespace {

using testing::gv;
using testing::q;
using testing::z;

IntVec iv(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(CanonicalBasis, DropsDependentGenerator) {
  const CanonicalBasis cb = canonical_basis({gv(2L, 0L, 2L, 0L), gv(1L, 0L, 1L, 0L), gv(0L, 0L, 1L, 0L)});
  ASSERT_EQ(cb.basis.size(), 2u);
  EXPECT_EQ(cb.basis[0], gv(1L, 0L, 1L, 0L));
  EXPECT_EQ(cb.basis[1], gv(0L, 0L, 1L, 0L));
}

TEST(CanonicalBasis, IndeterminateKeepsRank) {
  const CanonicalBasis cb = canonical_basis({gv(1L, 0L, 1L, 0L), gv(0L, 0L, z("a"), 0L)});
  EXPECT_EQ(cb.basis.size(), 2u);
}

TEST(CanonicalBasis, EmptyInput) { EXPECT_TRUE(canonical_basis({}).basis.empty()); }

TEST(CoordinatesOf, Examples) {
  const GammaSpec g({gv(1L, 0L, 1L, 0L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L));
  EXPECT_EQ(coordinates_of(g, gv(2L, 0L, 3L, 0L)), iv({2, 1}));
  EXPECT_EQ(coordinates_of(g, gv(0L, 0L, 1L, 0L)), iv({0, 1}));
  EXPECT_FALSE(coordinates_of(g, gv(1L, 0L, q(1, 2), 0L)).has_value());
}

TEST(ProjectionKernel, Examples) {
  const IntegerLattice k4 = projection_kernel(GammaSpec(testing::z4_generators(), FieldElement(1L)), 4);
  EXPECT_EQ(k4.rows, (IntMat{iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0})}));
  const IntegerLattice k2 =
      projection_kernel(GammaSpec({gv(1L, 0L, 1L, 0L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L)), 2);
  EXPECT_EQ(k2.rows, (IntMat{iv({1, 0}), iv({0, 1})}));
  const IntegerLattice k = projection_kernel(Subgroup({gv(1L, 0L, 0L, 0L), gv(0L, 1L, 0L, 1L)}), 4);
  EXPECT_EQ(k.rows, (IntMat{iv({1, 0})}));
}

TEST(ValidateSpec, AcceptsZ4) {
  EXPECT_TRUE(validate_spec(testing::z4_generators(), FieldElement(1L), JPattern{}).valid());
}

TEST(ValidateSpec, RequiresNForVanishingProjections) {
  const ValidationResult r = validate_spec({gv(1L, 0L, 0L, 0L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L), JPattern{});
  EXPECT_FALSE(r.valid());
  EXPECT_EQ(r.violations.size(), 2u);
}

TEST(ValidateSpec, RejectsKernelInclusion) {
  // alpha_2 = alpha_4 on the whole lattice
  const std::vector<GroupVector> gens{gv(1L, 0L, 0L, 0L), gv(0L, 1L, 0L, 1L), gv(0L, 0L, 1L, 0L)};
  for (int mask = 0; mask < 16; ++mask) {
    const JPattern j = JPattern::of(mask & 1, mask & 2, mask & 4, mask & 8);
    EXPECT_FALSE(validate_spec(gens, FieldElement(1L), j).valid()) << j.to_string();
  }
}

TEST(ValidateSpec, RejectsDeltaOutsideGamma) {
  const auto a = z("a"), b = z("b"), c = z("c");
  const std::vector<GroupVector> gens{gv(1L, 0L, 1L, 0L), gv(0L, 1L, b, 0L), gv(0L, 0L, c, 0L), gv(a, 0L, 0L, 1L)};
  const JPattern j = JPattern::of(false, false, false, true);
  EXPECT_FALSE(validate_spec(gens, b, j).valid());
  EXPECT_TRUE(validate_spec(gens, c, j).valid());
}

TEST(ValidateSpec, DeltaZeroRaises) {
  EXPECT_THROW(validate_spec(testing::z4_generators(), FieldElement(0L), JPattern{}), DeltaZero);
}

TEST(ValidateSpec, AcceptsRealizationData) {
  for (int c = 1; c <= 4; ++c) {
    for (long m : {1L, -2L}) {
      const CaseData d = case_data(c, m);
      EXPECT_TRUE(validate_spec(d.generators, d.delta3, d.j).valid()) << "case " << c << " m " << m;
    }
  }
}

TEST(SubgroupEqual, Examples) {
  std::vector<GroupVector> gens = testing::z4_generators();
  std::vector<GroupVector> perm{gens[2], gens[0], gens[3], gens[1]};
  EXPECT_TRUE(subgroup_equal(Subgroup(gens), Subgroup(perm)));
  EXPECT_FALSE(subgroup_equal(Subgroup(gens), Subgroup({gv(2L, 0L, 0L, 0L), gens[1], gens[2], gens[3]})));
  EXPECT_TRUE(subgroup_equal(Subgroup({gv(1L, 0L, 1L, 0L), gv(0L, 0L, 1L, 0L)}),
                             Subgroup({gv(1L, 0L, 0L, 0L), gv(0L, 0L, 1L, 0L)})));
}

TEST(LatticeProperties, CoordinatesRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const auto& cfg : testing::standard_configs()) {
    const Algebra alg = cfg.algebra();
    const GammaSpec& g = alg.gamma();
    for (int trial = 0; trial < 100; ++trial) {
      IntVec c;
      for (std::size_t k = 0; k < g.rank(); ++k) c.emplace_back(d(rng));
      EXPECT_EQ(g.coordinates_of(g.element(c)), c) << cfg.name;
    }
  }
}

TEST(LatticeProperties, BasisGeneratesGenerators) {
  for (const auto& cfg : testing::standard_configs()) {
    const Subgroup s(cfg.generators);
    ASSERT_EQ(s.expansion().size(), cfg.generators.size());
    for (std::size_t k = 0; k < cfg.generators.size(); ++k) {
      EXPECT_EQ(s.element(s.expansion()[k]), cfg.generators[k]) << cfg.name;
    }
  }
}

TEST(IntMat, HermiteNormalFormShape) {
  const IntMat h = hermite_normal_form({iv({2, 4, 6}), iv({1, 1, 1}), iv({0, 2, 4})});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(integer_rank({iv({2, 4, 6}), iv({1, 1, 1}), iv({0, 2, 4})}), 2u);
  EXPECT_GT(h[0][0], 0);
  EXPECT_EQ(h[1][0], 0);
}

}  // namespace
}  // namespace blocklie
