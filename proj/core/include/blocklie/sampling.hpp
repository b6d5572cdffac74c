#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blocklie/algebra.hpp"

namespace blocklie {

struct SampleBounds {
  std::int64_t max_coord = 3;
  std::uint32_t max_t = 3;
  std::size_t max_support = 4;
  /// Scalar pool; empty selects {1, -1, 2, -2, 1/2, -1/2} plus each
  /// indeterminate.
  std::vector<FieldElement> scalars;
};

/// Deterministic sub-seed for trial `trial` of a run seeded with `seed`.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial);

/// Random elements of A(Gamma, J) and of its derived algebra.
class Sampler {
 public:
  Sampler(const Algebra& alg, std::uint64_t seed, SampleBounds bounds = {},
          const std::vector<std::string>& indeterminates = {});

  std::mt19937_64& engine() { return rng_; }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  FieldElement scalar();
  Monomial monomial();
  /// Random element of A with 1..max_support terms.
  AlgebraElement element();
  /// A single element of the spanning set of the derived algebra: a
  /// monomial in it or one of the combinations with a constrained base.
  AlgebraElement spanning_element();
  /// Nonzero random element of the derived algebra.
  AlgebraElement derived_element();

 private:
  bool constrained_type(const Monomial& m) const;

  const Algebra& alg_;
  std::mt19937_64 rng_;
  SampleBounds bounds_;
};

}  // namespace blocklie
