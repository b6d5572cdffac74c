#include <benchmark/benchmark.h>

#include <vector>

#include "blocklie/algebra.hpp"
#include "blocklie/lattice.hpp"
#include "blocklie/sampling.hpp"
#include "blocklie/simplicity.hpp"

namespace {

using namespace blocklie;

Algebra z4(const JPattern& j) {
  return Algebra(*validate_spec({GroupVector::unit(1), GroupVector::unit(2), GroupVector::unit(3),
                                 GroupVector::unit(4)},
                                FieldElement(1L), j)
                      .spec);
}

std::vector<AlgebraElement> elements(const Algebra& alg, std::size_t n, bool derived) {
  Sampler sampler(alg, 42);
  std::vector<AlgebraElement> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(derived ? sampler.derived_element() : sampler.element());
  return out;
}

void BM_Bracket(benchmark::State& state) {
  const Algebra alg = z4(JPattern::of(true, true, true, true));
  const auto xs = elements(alg, 64, false);
  const auto path = state.range(0) == 0 ? BracketPath::expanded : BracketPath::definition;
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket(alg, xs[k % 64], xs[(k + 1) % 64], path));
    ++k;
  }
}
BENCHMARK(BM_Bracket)->Arg(0)->Arg(1);

void BM_DerivedMembership(benchmark::State& state) {
  const Algebra alg = z4(JPattern{});
  const auto xs = elements(alg, 64, false);
  std::vector<AlgebraElement> brackets;
  for (std::size_t k = 0; k < 64; ++k) brackets.push_back(bracket(alg, xs[k], xs[(k + 7) % 64]));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(derived_membership(alg, brackets[k++ % 64]));
}
BENCHMARK(BM_DerivedMembership);

void BM_ReduceToOne(benchmark::State& state) {
  const Algebra alg = z4(state.range(0) == 0 ? JPattern{} : JPattern::of(true, true, true, true));
  const auto xs = elements(alg, 32, true);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_one(alg, xs[k++ % 32]));
}
BENCHMARK(BM_ReduceToOne)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
