#include "blocklie/sampling.hpp"

namespace blocklie {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(const Algebra& alg, std::uint64_t seed, SampleBounds bounds,
                 const std::vector<std::string>& indeterminates)
    : alg_(alg), rng_(seed), bounds_(std::move(bounds)) {
  if (bounds_.scalars.empty()) {
    for (long v : {1L, -1L, 2L}) bounds_.scalars.emplace_back(v);
    bounds_.scalars.emplace_back(-2L);
    bounds_.scalars.push_back(FieldElement::rational(1, 2));
    bounds_.scalars.push_back(FieldElement::rational(-1, 2));
    for (const auto& name : indeterminates) bounds_.scalars.push_back(FieldElement::indeterminate(name));
  }
}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

FieldElement Sampler::scalar() {
  return bounds_.scalars[static_cast<std::size_t>(
      uniform(0, static_cast<std::int64_t>(bounds_.scalars.size()) - 1))];
}

Monomial Sampler::monomial() {
  Monomial m;
  m.alpha = alg_.zero_alpha();
  for (auto& c : m.alpha) c = uniform(-bounds_.max_coord, bounds_.max_coord);
  for (int p = 1; p <= 4; ++p) {
    if (alg_.j().n(p)) m.i[static_cast<std::size_t>(p - 1)] = static_cast<std::uint32_t>(uniform(0, bounds_.max_t));
  }
  return m;
}

AlgebraElement Sampler::element() {
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(bounds_.max_support)));
  AlgebraElement u;
  for (std::size_t k = 0; k < n; ++k) {
    const Monomial m = monomial();
    u += alg_.x(m.alpha, m.i, scalar());
  }
  return u;
}

bool Sampler::constrained_type(const Monomial& m) const {
  const JPattern& j = alg_.j();
  if (j.n(1) || j.n(2) || j.n(4)) return false;
  const auto p = alg_.projections(m.alpha);
  return p[0].is_one() && p[1].is_zero() && p[3].is_zero();
}

AlgebraElement Sampler::spanning_element() {
  Monomial m = monomial();
  const JPattern& j = alg_.j();
  const bool proper = !(j.n(1) || j.n(2) || j.n(4));
  if (proper && uniform(0, 3) == 0) {
    // bias towards the constrained bases sigma + k delta
    m.alpha = alg_.sigma() + scaled(alg_.delta(), uniform(-bounds_.max_coord, bounds_.max_coord));
  }
  if (constrained_type(m)) return constrained_generator(alg_, m);
  return alg_.x(m.alpha, m.i);
}

AlgebraElement Sampler::derived_element() {
  for (;;) {
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(bounds_.max_support)));
    AlgebraElement u;
    for (std::size_t k = 0; k < n; ++k) u += scalar() * spanning_element();
    if (!u.is_zero()) return u;
  }
}

}  // namespace blocklie
