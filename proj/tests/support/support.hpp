#pragma once

#include <string>
#include <vector>

#include <ostream>

#include "blocklie/algebra.hpp"
#include "blocklie/element_io.hpp"
#include "blocklie/errors.hpp"
#include "blocklie/lattice.hpp"
#include "blocklie/realizations.hpp"

namespace blocklie {

inline void PrintTo(const AlgebraElement& u, std::ostream* os) { *os << print_element(u); }
inline void PrintTo(const FieldElement& c, std::ostream* os) { *os << c.to_string(); }

}  // namespace blocklie

namespace blocklie::testing {

inline FieldElement q(long n, long d = 1) { return FieldElement::rational(n, d); }
inline FieldElement z(const char* name) { return FieldElement::indeterminate(name); }

inline GroupVector gv(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4) {
  return GroupVector::of(std::move(a1), std::move(a2), std::move(a3), std::move(a4));
}

inline std::vector<GroupVector> z4_generators() {
  return {GroupVector::unit(1), GroupVector::unit(2), GroupVector::unit(3), GroupVector::unit(4)};
}

inline AlgebraSpec make_spec(const std::vector<GroupVector>& gens, const FieldElement& delta3,
                             const JPattern& j) {
  ValidationResult r = validate_spec(gens, delta3, j);
  if (!r.valid()) {
    std::string msg = "invalid test spec:";
    for (const auto& v : r.violations) msg += " " + v;
    throw InvalidSpec(msg);
  }
  return *r.spec;
}

inline Algebra z4_algebra(const JPattern& j = {}, const FieldElement& delta3 = FieldElement(1L)) {
  return Algebra(make_spec(z4_generators(), delta3, j));
}

/// Gamma = <sigma, (0,0,1,0)>, the lattice behind several worked examples.
inline Algebra sigma_e3_algebra(const JPattern& j = JPattern::of(false, true, false, true)) {
  return Algebra(make_spec({gv(1L, 0L, 1L, 0L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L), j));
}

inline Algebra case_algebra(int case_no, long m = 1) {
  CaseData d = case_data(case_no, m);
  return Algebra(make_spec(d.generators, d.delta3, d.j));
}

inline AlphaVec av(std::initializer_list<std::int64_t> xs) { return AlphaVec(xs.begin(), xs.end()); }

/// A named configuration used by the property and acceptance suites.
struct Config {
  std::string name;
  std::vector<GroupVector> generators;
  FieldElement delta3;
  JPattern j;
  std::vector<std::string> indeterminates;

  Algebra algebra() const { return Algebra(make_spec(generators, delta3, j)); }
};

inline void PrintTo(const Config& c, std::ostream* os) { *os << c.name; }

/// Nine configurations covering every (pi_2 = 0?, pi_4 = 0?) combination,
/// the J patterns {0}^4, (0,1,0,1), N^4 and lattices with indeterminates.
inline std::vector<Config> standard_configs() {
  const auto e = [](int p) { return GroupVector::unit(p); };
  std::vector<Config> out;
  out.push_back({"Z4/J0", z4_generators(), FieldElement(1L), JPattern{}, {}});
  out.push_back({"Z4/JN", z4_generators(), FieldElement(1L), JPattern::of(true, true, true, true), {}});
  CaseData c1 = case_data(1, 1);
  out.push_back({"case1", c1.generators, c1.delta3, c1.j, c1.indeterminates});
  CaseData c3 = case_data(3, 1);
  out.push_back({"case3", c3.generators, c3.delta3, c3.j, c3.indeterminates});
  CaseData c4 = case_data(4, 1);
  out.push_back({"case4", c4.generators, c4.delta3, c4.j, c4.indeterminates});
  out.push_back({"e123/J4", {e(1), e(2), e(3)}, FieldElement(1L), JPattern::of(false, false, false, true), {}});
  out.push_back({"e134/J2", {e(1), e(3), e(4)}, FieldElement(-2L), JPattern::of(false, true, false, false), {}});
  out.push_back({"half/J3",
                 {gv(1L, 0L, 1L, 0L), gv(0L, 0L, q(1, 2), 0L), e(2), e(4)},
                 q(1, 2),
                 JPattern::of(false, false, true, false),
                 {}});
  out.push_back({"Z4+a/J0",
                 {e(1), e(2), e(3), e(4), gv(0L, z("a"), 0L, 0L), gv(0L, 0L, z("a"), 0L)},
                 z("a"),
                 JPattern{},
                 {"a"}});
  return out;
}

}  // namespace blocklie::testing
