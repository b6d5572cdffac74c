#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blocklie/algebra.hpp"

namespace blocklie {

/// Entries of the block matrix ((1,0),(a1,a2)) + ((1,0),(a3,a4)).
struct IsoParams {
  FieldElement a1{0L};
  FieldElement a2{1L};
  FieldElement a3{0L};
  FieldElement a4{1L};

  static IsoParams identity() { return {}; }
  /// (-a1/a2, 1/a2, -a3/a4, 1/a4).
  IsoParams inverse() const;
  /// Parameters of the product matrix g * h.
  friend IsoParams operator*(const IsoParams& g, const IsoParams& h);
  std::string to_string() const;
};

/// Violations of a2, a4 != 0, a1 = 0 if m1 = 0 != m2, a3 = 0 if m3 = 0 != m4.
std::vector<std::string> param_violations(const IsoParams& params, const JPattern& m);

/// beta -> (b1 + a1 b2, a2 b2, b3 + a3 b4, a4 b4).
GroupVector tau_apply(const IsoParams& params, const GroupVector& beta);
/// beta -> beta g^{-1}.
GroupVector tau_inverse_apply(const IsoParams& params, const GroupVector& beta);

/// Multiplicative function on Gamma given by its values on the basis.
struct Chi {
  std::vector<FieldElement> values;

  FieldElement operator()(const AlphaVec& alpha) const;
};

/// Chi with chi(sigma) = chi_sigma and chi(delta) = chi_delta, value 1 on the
/// free directions of the Smith-adapted basis. Throws ChiUnsolvable when an
/// elementary divisor demands a root that does not exist in the field.
Chi chi_solve(const GammaSpec& gamma, const FieldElement& chi_sigma, const FieldElement& chi_delta);
/// chi_solve with targets a2/a4 and 1.
Chi chi_construct(const GammaSpec& gamma, const IsoParams& params);

/// The algebra map x^{alpha,i} -> a4^{-1} chi(alpha) y^{tau(alpha)} t1^{i1}
/// (a1 t1 + a2 t2)^{i2} t3^{i3} (a3 t3 + a4 t4)^{i4}.
class Theta {
 public:
  /// Throws SpecMismatch when (J, delta) differ or params violate the J
  /// constraints, GammaNotMapped when tau(Gamma) is not inside Gamma'.
  Theta(const Algebra& src, const Algebra& dst, IsoParams params, Chi chi);

  AlgebraElement operator()(const AlgebraElement& u) const;
  AlphaVec image(const AlphaVec& alpha) const;
  const IsoParams& params() const noexcept { return params_; }
  const Chi& chi() const noexcept { return chi_; }

 private:
  const Algebra& src_;
  const Algebra& dst_;
  IsoParams params_;
  Chi chi_;
  std::vector<AlphaVec> images_;  // tau(basis_j) in dst coordinates
};

AlgebraElement theta_apply(const Algebra& src, const Algebra& dst, const IsoParams& params,
                           const Chi& chi, const AlgebraElement& u);

struct HomCounterexample {
  AlgebraElement u;
  AlgebraElement v;
  int part = 0;  // 1, 2, or 0 for the full bracket
  AlgebraElement lhs;  // theta([u, v]_part)
  AlgebraElement rhs;  // [theta u, theta v]_part
};

struct HomReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<HomCounterexample> counterexample;
};

/// Checks theta([u,v]_p) = [theta u, theta v]_p (p = 1, 2) and for the full
/// bracket on `samples` random pairs of A(Gamma, J).
HomReport hom_verify(const Algebra& src, const Algebra& dst, const IsoParams& params,
                     const Chi& chi, std::size_t samples, std::uint64_t seed,
                     const std::vector<std::string>& indeterminates = {});

/// g(Gamma) = {alpha g^{-1}}; throws InvalidParams when g is not in G_{m,a}.
GammaSpec gamma_action(const JPattern& m, const IsoParams& g, const GammaSpec& gamma);

struct IsoVerdict {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

IsoVerdict iso_verify(const AlgebraSpec& a, const AlgebraSpec& b, const IsoParams& params);

struct OrbitResult {
  std::optional<IsoParams> found;
  std::size_t candidates = 0;
  std::vector<std::string> diagnostics;
};

/// Bounded search for g in G_{m,a} with g(g1) = g2. Every returned witness
/// has been re-verified; a miss is reported as not found, never as a proof
/// of inequivalence.
OrbitResult orbit_search(const JPattern& m, const FieldElement& a, const GammaSpec& g1,
                         const GammaSpec& g2, std::size_t bound);

}  // namespace blocklie
