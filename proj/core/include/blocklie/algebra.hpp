#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "blocklie/lattice.hpp"

namespace blocklie {

/// Gamma-basis coordinates of a group element.
using AlphaVec = boost::container::small_vector<std::int64_t, 6>;
using TExps = std::array<std::uint32_t, 4>;

/// Basis monomial x^{alpha, i}.
struct Monomial {
  AlphaVec alpha;
  TExps i{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.alpha != b.alpha) {
      return std::lexicographical_compare(a.alpha.begin(), a.alpha.end(), b.alpha.begin(),
                                          b.alpha.end());
    }
    return a.i < b.i;
  }
};

/// Sparse linear combination of basis monomials with nonzero coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  AlgebraElement() = default;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Adds c * m, removing the entry if it cancels. No J check.
  void add(const Monomial& m, const FieldElement& c);
  FieldElement coefficient(const Monomial& m) const;
  /// Scalar value when the element is c * 1 (including 0).
  std::optional<FieldElement> scalar_value() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const FieldElement& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const FieldElement& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  Terms terms_;
};

/// An AlgebraSpec prepared for computation: caches the basis projections
/// and the coordinates of sigma and delta.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const GammaSpec& gamma() const noexcept { return spec_.gamma; }
  const JPattern& j() const noexcept { return spec_.j; }
  std::size_t rank() const noexcept { return spec_.gamma.rank(); }
  const AlphaVec& sigma() const noexcept { return sigma_; }
  const AlphaVec& delta() const noexcept { return delta_; }
  const FieldElement& delta3() const noexcept { return spec_.gamma.delta3(); }

  /// alpha_p (p = 1..4) of a coordinate vector.
  FieldElement projection(const AlphaVec& alpha, int p) const;
  std::array<FieldElement, 4> projections(const AlphaVec& alpha) const;
  GroupVector vector(const AlphaVec& alpha) const;
  std::optional<AlphaVec> coords(const GroupVector& v) const;

  bool allowed(const TExps& i) const;
  /// Adds c x^{alpha,i} to u unless i lies outside J.
  void insert(AlgebraElement& u, const Monomial& m, const FieldElement& c) const;

  AlgebraElement one() const;
  /// c x^{alpha, i}; throws JViolation when i is outside J and ArityError on
  /// a coordinate count mismatch.
  AlgebraElement x(const AlphaVec& alpha, const TExps& i = {},
                   const FieldElement& c = FieldElement(1L)) const;
  AlgebraElement t(int p, std::uint32_t power = 1) const;
  AlphaVec zero_alpha() const { return AlphaVec(rank(), 0); }

 private:
  AlgebraSpec spec_;
  AlphaVec sigma_;
  AlphaVec delta_;
  // basis_proj_[p][j] = (basis_j)_p; rational copies when every entry is rational
  std::array<std::vector<FieldElement>, 4> basis_proj_;
  std::array<std::optional<std::vector<Rational>>, 4> basis_proj_q_;
};

AlphaVec operator+(const AlphaVec& a, const AlphaVec& b);
AlphaVec operator-(const AlphaVec& a, const AlphaVec& b);
AlphaVec operator-(const AlphaVec& a);
AlphaVec scaled(const AlphaVec& a, std::int64_t k);
AlphaVec to_alpha(const IntVec& v);
IntVec to_intvec(const AlphaVec& a);

enum class BracketPath { definition, expanded };
enum class EigenMode { ad1, adxminussigma };

AlgebraElement elem_mul(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement derive(const Algebra& alg, int p, const AlgebraElement& u);
AlgebraElement bracket(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v,
                       BracketPath path = BracketPath::expanded);
/// u (.)_1 v = x^sigma d1(u) d2(v);  u (.)_2 v = (x^delta d3(u) + u) d4(v).
AlgebraElement odot(const Algebra& alg, int p, const AlgebraElement& u, const AlgebraElement& v);
/// [u, v]_p = u (.)_p v - v (.)_p u.
AlgebraElement partial_bracket(const Algebra& alg, int p, const AlgebraElement& u,
                               const AlgebraElement& v);

/// Generalized eigenspace components, in order of first appearance.
/// ad1: eigenvalue alpha_4 of ad_1. adxminussigma: eigenvalue -alpha_2 of
/// ad_{x^-sigma}, defined only when every term has alpha_4 = i_4 = 0.
std::vector<std::pair<FieldElement, AlgebraElement>> eigendecompose(const Algebra& alg,
                                                                    const AlgebraElement& u,
                                                                    EigenMode mode);

/// Coefficient of one spanning element gamma_3 x^{gamma+delta,i}
/// + i_3 x^{gamma+delta,i-1_[3]} + 2 x^{gamma,i} in a derived decomposition.
struct ConstrainedTerm {
  Monomial base;  // (gamma, i)
  FieldElement coef;
};

struct DerivedDecomposition {
  AlgebraElement free;  // sum of spanning monomials
  std::vector<ConstrainedTerm> constrained;
};

/// The combination gamma_3 x^{gamma+delta,i} + i_3 x^{gamma+delta,i-1_[3]} + 2 x^{gamma,i}.
AlgebraElement constrained_generator(const Algebra& alg, const Monomial& base);

/// Writes u over the spanning set of the derived algebra, or nullopt when u
/// is not in it.
std::optional<DerivedDecomposition> derived_decomposition(const Algebra& alg,
                                                          const AlgebraElement& u);
bool derived_membership(const Algebra& alg, const AlgebraElement& u);

/// d_q = dim span{v, ad_u v, ..., ad_u^q v} for q = 0..depth.
std::vector<std::size_t> ad_span_probe(const Algebra& alg, const AlgebraElement& u,
                                       const AlgebraElement& v, std::size_t depth);

}  // namespace blocklie
