#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blocklie/field.hpp"
#include "blocklie/intmat.hpp"

namespace blocklie {

/// Element (a1, a2, a3, a4) of F^4. Components are addressed 1..4 through
/// `at`, matching the usual coordinate labels.
struct GroupVector {
  std::array<FieldElement, 4> coords;

  static GroupVector zero() { return {}; }
  /// a placed in coordinate p (1-based), zeros elsewhere.
  static GroupVector unit(int p, const FieldElement& a = FieldElement(1L));
  static GroupVector of(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4);

  const FieldElement& at(int p) const { return coords.at(static_cast<std::size_t>(p - 1)); }
  FieldElement& at(int p) { return coords.at(static_cast<std::size_t>(p - 1)); }

  GroupVector operator-() const;
  GroupVector& operator+=(const GroupVector& o);
  GroupVector& operator-=(const GroupVector& o);
  friend GroupVector operator+(GroupVector a, const GroupVector& b) { return a += b; }
  friend GroupVector operator-(GroupVector a, const GroupVector& b) { return a -= b; }
  friend GroupVector operator*(const Integer& k, const GroupVector& v);
  friend bool operator==(const GroupVector& a, const GroupVector& b);
  bool is_zero() const;
  std::string to_string() const;
};

/// Sublattice of Z^dim given by rows in Hermite normal form.
struct IntegerLattice {
  std::size_t dim = 0;
  IntMat rows;
};

/// Finitely generated additive subgroup of F^4 with a canonical Z-basis.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<GroupVector> generators);

  const std::vector<GroupVector>& generators() const noexcept { return generators_; }
  const std::vector<GroupVector>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Integer coordinates of each generator in the basis.
  const std::vector<IntVec>& expansion() const noexcept { return expansion_; }

  /// Coordinates c with sum c_j basis_j == target, or nullopt if target is
  /// not a member.
  std::optional<IntVec> coordinates_of(const GroupVector& target) const;
  bool contains(const GroupVector& target) const { return coordinates_of(target).has_value(); }
  GroupVector element(const IntVec& coords) const;
  /// pi_p of the basis vectors; pi_p == 0 iff all of them vanish.
  bool projection_is_zero(int p) const;

 private:
  std::vector<GroupVector> generators_;
  std::vector<GroupVector> basis_;
  std::vector<IntVec> expansion_;
};

struct CanonicalBasis {
  std::vector<GroupVector> basis;
  std::vector<IntVec> expansion;
};

/// Independent generators are kept in input order; otherwise the row
/// echelon form of the monomial-expanded integer matrix is used.
CanonicalBasis canonical_basis(const std::vector<GroupVector>& generators);

GroupVector sigma_vector();
GroupVector delta_vector(const FieldElement& delta3);

/// Subgroup together with the distinguished elements sigma = (1,0,1,0) and
/// delta = (0,0,delta3,0), both required to be members.
class GammaSpec {
 public:
  GammaSpec(Subgroup group, FieldElement delta3);
  GammaSpec(std::vector<GroupVector> generators, FieldElement delta3)
      : GammaSpec(Subgroup(std::move(generators)), std::move(delta3)) {}

  const Subgroup& group() const noexcept { return group_; }
  const std::vector<GroupVector>& basis() const noexcept { return group_.basis(); }
  std::size_t rank() const noexcept { return group_.rank(); }
  const FieldElement& delta3() const noexcept { return delta3_; }
  const IntVec& sigma_coords() const noexcept { return sigma_coords_; }
  const IntVec& delta_coords() const noexcept { return delta_coords_; }
  std::optional<IntVec> coordinates_of(const GroupVector& v) const { return group_.coordinates_of(v); }
  GroupVector element(const IntVec& c) const { return group_.element(c); }

 private:
  Subgroup group_;
  FieldElement delta3_;
  IntVec sigma_coords_;
  IntVec delta_coords_;
};

/// Flags m_p: true means J_p = N, false means J_p = {0}.
struct JPattern {
  std::array<bool, 4> flags{};

  static JPattern of(bool m1, bool m2, bool m3, bool m4) { return JPattern{{m1, m2, m3, m4}}; }
  bool n(int p) const { return flags.at(static_cast<std::size_t>(p - 1)); }
  friend bool operator==(const JPattern&, const JPattern&) = default;
  std::string to_string() const;
};

struct AlgebraSpec {
  GammaSpec gamma;
  JPattern j;
};

std::optional<IntVec> coordinates_of(const GammaSpec& gamma, const GroupVector& target);
IntegerLattice projection_kernel(const GammaSpec& gamma, int p);
IntegerLattice projection_kernel(const Subgroup& group, int p);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_equal(const GammaSpec& a, const GammaSpec& b);

struct ValidationResult {
  std::optional<AlgebraSpec> spec;
  std::vector<std::string> violations;
  bool valid() const { return spec.has_value(); }
};

/// Checks membership of sigma and delta, the kernel condition on pi_4 and
/// pi_2, and that J_q = N whenever pi_q vanishes (q = 2, 4).
ValidationResult validate_spec(const std::vector<GroupVector>& generators,
                               const FieldElement& delta3, const JPattern& j);

}  // namespace blocklie
