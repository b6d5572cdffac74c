#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blocklie/algebra.hpp"

namespace blocklie {

enum class VarKind { laurent, polynomial };

struct Signature {
  std::vector<std::string> names;
  std::vector<VarKind> kinds;

  std::size_t size() const noexcept { return names.size(); }
  std::size_t index(const std::string& name) const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sparse Laurent polynomial in the x-type variables, polynomial in the
/// t-type variables.
class LaurentElement {
 public:
  using Exps = std::vector<std::int64_t>;

  LaurentElement() = default;
  explicit LaurentElement(Signature sig) : sig_(std::move(sig)) {}
  static LaurentElement monomial(const Signature& sig, Exps e, const FieldElement& c = FieldElement(1L));
  static LaurentElement variable(const Signature& sig, const std::string& name, std::int64_t power = 1);
  static LaurentElement constant(const Signature& sig, const FieldElement& c);

  const Signature& signature() const noexcept { return sig_; }
  const std::map<Exps, FieldElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Exps& e, const FieldElement& c);

  /// Partial derivative with respect to variable `var`.
  LaurentElement diff(std::size_t var) const;
  LaurentElement diff(const std::string& name) const { return diff(sig_.index(name)); }

  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const FieldElement& c, LaurentElement a);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b);
  std::string to_string() const;

 private:
  void require_same(const LaurentElement& o) const;

  Signature sig_;
  std::map<Exps, FieldElement> terms_;
};

/// The two candidate readings of the last line of the fourth bracket:
/// `printed` keeps x1 f_{x1}, `symmetric` uses x1 g_{x1}.
enum class Case4Reading { printed, symmetric };

/// One of the four concrete realizations, with its abstract data
/// (Gamma, J, delta) and the identification of concrete variables.
struct RealizationMap {
  int case_no = 1;
  long m = 1;
  Case4Reading reading = Case4Reading::symmetric;
  Signature signature;
  std::vector<std::string> indeterminates;
  AlgebraSpec spec;
  /// Group element of each laurent variable, in signature order.
  std::vector<GroupVector> identifications;
  /// t-index (1..4) of each polynomial variable, in signature order.
  std::vector<int> t_indices;
};

/// Generators and delta3 of the abstract data of case `case_no`.
struct CaseData {
  std::vector<GroupVector> generators;
  FieldElement delta3;
  JPattern j;
  std::vector<std::string> indeterminates;
};
CaseData case_data(int case_no, long m);

RealizationMap make_realization(int case_no, long m, Case4Reading reading = Case4Reading::symmetric);

LaurentElement concrete_bracket(int case_no, long m, const LaurentElement& f, const LaurentElement& g,
                                Case4Reading reading = Case4Reading::symmetric);

/// Rewrites abstract monomials in the concrete variables.
LaurentElement realize(const RealizationMap& map, const Algebra& alg, const AlgebraElement& u);

struct CrosscheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::pair<AlgebraElement, AlgebraElement>> counterexample;
  std::string detail;
};

/// Compares realize([u,v]) with the concrete bracket of the realizations on
/// random pairs from the derived algebra.
CrosscheckReport crosscheck(const RealizationMap& map, std::size_t samples, std::uint64_t seed);

}  // namespace blocklie
