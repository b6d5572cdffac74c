#include "blocklie/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "blocklie/errors.hpp"

namespace blocklie {

namespace {

struct ExpLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_graded_lex(a, b) > 0;
  }
};

// Integer image of a list of vectors: every coordinate is multiplied by a
// common polynomial denominator, expanded over the monomials that occur
// (independent over Q), and the rational entries are scaled to integers.
struct Expansion {
  Polynomial common_den{1L};
  std::vector<Exponents> monomials;
  Integer scale = 1;
  IntMat rows;

  std::size_t width() const { return 4 * monomials.size(); }
};

Expansion expand(const std::vector<GroupVector>& vectors) {
  Expansion ex;
  std::vector<Polynomial> dens;
  for (const auto& v : vectors) {
    for (const auto& c : v.coords) {
      if (c.is_rational()) continue;
      Polynomial d = c.denominator();
      if (d.is_constant()) continue;
      if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(std::move(d));
    }
  }
  for (const auto& d : dens) ex.common_den = ex.common_den * d;

  std::vector<std::array<Polynomial, 4>> scaled;
  std::vector<Exponents> monos;
  for (const auto& v : vectors) {
    std::array<Polynomial, 4> row;
    for (std::size_t p = 0; p < 4; ++p) {
      const FieldElement& c = v.coords[p];
      if (c.is_rational()) {
        row[p] = ex.common_den * c.rational_value();
      } else {
        row[p] = *Polynomial::divide_exact(c.numerator() * ex.common_den, c.denominator());
      }
      for (const auto& t : row[p].terms()) monos.push_back(t.exps);
    }
    scaled.push_back(std::move(row));
  }
  std::sort(monos.begin(), monos.end(), ExpLess{});
  monos.erase(std::unique(monos.begin(), monos.end(),
                          [](const Exponents& a, const Exponents& b) {
                            return compare_graded_lex(a, b) == 0;
                          }),
              monos.end());
  ex.monomials = monos;
  const std::size_t mcount = monos.size();

  std::vector<RatVec> rat(vectors.size(), RatVec(4 * mcount));
  Integer lcm = 1;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    for (std::size_t p = 0; p < 4; ++p) {
      for (const auto& t : scaled[i][p].terms()) {
        auto it = std::lower_bound(monos.begin(), monos.end(), t.exps, ExpLess{});
        const std::size_t col = p * mcount + static_cast<std::size_t>(it - monos.begin());
        rat[i][col] = t.coef;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coef.get_den_mpz_t());
      }
    }
  }
  ex.scale = lcm;
  ex.rows.assign(vectors.size(), IntVec(4 * mcount));
  for (std::size_t i = 0; i < rat.size(); ++i) {
    for (std::size_t k = 0; k < rat[i].size(); ++k) {
      Rational v = rat[i][k] * lcm;
      ex.rows[i][k] = v.get_num();
    }
  }
  return ex;
}

GroupVector reconstruct(const Expansion& ex, const IntVec& row) {
  GroupVector v;
  const std::size_t mcount = ex.monomials.size();
  for (std::size_t p = 0; p < 4; ++p) {
    std::vector<PolyTerm> terms;
    for (std::size_t m = 0; m < mcount; ++m) {
      const Integer& x = row[p * mcount + m];
      if (x == 0) continue;
      Rational c(x, ex.scale);
      c.canonicalize();
      terms.push_back(PolyTerm{ex.monomials[m], c});
    }
    v.coords[p] = FieldElement::fraction(Polynomial::from_terms(std::move(terms)), ex.common_den);
  }
  return v;
}

}  // namespace

GroupVector GroupVector::unit(int p, const FieldElement& a) {
  GroupVector v;
  v.at(p) = a;
  return v;
}

GroupVector GroupVector::of(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4) {
  return GroupVector{{std::move(a1), std::move(a2), std::move(a3), std::move(a4)}};
}

GroupVector GroupVector::operator-() const {
  GroupVector r;
  for (std::size_t p = 0; p < 4; ++p) r.coords[p] = -coords[p];
  return r;
}

GroupVector& GroupVector::operator+=(const GroupVector& o) {
  for (std::size_t p = 0; p < 4; ++p) coords[p] += o.coords[p];
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& o) {
  for (std::size_t p = 0; p < 4; ++p) coords[p] -= o.coords[p];
  return *this;
}

GroupVector operator*(const Integer& k, const GroupVector& v) {
  GroupVector r;
  const FieldElement f{Rational(k)};
  for (std::size_t p = 0; p < 4; ++p) r.coords[p] = f * v.coords[p];
  return r;
}

bool operator==(const GroupVector& a, const GroupVector& b) {
  for (std::size_t p = 0; p < 4; ++p) {
    if (!fe_eq(a.coords[p], b.coords[p])) return false;
  }
  return true;
}

bool GroupVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& c) { return c.is_zero(); });
}

std::string GroupVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < 4; ++p) {
    if (p) os << ",";
    os << coords[p].to_string();
  }
  os << ")";
  return os.str();
}

CanonicalBasis canonical_basis(const std::vector<GroupVector>& generators) {
  CanonicalBasis out;
  if (generators.empty()) return out;
  Expansion ex = expand(generators);
  IntMat rows = ex.rows;
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IntVec& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](const Integer& x) { return x == 0; });
                            }),
             rows.end());
  const bool independent = rows.size() == ex.rows.size() && integer_rank(rows) == rows.size();
  IntMat basis_rows = independent ? ex.rows : echelon_form(ex.rows);
  for (const auto& r : basis_rows) out.basis.push_back(reconstruct(ex, r));
  if (basis_rows.empty()) {
    out.expansion.assign(generators.size(), IntVec{});
    return out;
  }
  for (const auto& g : ex.rows) {
    auto c = solve_left(basis_rows, g);
    IntVec ic;
    for (const auto& x : *c) ic.push_back(x.get_num());
    out.expansion.push_back(std::move(ic));
  }
  return out;
}

Subgroup::Subgroup(std::vector<GroupVector> generators) : generators_(std::move(generators)) {
  CanonicalBasis cb = canonical_basis(generators_);
  basis_ = std::move(cb.basis);
  expansion_ = std::move(cb.expansion);
}

std::optional<IntVec> Subgroup::coordinates_of(const GroupVector& target) const {
  if (basis_.empty()) {
    if (target.is_zero()) return IntVec{};
    return std::nullopt;
  }
  std::vector<GroupVector> all = basis_;
  all.push_back(target);
  Expansion ex = expand(all);
  IntVec t = ex.rows.back();
  ex.rows.pop_back();
  auto c = solve_left(ex.rows, t);
  if (!c) return std::nullopt;
  IntVec out;
  for (const auto& x : *c) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num());
  }
  if (!(element(out) == target)) return std::nullopt;
  return out;
}

GroupVector Subgroup::element(const IntVec& coords) const {
  GroupVector v;
  for (std::size_t j = 0; j < basis_.size() && j < coords.size(); ++j) {
    if (coords[j] != 0) v += coords[j] * basis_[j];
  }
  return v;
}

bool Subgroup::projection_is_zero(int p) const {
  return std::all_of(basis_.begin(), basis_.end(), [p](const auto& b) { return b.at(p).is_zero(); });
}

GroupVector sigma_vector() { return GroupVector::of(1L, 0L, 1L, 0L); }

GroupVector delta_vector(const FieldElement& delta3) {
  return GroupVector::unit(3, delta3);
}

GammaSpec::GammaSpec(Subgroup group, FieldElement delta3)
    : group_(std::move(group)), delta3_(std::move(delta3)) {
  if (delta3_.is_zero()) throw DeltaZero("delta3 must be nonzero");
  auto s = group_.coordinates_of(sigma_vector());
  if (!s) throw InvalidSpec("sigma = (1,0,1,0) is not in Gamma");
  auto d = group_.coordinates_of(delta_vector(delta3_));
  if (!d) throw InvalidSpec("delta = (0,0," + delta3_.to_string() + ",0) is not in Gamma");
  sigma_coords_ = std::move(*s);
  delta_coords_ = std::move(*d);
}

std::string JPattern::to_string() const {
  std::string s = "(";
  for (std::size_t p = 0; p < 4; ++p) {
    if (p) s += ",";
    s += flags[p] ? "1" : "0";
  }
  return s + ")";
}

std::optional<IntVec> coordinates_of(const GammaSpec& gamma, const GroupVector& target) {
  return gamma.coordinates_of(target);
}

IntegerLattice projection_kernel(const Subgroup& group, int p) {
  IntegerLattice out;
  out.dim = group.rank();
  if (out.dim == 0) return out;
  std::vector<GroupVector> only_p;
  for (const auto& b : group.basis()) only_p.push_back(GroupVector::unit(p, b.at(p)));
  Expansion ex = expand(only_p);
  out.rows = left_kernel(ex.rows, out.dim);
  return out;
}

IntegerLattice projection_kernel(const GammaSpec& gamma, int p) {
  return projection_kernel(gamma.group(), p);
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& v : a.basis()) {
    if (!b.contains(v)) return false;
  }
  for (const auto& v : b.basis()) {
    if (!a.contains(v)) return false;
  }
  return true;
}

bool subgroup_equal(const GammaSpec& a, const GammaSpec& b) {
  return subgroup_equal(a.group(), b.group());
}

ValidationResult validate_spec(const std::vector<GroupVector>& generators,
                               const FieldElement& delta3, const JPattern& j) {
  if (delta3.is_zero()) throw DeltaZero("delta3 must be nonzero");
  ValidationResult out;
  Subgroup group(generators);
  if (!group.contains(sigma_vector())) out.violations.emplace_back("sigma not in Gamma");
  if (!group.contains(delta_vector(delta3))) out.violations.emplace_back("delta not in Gamma");
  if (!group.projection_is_zero(2)) {
    const IntegerLattice ker4 = projection_kernel(group, 4);
    bool found = false;
    for (const auto& row : ker4.rows) {
      if (!group.element(row).at(2).is_zero()) found = true;
    }
    if (!found) out.violations.emplace_back("ker pi4 contained in ker pi2 while pi2 != 0");
  }
  for (int q : {2, 4}) {
    if (group.projection_is_zero(q) && !j.n(q)) {
      out.violations.push_back("J" + std::to_string(q) + " must be N since pi" +
                               std::to_string(q) + " = 0");
    }
  }
  if (out.violations.empty()) out.spec = AlgebraSpec{GammaSpec(std::move(group), delta3), j};
  return out;
}

}  // namespace blocklie
