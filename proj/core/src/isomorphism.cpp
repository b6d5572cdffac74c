#include "blocklie/isomorphism.hpp"

#include "blocklie/errors.hpp"
#include "blocklie/sampling.hpp"

namespace blocklie {

IsoParams IsoParams::inverse() const {
  if (a2.is_zero() || a4.is_zero()) throw InvalidParams("a2 and a4 must be nonzero");
  const FieldElement i2 = a2.inverse();
  const FieldElement i4 = a4.inverse();
  return IsoParams{-(a1 * i2), i2, -(a3 * i4), i4};
}

IsoParams operator*(const IsoParams& g, const IsoParams& h) {
  return IsoParams{g.a1 + g.a2 * h.a1, g.a2 * h.a2, g.a3 + g.a4 * h.a3, g.a4 * h.a4};
}

std::string IsoParams::to_string() const {
  return "(" + a1.to_string() + ", " + a2.to_string() + ", " + a3.to_string() + ", " +
         a4.to_string() + ")";
}

std::vector<std::string> param_violations(const IsoParams& params, const JPattern& m) {
  std::vector<std::string> out;
  if (params.a2.is_zero()) out.emplace_back("a2 must be nonzero");
  if (params.a4.is_zero()) out.emplace_back("a4 must be nonzero");
  if (!m.n(1) && m.n(2) && !params.a1.is_zero()) out.emplace_back("a1 must be 0 since J1 = {0} != J2");
  if (!m.n(3) && m.n(4) && !params.a3.is_zero()) out.emplace_back("a3 must be 0 since J3 = {0} != J4");
  return out;
}

GroupVector tau_apply(const IsoParams& p, const GroupVector& b) {
  return GroupVector::of(b.at(1) + p.a1 * b.at(2), p.a2 * b.at(2), b.at(3) + p.a3 * b.at(4),
                         p.a4 * b.at(4));
}

GroupVector tau_inverse_apply(const IsoParams& p, const GroupVector& b) {
  return tau_apply(p.inverse(), b);
}

FieldElement Chi::operator()(const AlphaVec& alpha) const {
  FieldElement r(1L);
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0) r *= values.at(j).pow(alpha[j]);
  }
  return r;
}

Chi chi_solve(const GammaSpec& gamma, const FieldElement& chi_sigma, const FieldElement& chi_delta) {
  if (chi_sigma.is_zero() || chi_delta.is_zero()) throw InvalidParams("chi takes nonzero values");
  const std::size_t n = gamma.rank();
  const IntMat a{gamma.sigma_coords(), gamma.delta_coords()};
  const SmithForm snf = smith_normal_form(a, 2, n);
  const std::array<FieldElement, 2> w{chi_sigma, chi_delta};
  std::vector<FieldElement> y(n, FieldElement(1L));
  for (std::size_t i = 0; i < 2; ++i) {
    FieldElement rhs(1L);
    for (std::size_t l = 0; l < 2; ++l) rhs *= w[l].pow(snf.u[i][l].get_si());
    const long d = i < snf.diagonal.size() ? snf.diagonal[i].get_si() : 0;
    if (d == 0) {
      if (!fe_eq(rhs, FieldElement(1L))) throw ChiUnsolvable(0, rhs.to_string());
      continue;
    }
    auto root = exact_root(rhs, static_cast<unsigned>(d < 0 ? -d : d));
    if (!root) throw ChiUnsolvable(d, rhs.to_string());
    y[i] = d < 0 ? root->inverse() : *root;
  }
  Chi chi;
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement v(1L);
    for (std::size_t k = 0; k < n; ++k) {
      const long e = snf.v[j][k].get_si();
      if (e != 0) v *= y[k].pow(e);
    }
    chi.values.push_back(v);
  }
  return chi;
}

Chi chi_construct(const GammaSpec& gamma, const IsoParams& params) {
  if (params.a2.is_zero() || params.a4.is_zero()) throw InvalidParams("a2 and a4 must be nonzero");
  return chi_solve(gamma, params.a2 / params.a4, FieldElement(1L));
}

Theta::Theta(const Algebra& src, const Algebra& dst, IsoParams params, Chi chi)
    : src_(src), dst_(dst), params_(std::move(params)), chi_(std::move(chi)) {
  if (!(src.j() == dst.j())) throw SpecMismatch("J patterns differ");
  if (!fe_eq(src.delta3(), dst.delta3())) throw SpecMismatch("delta3 values differ");
  if (auto v = param_violations(params_, src.j()); !v.empty()) throw SpecMismatch(v.front());
  if (chi_.values.size() != src.rank()) throw SpecMismatch("chi needs one value per basis vector");
  for (const auto& b : src.gamma().basis()) {
    auto c = dst.coords(tau_apply(params_, b));
    if (!c) throw GammaNotMapped("tau" + b.to_string() + " is not in Gamma'");
    images_.push_back(*c);
  }
}

AlphaVec Theta::image(const AlphaVec& alpha) const {
  AlphaVec r = dst_.zero_alpha();
  for (std::size_t j = 0; j < alpha.size(); ++j) r = r + scaled(images_[j], alpha[j]);
  return r;
}

namespace {

// Terms of (p t_a + q t_b)^n as (coefficient, exponent of t_a).
std::vector<std::pair<FieldElement, std::uint32_t>> binomial(const FieldElement& p,
                                                             const FieldElement& q,
                                                             std::uint32_t n) {
  std::vector<std::pair<FieldElement, std::uint32_t>> out;
  Integer c = 1;
  for (std::uint32_t r = 0; r <= n; ++r) {
    FieldElement coef = FieldElement(Rational(c)) * p.pow(r) * q.pow(static_cast<long>(n - r));
    if (!coef.is_zero()) out.emplace_back(std::move(coef), r);
    c = c * (n - r) / (r + 1);
  }
  return out;
}

}  // namespace

AlgebraElement Theta::operator()(const AlgebraElement& u) const {
  AlgebraElement out;
  const FieldElement inv4 = params_.a4.inverse();
  for (const auto& [m, c] : u.terms()) {
    const FieldElement base = c * inv4 * chi_(m.alpha);
    const AlphaVec a = image(m.alpha);
    const auto b12 = binomial(params_.a1, params_.a2, m.i[1]);
    const auto b34 = binomial(params_.a3, params_.a4, m.i[3]);
    for (const auto& [c12, r1] : b12) {
      for (const auto& [c34, r3] : b34) {
        const TExps i{m.i[0] + r1, m.i[1] - r1, m.i[2] + r3, m.i[3] - r3};
        out += dst_.x(a, i, base * c12 * c34);
      }
    }
  }
  return out;
}

AlgebraElement theta_apply(const Algebra& src, const Algebra& dst, const IsoParams& params,
                           const Chi& chi, const AlgebraElement& u) {
  return Theta(src, dst, params, chi)(u);
}

HomReport hom_verify(const Algebra& src, const Algebra& dst, const IsoParams& params,
                     const Chi& chi, std::size_t samples, std::uint64_t seed,
                     const std::vector<std::string>& indeterminates) {
  const Theta theta(src, dst, params, chi);
  HomReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler sampler(src, sub_seed(seed, s), {}, indeterminates);
    const AlgebraElement u = sampler.element();
    const AlgebraElement v = sampler.element();
    const AlgebraElement tu = theta(u);
    const AlgebraElement tv = theta(v);
    for (int part : {1, 2, 0}) {
      const AlgebraElement lhs =
          theta(part ? partial_bracket(src, part, u, v) : bracket(src, u, v));
      const AlgebraElement rhs = part ? partial_bracket(dst, part, tu, tv) : bracket(dst, tu, tv);
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.counterexample = HomCounterexample{u, v, part, lhs, rhs};
        return rep;
      }
    }
    ++rep.checked;
  }
  return rep;
}

GammaSpec gamma_action(const JPattern& m, const IsoParams& g, const GammaSpec& gamma) {
  if (auto v = param_violations(g, m); !v.empty()) throw InvalidParams(v.front());
  std::vector<GroupVector> gens;
  for (const auto& b : gamma.basis()) gens.push_back(tau_inverse_apply(g, b));
  return GammaSpec(std::move(gens), gamma.delta3());
}

IsoVerdict iso_verify(const AlgebraSpec& a, const AlgebraSpec& b, const IsoParams& params) {
  IsoVerdict out;
  auto& d = out.diagnostics;
  if (!(a.j == b.j)) d.push_back("J patterns differ: " + a.j.to_string() + " vs " + b.j.to_string());
  if (!fe_eq(a.gamma.delta3(), b.gamma.delta3())) {
    d.push_back("delta3 differs: " + a.gamma.delta3().to_string() + " vs " +
                b.gamma.delta3().to_string());
  }
  for (auto& v : param_violations(params, a.j)) d.push_back(std::move(v));
  if (params.a2.is_zero() || params.a4.is_zero()) return out;
  for (const auto& v : a.gamma.basis()) {
    const GroupVector img = tau_apply(params, v);
    if (!b.gamma.coordinates_of(img)) d.push_back("tau" + v.to_string() + " = " + img.to_string() + " is not in Gamma'");
  }
  for (const auto& v : b.gamma.basis()) {
    const GroupVector pre = tau_inverse_apply(params, v);
    if (!a.gamma.coordinates_of(pre)) d.push_back(v.to_string() + " has no tau-preimage in Gamma");
  }
  out.ok = d.empty();
  return out;
}

namespace {

std::vector<GroupVector> small_combinations(const GammaSpec& g) {
  std::vector<GroupVector> out;
  const std::size_t n = g.rank();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    IntVec c(n);
    std::size_t r = code;
    bool nonzero = false;
    for (std::size_t k = 0; k < n; ++k) {
      const long digit = static_cast<long>(r % 3);
      r /= 3;
      c[k] = digit == 2 ? -1 : digit;
      nonzero = nonzero || digit != 0;
    }
    if (nonzero) out.push_back(g.element(c));
  }
  return out;
}

const GroupVector* first_with(const std::vector<GroupVector>& vs, int p) {
  for (const auto& v : vs) {
    if (!v.at(p).is_zero()) return &v;
  }
  return nullptr;
}

}  // namespace

OrbitResult orbit_search(const JPattern& m, const FieldElement& a, const GammaSpec& g1,
                         const GammaSpec& g2, std::size_t bound) {
  OrbitResult out;
  for (const GammaSpec* g : {&g1, &g2}) {
    auto check = validate_spec(g->basis(), a, m);
    if (!check.valid()) {
      throw InvalidSpec("input subgroup is outside Omega: " + check.violations.front());
    }
  }
  if (g1.rank() != g2.rank()) {
    out.diagnostics.push_back("rank mismatch: " + std::to_string(g1.rank()) + " vs " +
                              std::to_string(g2.rank()));
    return out;
  }
  auto try_candidate = [&](const IsoParams& g) {
    if (!param_violations(g, m).empty()) return false;
    ++out.candidates;
    if (subgroup_equal(gamma_action(m, g, g1), g2)) {
      out.found = g;
      return true;
    }
    return false;
  };
  if (bound == 0) return out;
  if (try_candidate(IsoParams::identity())) return out;

  const GroupVector* b2 = first_with(g1.basis(), 2);
  const GroupVector* b4 = first_with(g1.basis(), 4);
  const auto pool = small_combinations(g2);
  std::vector<std::optional<GroupVector>> t2{std::nullopt};
  std::vector<std::optional<GroupVector>> t4{std::nullopt};
  if (b2) {
    t2.clear();
    for (const auto& c : pool) if (!c.at(2).is_zero()) t2.emplace_back(c);
  }
  if (b4) {
    t4.clear();
    for (const auto& c : pool) if (!c.at(4).is_zero()) t4.emplace_back(c);
  }
  // b g^{-1} = c fixes a2 = b2/c2, a1 = (b1 - c1)/c2 and likewise for a3, a4.
  for (const auto& c2 : t2) {
    for (const auto& c4 : t4) {
      if (out.candidates >= bound) {
        out.diagnostics.push_back("candidate bound reached");
        return out;
      }
      IsoParams g;
      if (c2) {
        g.a2 = b2->at(2) / c2->at(2);
        g.a1 = (b2->at(1) - c2->at(1)) / c2->at(2);
      }
      if (c4) {
        g.a4 = b4->at(4) / c4->at(4);
        g.a3 = (b4->at(3) - c4->at(3)) / c4->at(4);
      }
      if (try_candidate(g)) return out;
    }
  }
  out.diagnostics.push_back("no witness among " + std::to_string(out.candidates) + " candidates");
  return out;
}

}  // namespace blocklie
