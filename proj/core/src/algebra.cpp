#include "blocklie/algebra.hpp"

#include <algorithm>

#include "blocklie/errors.hpp"

namespace blocklie {

// ---- AlphaVec helpers -------------------------------------------------------

AlphaVec operator+(const AlphaVec& a, const AlphaVec& b) {
  AlphaVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

AlphaVec operator-(const AlphaVec& a, const AlphaVec& b) {
  AlphaVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

AlphaVec operator-(const AlphaVec& a) {
  AlphaVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

AlphaVec scaled(const AlphaVec& a, std::int64_t k) {
  AlphaVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

AlphaVec to_alpha(const IntVec& v) {
  AlphaVec r;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("Gamma coordinate out of range");
    r.push_back(x.get_si());
  }
  return r;
}

IntVec to_intvec(const AlphaVec& a) {
  IntVec r;
  for (auto x : a) r.emplace_back(static_cast<long>(x));
  return r;
}

// ---- AlgebraElement ---------------------------------------------------------

void AlgebraElement::add(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

std::optional<FieldElement> AlgebraElement::scalar_value() const {
  if (terms_.empty()) return FieldElement();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (std::any_of(m.alpha.begin(), m.alpha.end(), [](auto x) { return x != 0; })) return std::nullopt;
  if (m.i != TExps{}) return std::nullopt;
  return c;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(it->first == m) || !fe_eq(it->second, c)) return false;
    ++it;
  }
  return true;
}

// ---- Algebra ----------------------------------------------------------------

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)) {
  sigma_ = to_alpha(spec_.gamma.sigma_coords());
  delta_ = to_alpha(spec_.gamma.delta_coords());
  for (int p = 1; p <= 4; ++p) {
    auto& proj = basis_proj_[static_cast<std::size_t>(p - 1)];
    bool all_rational = true;
    for (const auto& b : spec_.gamma.basis()) {
      proj.push_back(b.at(p));
      all_rational = all_rational && b.at(p).is_rational();
    }
    if (all_rational) {
      std::vector<Rational> q;
      for (const auto& x : proj) q.push_back(x.rational_value());
      basis_proj_q_[static_cast<std::size_t>(p - 1)] = std::move(q);
    }
  }
}

FieldElement Algebra::projection(const AlphaVec& alpha, int p) const {
  const auto idx = static_cast<std::size_t>(p - 1);
  if (const auto& q = basis_proj_q_[idx]) {
    Rational s = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] != 0 && (*q)[j] != 0) s += (*q)[j] * alpha[j];
    }
    return FieldElement(std::move(s));
  }
  FieldElement s;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0) s += FieldElement(static_cast<long>(alpha[j])) * basis_proj_[idx][j];
  }
  return s;
}

std::array<FieldElement, 4> Algebra::projections(const AlphaVec& alpha) const {
  return {projection(alpha, 1), projection(alpha, 2), projection(alpha, 3), projection(alpha, 4)};
}

GroupVector Algebra::vector(const AlphaVec& alpha) const {
  GroupVector v;
  v.coords = projections(alpha);
  return v;
}

std::optional<AlphaVec> Algebra::coords(const GroupVector& v) const {
  auto c = spec_.gamma.coordinates_of(v);
  if (!c) return std::nullopt;
  return to_alpha(*c);
}

bool Algebra::allowed(const TExps& i) const {
  for (int p = 1; p <= 4; ++p) {
    if (i[static_cast<std::size_t>(p - 1)] != 0 && !spec_.j.n(p)) return false;
  }
  return true;
}

void Algebra::insert(AlgebraElement& u, const Monomial& m, const FieldElement& c) const {
  if (allowed(m.i)) u.add(m, c);
}

AlgebraElement Algebra::one() const { return x(zero_alpha()); }

AlgebraElement Algebra::x(const AlphaVec& alpha, const TExps& i, const FieldElement& c) const {
  if (alpha.size() != rank()) {
    throw ArityError("expected " + std::to_string(rank()) + " Gamma coordinates, got " +
                     std::to_string(alpha.size()));
  }
  if (!allowed(i)) throw JViolation("t exponent outside J = " + spec_.j.to_string());
  AlgebraElement u;
  u.add(Monomial{alpha, i}, c);
  return u;
}

AlgebraElement Algebra::t(int p, std::uint32_t power) const {
  TExps i{};
  i[static_cast<std::size_t>(p - 1)] = power;
  return x(zero_alpha(), i);
}

// ---- products and derivations -----------------------------------------------

AlgebraElement elem_mul(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement r;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      Monomial m{m1.alpha + m2.alpha, {}};
      for (std::size_t p = 0; p < 4; ++p) m.i[p] = m1.i[p] + m2.i[p];
      alg.insert(r, m, c1 * c2);
    }
  }
  return r;
}

AlgebraElement derive(const Algebra& alg, int p, const AlgebraElement& u) {
  const auto idx = static_cast<std::size_t>(p - 1);
  AlgebraElement r;
  for (const auto& [m, c] : u.terms()) {
    FieldElement ap = alg.projection(m.alpha, p);
    if (!ap.is_zero()) alg.insert(r, m, ap * c);
    if (m.i[idx] != 0) {
      Monomial lower = m;
      lower.i[idx] -= 1;
      alg.insert(r, lower, FieldElement(static_cast<long>(m.i[idx])) * c);
    }
  }
  return r;
}

namespace {

struct TermView {
  const Monomial* m;
  const FieldElement* c;
  std::array<FieldElement, 4> proj;
  std::array<FieldElement, 4> iv;
};

std::vector<TermView> views(const Algebra& alg, const AlgebraElement& u) {
  std::vector<TermView> out;
  out.reserve(u.size());
  for (const auto& [m, c] : u.terms()) {
    TermView t{&m, &c, alg.projections(m.alpha), {}};
    for (std::size_t p = 0; p < 4; ++p) t.iv[p] = FieldElement(static_cast<long>(m.i[p]));
    out.push_back(std::move(t));
  }
  return out;
}

// Adds coef * x^{alpha, I - dec} when the shifted exponent stays in N^4.
void emit(const Algebra& alg, AlgebraElement& r, const AlphaVec& alpha, const TExps& total,
          const TExps& dec, const FieldElement& coef) {
  if (coef.is_zero()) return;
  Monomial m{alpha, total};
  for (std::size_t p = 0; p < 4; ++p) {
    if (m.i[p] < dec[p]) return;
    m.i[p] -= dec[p];
  }
  alg.insert(r, m, coef);
}

AlgebraElement bracket_expanded(const Algebra& alg, const AlgebraElement& u,
                                const AlgebraElement& v) {
  AlgebraElement r;
  if (u.is_zero() || v.is_zero()) return r;
  const auto vu = views(alg, u);
  const auto vv = views(alg, v);
  for (const auto& s : vu) {
    const auto& a = s.proj;
    const auto& ii = s.iv;
    for (const auto& t : vv) {
      const auto& b = t.proj;
      const auto& jj = t.iv;
      const FieldElement cc = *s.c * *t.c;
      const AlphaVec z = s.m->alpha + t.m->alpha;
      const AlphaVec zs = z + alg.sigma();
      const AlphaVec zd = z + alg.delta();
      TExps total{};
      for (std::size_t p = 0; p < 4; ++p) total[p] = s.m->i[p] + t.m->i[p];

      auto term = [&](const AlphaVec& alpha, const TExps& dec, const FieldElement& k) {
        if (!k.is_zero()) emit(alg, r, alpha, total, dec, k * cc);
      };
      term(zs, {0, 0, 0, 0}, a[0] * b[1] - b[0] * a[1]);
      term(zs, {0, 1, 0, 0}, a[0] * jj[1] - b[0] * ii[1]);
      term(zs, {1, 0, 0, 0}, ii[0] * b[1] - jj[0] * a[1]);
      term(zs, {1, 1, 0, 0}, ii[0] * jj[1] - jj[0] * ii[1]);
      term(zd, {0, 0, 0, 0}, a[2] * b[3] - b[2] * a[3]);
      term(zd, {0, 0, 0, 1}, a[2] * jj[3] - b[2] * ii[3]);
      term(zd, {0, 0, 1, 0}, ii[2] * b[3] - jj[2] * a[3]);
      term(zd, {0, 0, 1, 1}, ii[2] * jj[3] - jj[2] * ii[3]);
      term(z, {0, 0, 0, 0}, b[3] - a[3]);
      term(z, {0, 0, 0, 1}, jj[3] - ii[3]);
    }
  }
  return r;
}

AlgebraElement bracket_definition(const Algebra& alg, const AlgebraElement& u,
                                  const AlgebraElement& v) {
  const AlgebraElement xs = alg.x(alg.sigma());
  const AlgebraElement xd = alg.x(alg.delta());
  const AlgebraElement u1 = derive(alg, 1, u), u2 = derive(alg, 2, u);
  const AlgebraElement u3 = derive(alg, 3, u), u4 = derive(alg, 4, u);
  const AlgebraElement v1 = derive(alg, 1, v), v2 = derive(alg, 2, v);
  const AlgebraElement v3 = derive(alg, 3, v), v4 = derive(alg, 4, v);
  AlgebraElement r = elem_mul(alg, xs, elem_mul(alg, u1, v2) - elem_mul(alg, v1, u2));
  r += elem_mul(alg, elem_mul(alg, xd, u3) + u, v4);
  r -= elem_mul(alg, u4, elem_mul(alg, xd, v3) + v);
  return r;
}

}  // namespace

AlgebraElement bracket(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v,
                       BracketPath path) {
  if (u.is_zero() || v.is_zero()) return {};
  return path == BracketPath::expanded ? bracket_expanded(alg, u, v)
                                       : bracket_definition(alg, u, v);
}

AlgebraElement odot(const Algebra& alg, int p, const AlgebraElement& u, const AlgebraElement& v) {
  if (p == 1) {
    return elem_mul(alg, alg.x(alg.sigma()), elem_mul(alg, derive(alg, 1, u), derive(alg, 2, v)));
  }
  if (p == 2) {
    AlgebraElement left = elem_mul(alg, alg.x(alg.delta()), derive(alg, 3, u)) + u;
    return elem_mul(alg, left, derive(alg, 4, v));
  }
  throw std::invalid_argument("odot index must be 1 or 2");
}

AlgebraElement partial_bracket(const Algebra& alg, int p, const AlgebraElement& u,
                               const AlgebraElement& v) {
  return odot(alg, p, u, v) - odot(alg, p, v, u);
}

// ---- eigen-splitting ----------------------------------------------------------

std::vector<std::pair<FieldElement, AlgebraElement>> eigendecompose(const Algebra& alg,
                                                                    const AlgebraElement& u,
                                                                    EigenMode mode) {
  std::vector<std::pair<FieldElement, AlgebraElement>> out;
  for (const auto& [m, c] : u.terms()) {
    FieldElement key;
    if (mode == EigenMode::ad1) {
      key = alg.projection(m.alpha, 4);
    } else {
      if (!alg.projection(m.alpha, 4).is_zero() || m.i[3] != 0) {
        throw PreconditionViolated("ad_{x^-sigma} splitting needs alpha_4 = i_4 = 0 on every term");
      }
      key = -alg.projection(m.alpha, 2);
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return fe_eq(e.first, key); });
    if (it == out.end()) {
      out.emplace_back(key, AlgebraElement{});
      it = std::prev(out.end());
    }
    it->second.add(m, c);
  }
  return out;
}

// ---- derived subalgebra -------------------------------------------------------

AlgebraElement constrained_generator(const Algebra& alg, const Monomial& base) {
  AlgebraElement r;
  const AlphaVec up = base.alpha + alg.delta();
  alg.insert(r, Monomial{up, base.i}, alg.projection(base.alpha, 3));
  if (base.i[2] != 0) {
    TExps lower = base.i;
    lower[2] -= 1;
    alg.insert(r, Monomial{up, lower}, FieldElement(static_cast<long>(base.i[2])));
  }
  alg.insert(r, base, FieldElement(2L));
  return r;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::optional<DerivedDecomposition> derived_decomposition(const Algebra& alg,
                                                          const AlgebraElement& u) {
  DerivedDecomposition out;
  const JPattern& j = alg.j();
  if (j.n(1) || j.n(2) || j.n(4)) {
    out.free = u;
    return out;
  }
  const AlphaVec& d = alg.delta();
  std::size_t lead = 0;
  while (lead < d.size() && d[lead] == 0) ++lead;

  // orbit representative -> (shift k -> (i3 -> coefficient))
  std::map<AlphaVec, std::map<std::int64_t, std::map<std::uint32_t, FieldElement>>> orbits;
  for (const auto& [m, c] : u.terms()) {
    const auto pr = alg.projections(m.alpha);
    const bool constrained = pr[1].is_zero() && pr[3].is_zero() && pr[0].is_one();
    if (!constrained) {
      out.free.add(m, c);
      continue;
    }
    const std::int64_t k = floor_div(m.alpha[lead], d[lead]);
    orbits[m.alpha - scaled(d, k)][k][m.i[2]] = c;
  }

  const FieldElement& d3 = alg.delta3();
  for (const auto& [rep, by_k] : orbits) {
    const std::int64_t kmin = by_k.begin()->first;
    const std::int64_t kmax = by_k.rbegin()->first;
    std::uint32_t max_i = 0;
    for (const auto& [k, levels] : by_k) max_i = std::max(max_i, levels.rbegin()->first);
    const FieldElement g3 = alg.projection(rep, 3);
    std::int64_t upper = kmax + 1;
    FieldElement kstar = -g3 / d3;
    if (auto ks = kstar.integer_value(); ks && ks->fits_slong_p()) {
      upper = std::max(upper, ks->get_si() + 1);
    }
    std::vector<FieldElement> prev(max_i + 2);
    bool closed = false;
    for (std::int64_t k = kmin; k <= upper; ++k) {
      std::vector<FieldElement> cur(max_i + 2);
      const FieldElement gprev3 = g3 + FieldElement(static_cast<long>(k - 1)) * d3;
      auto wk = by_k.find(k);
      bool all_zero = true;
      for (std::uint32_t i = 0; i <= max_i; ++i) {
        FieldElement w;
        if (wk != by_k.end()) {
          if (auto it = wk->second.find(i); it != wk->second.end()) w = it->second;
        }
        FieldElement val = w - gprev3 * prev[i] - FieldElement(static_cast<long>(i + 1)) * prev[i + 1];
        val *= FieldElement::rational(1, 2);
        if (!val.is_zero()) {
          all_zero = false;
          Monomial base{rep + scaled(d, k), {0, 0, i, 0}};
          out.constrained.push_back(ConstrainedTerm{std::move(base), val});
        }
        cur[i] = std::move(val);
      }
      if (k > kmax && all_zero) {
        closed = true;
        break;
      }
      prev = std::move(cur);
    }
    if (!closed) return std::nullopt;
  }
  return out;
}

bool derived_membership(const Algebra& alg, const AlgebraElement& u) {
  return derived_decomposition(alg, u).has_value();
}

// ---- ad-span probe --------------------------------------------------------------

std::vector<std::size_t> ad_span_probe(const Algebra& alg, const AlgebraElement& u,
                                       const AlgebraElement& v, std::size_t depth) {
  std::map<Monomial, AlgebraElement> rows;  // pivot = largest monomial
  auto absorb = [&](AlgebraElement w) {
    while (!w.is_zero()) {
      const auto& [lead, lc] = *w.terms().rbegin();
      auto it = rows.find(lead);
      if (it == rows.end()) {
        Monomial key = lead;
        rows.emplace(std::move(key), std::move(w));
        return;
      }
      // fraction-free: w <- p * w - lc * row, where p is the row's pivot coefficient
      const FieldElement p = it->second.terms().rbegin()->second;
      const FieldElement f = lc;
      AlgebraElement next = p * w;
      next -= f * it->second;
      w = std::move(next);
    }
  };
  std::vector<std::size_t> dims;
  AlgebraElement cur = v;
  for (std::size_t q = 0; q <= depth; ++q) {
    absorb(cur);
    dims.push_back(rows.size());
    if (q < depth) cur = bracket(alg, u, cur);
  }
  return dims;
}

}  // namespace blocklie
