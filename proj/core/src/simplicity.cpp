#include "blocklie/simplicity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blocklie/element_io.hpp"
#include "blocklie/errors.hpp"

namespace blocklie {

// ---- families and coefficient extraction ------------------------------------

namespace {

constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 40;

AlphaVec affine(const AlphaVec& base, const AlphaVec& stepv, std::int64_t k) {
  AlphaVec r(base);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += k * stepv[j];
  return r;
}

bool is_unit(const Monomial& m) {
  return std::all_of(m.alpha.begin(), m.alpha.end(), [](auto x) { return x == 0; }) &&
         m.i == TExps{};
}

}  // namespace

Monomial AffineBracketFamily::left_at(std::int64_t k) const {
  return Monomial{affine(left_base, left_step, k), left_i};
}

Monomial AffineBracketFamily::right_at(std::int64_t k) const {
  return Monomial{affine(right_base, right_step, k), right_i};
}

AlgebraElement AffineBracketFamily::evaluate(const Algebra& alg, std::int64_t k) const {
  const Monomial l = left_at(k);
  const Monomial r = right_at(k);
  return bracket(alg, alg.x(l.alpha, l.i), alg.x(r.alpha, r.i));
}

AlgebraElement coefficient_in_k(const std::function<AlgebraElement(std::int64_t)>& family,
                                std::size_t degree, std::size_t extract) {
  if (extract > degree) throw std::invalid_argument("extract exceeds degree");
  const std::size_t n = degree + 1;
  // Lagrange basis polynomials on nodes 0..degree, as coefficient vectors in k.
  std::vector<RatVec> basis(n, RatVec(n));
  for (std::size_t j = 0; j < n; ++j) {
    RatVec poly{Rational(1)};
    Rational denom = 1;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      RatVec next(poly.size() + 1);
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e + 1] += poly[e];
        next[e] -= poly[e] * static_cast<long>(m);
      }
      poly = std::move(next);
      denom *= static_cast<long>(j) - static_cast<long>(m);
    }
    for (std::size_t e = 0; e < n; ++e) basis[j][e] = poly[e] / denom;
  }
  std::vector<AlgebraElement> values;
  for (std::size_t k = 0; k < n; ++k) values.push_back(family(static_cast<std::int64_t>(k)));

  AlgebraElement extracted;
  AlgebraElement predicted;
  Rational check_point = static_cast<long>(n);
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement ce(basis[j][extract]);
    if (!ce.is_zero()) extracted += ce * values[j];
    Rational at = 0, pw = 1;
    for (std::size_t e = 0; e < n; ++e) {
      at += basis[j][e] * pw;
      pw *= check_point;
    }
    if (at != 0) predicted += FieldElement(at) * values[j];
  }
  const AlgebraElement actual = family(static_cast<std::int64_t>(n));
  if (!(predicted == actual)) {
    throw DegreeExceeded("family is not polynomial of degree " + std::to_string(degree) +
                         " in k (certification at k = " + std::to_string(n) + " failed)");
  }
  return extracted;
}

AlgebraElement coefficient_in_k(const Algebra& alg, const AffineBracketFamily& family,
                                std::size_t degree, std::size_t extract) {
  return coefficient_in_k([&](std::int64_t k) { return family.evaluate(alg, k); }, degree,
                          extract);
}

std::string step_kind(const TraceStep& s) {
  switch (s.index()) {
    case 0: return "ad";
    case 1: return "combine";
    case 2: return "coefficient_of_k";
    default: return "scale";
  }
}

// ---- shared certificate builder -----------------------------------------------

namespace {

class Builder {
 public:
  Builder(const Algebra& alg, AlgebraElement start, std::size_t limit)
      : alg_(alg), limit_(limit) {
    trace_.start = start;
    values_.push_back(std::move(start));
  }

  std::size_t last() const { return values_.size() - 1; }
  const AlgebraElement& value(std::size_t i) const { return values_[i]; }
  const AlgebraElement& current() const { return values_.back(); }
  ReductionTrace& trace() { return trace_; }

  std::size_t ad(const AlgebraElement& e, std::size_t source, Side side) {
    AlgebraElement r = side == Side::left ? bracket(alg_, e, values_[source])
                                          : bracket(alg_, values_[source], e);
    return push(step::AdBy{e, source, side}, std::move(r));
  }

  std::size_t combine(std::vector<std::pair<std::size_t, FieldElement>> terms) {
    AlgebraElement r;
    for (const auto& [idx, c] : terms) r += c * values_[idx];
    return push(step::LinearCombine{std::move(terms)}, std::move(r));
  }

  std::size_t coefficient(step::CoefficientOfK s) {
    AlgebraElement r = coefficient_in_k(alg_, s.family, s.degree, s.extract);
    return push(std::move(s), std::move(r));
  }

  std::size_t scale(const FieldElement& c) {
    AlgebraElement r = c * values_.back();
    return push(step::Scale{c}, std::move(r));
  }

 private:
  std::size_t push(TraceStep s, AlgebraElement r) {
    if (trace_.steps.size() >= limit_) {
      throw ReductionStuck("step limit " + std::to_string(limit_) + " reached");
    }
    for (const auto& [m, coef] : r.terms()) {
      for (const auto a : m.alpha) {
        if (a > kCoordinateBound || a < -kCoordinateBound) {
          throw ReductionStuck("lattice coordinates exceeded " + std::to_string(kCoordinateBound));
        }
      }
    }
    trace_.steps.push_back(std::move(s));
    values_.push_back(std::move(r));
    return last();
  }

  const Algebra& alg_;
  std::size_t limit_;
  ReductionTrace trace_;
  std::vector<AlgebraElement> values_;
};

// ---- reduction planner --------------------------------------------------------

class Planner {
 public:
  Planner(const Algebra& alg, const AlgebraElement& u, std::size_t limit)
      : alg_(alg), b_(alg, u, limit) {}

  ReductionTrace run() {
    if (!finished()) run_phases();
    if (!finished()) {
      throw ReductionStuck("planner ended without reaching a scalar; last element " +
                           print_element(b_.current()));
    }
    const FieldElement c = *b_.current().scalar_value();
    b_.scale(c.inverse());
    ReductionTrace t = std::move(b_.trace());
    t.result = alg_.one();
    t.route = route_;
    return t;
  }

 private:
  bool finished() const {
    auto s = b_.current().scalar_value();
    return s && !s->is_zero();
  }

  void check_nonzero() const {
    if (b_.current().is_zero()) {
      throw ReductionStuck("an intermediate vanished (route " + route_ + ")");
    }
  }

  bool ad(const AlgebraElement& e, Side side = Side::left) {
    b_.ad(e, b_.last(), side);
    check_nonzero();
    return finished();
  }

  // Applies (ad_e - mu) to the current element.
  bool shifted_ad(const AlgebraElement& e, const FieldElement& mu) {
    const std::size_t prev = b_.last();
    const std::size_t cur = b_.ad(e, prev, Side::left);
    if (!mu.is_zero()) b_.combine({{cur, FieldElement(1L)}, {prev, -mu}});
    check_nonzero();
    return finished();
  }

  const Monomial& first_term() const { return b_.current().terms().begin()->first; }

  // Isolates one generalized eigenspace of ad_e (eigenvalue of the smallest
  // monomial) and flattens its nilpotent part. `depth_index` is the t-index
  // whose exponent measures nilpotency.
  bool isolate(const AlgebraElement& e, EigenMode mode, std::size_t depth_index) {
    auto max_depth = [&](const AlgebraElement& w) {
      std::uint32_t m = 0;
      for (const auto& [mono, c] : w.terms()) m = std::max(m, mono.i[depth_index]);
      return m;
    };
    const auto comps = eigendecompose(alg_, b_.current(), mode);
    const FieldElement keep = mode == EigenMode::ad1
                                  ? alg_.projection(first_term().alpha, 4)
                                  : -alg_.projection(first_term().alpha, 2);
    for (const auto& [mu, comp] : comps) {
      if (fe_eq(mu, keep)) continue;
      const std::uint32_t m = max_depth(comp);
      for (std::uint32_t r = 0; r <= m; ++r) {
        if (shifted_ad(e, mu)) return true;
      }
    }
    const std::uint32_t m = max_depth(b_.current());
    for (std::uint32_t r = 0; r < m; ++r) {
      if (shifted_ad(e, keep)) return true;
    }
    return false;
  }

  bool is_s0() const {
    for (const auto& [m, c] : b_.current().terms()) {
      if (m.i[0] || m.i[1] || m.i[3]) return false;
      const auto p = alg_.projections(m.alpha);
      if (!p[0].is_zero() || !p[1].is_zero() || !p[3].is_zero()) return false;
    }
    return true;
  }

  // Brings every term to a common alpha_c with i_c = 0. Each step brackets
  // with a t-free representative of the group with the lowest t_c-degree, so
  // that group loses one degree (and vanishes after degree + 1 steps) while
  // no degree grows. With `reflect`, the representative alpha is replaced by
  // -2 alpha, which keeps the coordinates bounded in the first case.
  bool contract(int c, const TExps& pick_i, bool reflect) {
    const auto ci = static_cast<std::size_t>(c - 1);
    for (;;) {
      struct Group {
        FieldElement value;
        AlphaVec rep;
        std::uint32_t degree;
      };
      std::vector<Group> groups;
      for (const auto& [m, coef] : b_.current().terms()) {
        const FieldElement v = alg_.projection(m.alpha, c);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return fe_eq(g.value, v); });
        if (it == groups.end()) {
          groups.push_back(Group{v, m.alpha, m.i[ci]});
        } else {
          it->degree = std::max(it->degree, m.i[ci]);
        }
      }
      if (groups.size() == 1 && groups.front().degree == 0) return false;
      const Group* target = &groups.front();
      for (const auto& g : groups) {
        if (g.degree < target->degree) target = &g;
      }
      const AlphaVec a = reflect ? scaled(target->rep, -2) : target->rep;
      if (ad(alg_.x(a, pick_i))) return true;
    }
  }

  AlphaVec first_kernel_vector_with_pi2() const {
    const IntegerLattice ker = projection_kernel(alg_.gamma(), 4);
    for (const auto& row : ker.rows) {
      AlphaVec a = to_alpha(row);
      if (!alg_.projection(a, 2).is_zero()) return a;
    }
    throw ReductionStuck("no element of ker pi4 with nonzero pi2");
  }

  AlphaVec first_basis_vector_with_pi4() const {
    for (std::size_t j = 0; j < alg_.rank(); ++j) {
      AlphaVec e = alg_.zero_alpha();
      e[j] = 1;
      if (!alg_.projection(e, 4).is_zero()) return e;
    }
    throw ReductionStuck("pi4 vanishes on every basis vector");
  }

  void run_phases() {
    // ad_1 eigen-splitting and nilpotent flattening
    if (isolate(alg_.one(), EigenMode::ad1, 3)) return;
    const FieldElement lambda = alg_.projection(first_term().alpha, 4);
    if (!lambda.is_zero()) {
      route_ += "lambda;";
      bool moved = false;
      const AlgebraElement snapshot = b_.current();
      for (const auto& [m, c] : snapshot.terms()) {
        const AlgebraElement e = alg_.x(-m.alpha);
        if (bracket(alg_, e, snapshot).is_zero()) continue;
        if (ad(e)) return;
        moved = true;
        break;
      }
      if (!moved) throw ReductionStuck("every x^-beta candidate annihilates the element");
    }
    // ad_{x^-sigma} eigen-splitting
    if (isolate(alg_.x(-alg_.sigma()), EigenMode::adxminussigma, 1)) return;

    if (!is_s0()) {
      if (!alg_.gamma().group().projection_is_zero(2)) {
        route_ += "case1;";
        if (alg_.projection(first_term().alpha, 2).is_zero()) {
          if (ad(alg_.x(first_kernel_vector_with_pi2()))) return;
        }
        if (contract(1, {}, true)) return;
      } else {
        route_ += "case2;";
        if (ad(alg_.t(2, 2))) return;
        if (contract(1, {0, 1, 0, 0}, false)) return;
        if (fe_eq(alg_.projection(first_term().alpha, 1), FieldElement(-1L))) {
          if (ad(alg_.t(2))) return;
        }
      }
      const AlphaVec beta = first_term().alpha;
      if (ad(alg_.x(-beta - alg_.sigma()))) return;
    }

    if (!alg_.gamma().group().projection_is_zero(4)) {
      route_ += "subcase-i";
      if (ad(alg_.x(first_basis_vector_with_pi4()))) return;
      if (contract(3, {}, false)) return;
      const AlphaVec alpha = first_term().alpha;
      ad(alg_.x(-alpha));
    } else {
      route_ += "subcase-ii";
      if (ad(alg_.t(4, 2))) return;
      if (contract(3, {0, 0, 0, 1}, false)) return;
      const TExps t4{0, 0, 0, 1};
      AlphaVec alpha = first_term().alpha;
      const FieldElement twice = FieldElement(2L) * alg_.projection(alpha, 3) + alg_.delta3();
      if (twice.is_zero()) {
        if (ad(alg_.x(alg_.delta(), t4))) return;
        alpha = first_term().alpha;
      }
      if (ad(alg_.x(-alpha - alg_.delta(), t4))) return;
      ad(alg_.one());
    }
  }

  const Algebra& alg_;
  Builder b_;
  std::string route_;
};

// ---- saturation ----------------------------------------------------------------

class Saturator {
 public:
  explicit Saturator(const Algebra& alg) : alg_(alg), b_(alg, alg.one(), 100000) {}

  ReductionTrace run(const AlgebraElement& target) {
    auto dec = derived_decomposition(alg_, target);
    if (!dec) throw NotInDerived("target is not in the derived algebra");
    ReductionTrace out;
    if (target == alg_.one()) {
      out.start = alg_.one();
      out.result = target;
      out.route = "identity";
      return out;
    }
    std::vector<std::pair<std::size_t, FieldElement>> parts;
    for (const auto& [m, c] : dec->free.terms()) parts.emplace_back(monomial(m, 0), c);
    for (const auto& ct : dec->constrained) parts.emplace_back(constrained(ct.base), ct.coef);
    b_.combine(std::move(parts));
    out = std::move(b_.trace());
    out.result = target;
    out.route = "saturation";
    return out;
  }

 private:
  // Writes x^m from the derived intermediate v = values[idx] by subtracting
  // every other monomial of v (each derived recursively).
  std::size_t isolate(std::size_t idx, const Monomial& m, int depth) {
    const AlgebraElement v = b_.value(idx);
    const FieldElement c = v.coefficient(m);
    if (c.is_zero()) throw ReductionStuck("derivation step lost the target monomial " + print_monomial(m));
    const FieldElement inv = c.inverse();
    std::vector<std::pair<std::size_t, FieldElement>> parts{{idx, inv}};
    for (const auto& [other, oc] : v.terms()) {
      if (other == m) continue;
      parts.emplace_back(monomial(other, depth + 1), -(oc * inv));
    }
    return b_.combine(std::move(parts));
  }

  AlphaVec first_basis_vector_with_pi4() const {
    for (std::size_t j = 0; j < alg_.rank(); ++j) {
      AlphaVec e = alg_.zero_alpha();
      e[j] = 1;
      if (!alg_.projection(e, 4).is_zero()) return e;
    }
    throw ReductionStuck("pi4 vanishes on every basis vector");
  }

  AlphaVec first_kernel_vector_with_pi2() const {
    const IntegerLattice ker = projection_kernel(alg_.gamma(), 4);
    for (const auto& row : ker.rows) {
      AlphaVec a = to_alpha(row);
      if (!alg_.projection(a, 2).is_zero()) return a;
    }
    throw ReductionStuck("no element of ker pi4 with nonzero pi2");
  }

  std::size_t family(const AffineBracketFamily& fam, int depth) {
    step::CoefficientOfK s{fam, 1, 1, Side::left, {}};
    for (std::int64_t k = 0; k <= 2; ++k) s.sources.push_back(monomial(fam.left_at(k), depth + 1));
    return b_.coefficient(std::move(s));
  }

  std::size_t monomial(const Monomial& m, int depth) {
    if (depth > 64) throw ReductionStuck("saturation recursion too deep at " + print_monomial(m));
    if (is_unit(m)) return 0;
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::size_t idx;
    const FieldElement b4 = alg_.projection(m.alpha, 4);
    const JPattern& j = alg_.j();
    if (!b4.is_zero()) {
      idx = isolate(b_.ad(alg_.x(m.alpha, m.i), 0, Side::right), m, depth);
    } else if (j.n(4)) {
      TExps up = m.i;
      up[3] += 1;
      idx = isolate(b_.ad(alg_.x(m.alpha, up), 0, Side::right), m, depth);
    } else if (!alg_.projection(m.alpha, 2).is_zero() || j.n(2)) {
      const AlphaVec bp = first_basis_vector_with_pi4();
      TExps ri = m.i;
      if (alg_.projection(m.alpha, 2).is_zero()) ri[1] += 1;
      AffineBracketFamily fam{bp - alg_.sigma(), -alg_.sigma(), {},
                              m.alpha - bp,      alg_.sigma(),  ri};
      idx = isolate(family(fam, depth), m, depth);
    } else if (!fe_eq(alg_.projection(m.alpha, 1), FieldElement(1L)) || j.n(1)) {
      const AlphaVec g = first_kernel_vector_with_pi2();
      TExps ri = m.i;
      if (fe_eq(alg_.projection(m.alpha, 1), FieldElement(1L))) ri[0] += 1;
      AffineBracketFamily fam{g, g, {}, m.alpha - g - alg_.sigma(), -g, ri};
      idx = isolate(family(fam, depth), m, depth);
    } else {
      throw NotInDerived(print_monomial(m) + " alone is not in the derived algebra");
    }
    memo_.emplace(m, idx);
    return idx;
  }

  // gamma_3 x^{gamma+delta,i} + i_3 x^{gamma+delta,i-1_[3]} + 2 x^{gamma,i}
  std::size_t constrained(const Monomial& base) {
    const AlphaVec a = first_basis_vector_with_pi4();
    const std::size_t neg = monomial(Monomial{-a, {}}, 0);
    const std::size_t w = b_.ad(alg_.x(a + base.alpha, base.i), neg, Side::right);
    const FieldElement a4 = alg_.projection(a, 4);
    const AlgebraElement g = constrained_generator(alg_, base);
    const AlgebraElement rest = b_.value(w) - a4 * g;
    const FieldElement inv = a4.inverse();
    std::vector<std::pair<std::size_t, FieldElement>> parts{{w, inv}};
    for (const auto& [m, c] : rest.terms()) parts.emplace_back(monomial(m, 1), -(c * inv));
    return b_.combine(std::move(parts));
  }

  const Algebra& alg_;
  Builder b_;
  std::map<Monomial, std::size_t> memo_;
};

}  // namespace

ReductionTrace reduce_to_one(const Algebra& alg, const AlgebraElement& u,
                             const ReduceOptions& options) {
  if (u.is_zero()) throw ZeroInput("cannot reduce the zero element");
  if (!derived_membership(alg, u)) throw NotInDerived("element is not in the derived algebra");
  const std::size_t limit = options.max_steps ? options.max_steps : 10 * u.size() + 50;
  return Planner(alg, u, limit).run();
}

ReductionTrace saturate_from_one(const Algebra& alg, const AlgebraElement& target) {
  return Saturator(alg).run(target);
}

// ---- replay ----------------------------------------------------------------------

ReplayReport replay(const Algebra& alg, const ReductionTrace& trace) {
  ReplayReport rep;
  auto fail = [&](std::size_t n, const std::string& why) {
    rep.ok = false;
    rep.error = "step " + std::to_string(n) + ": " + why;
    return rep;
  };
  rep.intermediates.push_back(trace.start);
  for (std::size_t n = 0; n < trace.steps.size(); ++n) {
    const std::size_t have = rep.intermediates.size();
    AlgebraElement next;
    try {
      if (const auto* s = std::get_if<step::AdBy>(&trace.steps[n])) {
        if (s->source >= have) return fail(n + 1, "source index out of range");
        if (!derived_membership(alg, s->element)) {
          return fail(n + 1, "operand " + print_element(s->element) + " is not in the derived algebra");
        }
        const auto& src = rep.intermediates[s->source];
        next = s->side == Side::left ? bracket(alg, s->element, src) : bracket(alg, src, s->element);
      } else if (const auto* s = std::get_if<step::LinearCombine>(&trace.steps[n])) {
        for (const auto& [idx, c] : s->terms) {
          if (idx >= have) return fail(n + 1, "combination index out of range");
          next += c * rep.intermediates[idx];
        }
      } else if (const auto* s = std::get_if<step::CoefficientOfK>(&trace.steps[n])) {
        if (s->sources.size() != s->degree + 2) return fail(n + 1, "wrong number of sources");
        for (std::size_t k = 0; k < s->sources.size(); ++k) {
          const auto kk = static_cast<std::int64_t>(k);
          const Monomial ideal = s->ideal_side == Side::left ? s->family.left_at(kk) : s->family.right_at(kk);
          const Monomial other = s->ideal_side == Side::left ? s->family.right_at(kk) : s->family.left_at(kk);
          if (s->sources[k] >= have) return fail(n + 1, "source index out of range");
          if (!(rep.intermediates[s->sources[k]] == alg.x(ideal.alpha, ideal.i))) {
            return fail(n + 1, "source for k = " + std::to_string(k) + " is not the ideal operand");
          }
          if (!derived_membership(alg, alg.x(other.alpha, other.i))) {
            return fail(n + 1, "family operand at k = " + std::to_string(k) + " is not in the derived algebra");
          }
        }
        next = coefficient_in_k(alg, s->family, s->degree, s->extract);
      } else {
        const auto& sc = std::get<step::Scale>(trace.steps[n]);
        if (sc.c.is_zero()) return fail(n + 1, "scale by zero");
        next = sc.c * rep.intermediates.back();
      }
    } catch (const Error& e) {
      return fail(n + 1, e.what());
    }
    rep.intermediates.push_back(std::move(next));
  }
  if (!(rep.intermediates.back() == trace.result)) {
    rep.error = "final intermediate " + print_element(rep.intermediates.back()) +
                " differs from recorded result " + print_element(trace.result);
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace blocklie
