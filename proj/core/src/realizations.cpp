#include "blocklie/realizations.hpp"

#include <sstream>

#include "blocklie/element_io.hpp"
#include "blocklie/errors.hpp"
#include "blocklie/sampling.hpp"

namespace blocklie {

std::size_t Signature::index(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return k;
  }
  throw SignatureMismatch("variable " + name + " is not in the signature");
}

LaurentElement LaurentElement::monomial(const Signature& sig, Exps e, const FieldElement& c) {
  if (e.size() != sig.size()) throw SignatureMismatch("exponent vector has the wrong length");
  LaurentElement r(sig);
  r.add(e, c);
  return r;
}

LaurentElement LaurentElement::variable(const Signature& sig, const std::string& name,
                                        std::int64_t power) {
  Exps e(sig.size(), 0);
  e[sig.index(name)] = power;
  return monomial(sig, std::move(e));
}

LaurentElement LaurentElement::constant(const Signature& sig, const FieldElement& c) {
  return monomial(sig, Exps(sig.size(), 0), c);
}

void LaurentElement::add(const Exps& e, const FieldElement& c) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (sig_.kinds[k] == VarKind::polynomial && e[k] < 0) {
      throw SignatureMismatch("negative exponent on polynomial variable " + sig_.names[k]);
    }
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentElement LaurentElement::diff(std::size_t var) const {
  LaurentElement r(sig_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.add(d, FieldElement(Rational(static_cast<long>(e[var]))) * c);
  }
  return r;
}

void LaurentElement::require_same(const LaurentElement& o) const {
  if (!(sig_ == o.sig_)) throw SignatureMismatch("operands have different signatures");
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  a.require_same(b);
  LaurentElement r(a.sig_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentElement::Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add(e, ca * cb);
    }
  }
  return r;
}

LaurentElement operator*(const FieldElement& c, LaurentElement a) {
  if (c.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

bool operator==(const LaurentElement& a, const LaurentElement& b) {
  if (!(a.sig_ == b.sig_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || !fe_eq(c, it->second)) return false;
    ++it;
  }
  return true;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (c.needs_parens()) cs = "(" + cs + ")";
    bool unit = true;
    std::ostringstream mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!unit) mono << "*";
      unit = false;
      mono << sig_.names[k];
      if (e[k] != 1) mono << "^" << (e[k] < 0 ? "(" + std::to_string(e[k]) + ")" : std::to_string(e[k]));
    }
    if (unit) {
      os << cs;
    } else if (c.is_one()) {
      os << mono.str();
    } else {
      os << cs << "*" << mono.str();
    }
  }
  return os.str();
}

namespace {

Signature signature_for(int case_no) {
  using K = VarKind;
  switch (case_no) {
    case 1:
    case 3:
      return {{"x1", "x3", "t2", "t4"}, {K::laurent, K::laurent, K::polynomial, K::polynomial}};
    case 2:
      return {{"x1", "x2", "x3", "x4"}, {K::laurent, K::laurent, K::laurent, K::laurent}};
    case 4:
      return {{"x1", "x2", "x3", "x4", "t4"},
              {K::laurent, K::laurent, K::laurent, K::laurent, K::polynomial}};
    default:
      throw InvalidSpec("realization case must be 1..4");
  }
}

FieldElement ind(const char* name) { return FieldElement::indeterminate(name); }

}  // namespace

CaseData case_data(int case_no, long m) {
  if (m == 0) throw InvalidSpec("m must be nonzero");
  const FieldElement fm(m);
  using G = GroupVector;
  const FieldElement one(1L), zero(0L);
  switch (case_no) {
    case 1:
      return {{G::unit(1), G::unit(3)}, fm, JPattern::of(false, true, false, true), {}};
    case 2:
      return {{G::unit(1), G::unit(2), G::unit(3), G::unit(4)}, fm, JPattern{}, {}};
    case 3: {
      const FieldElement a = ind("a");
      return {{G::of(one, zero, one, zero), G::unit(3, a)}, a * fm,
              JPattern::of(false, true, false, true), {"a"}};
    }
    case 4: {
      const FieldElement a = ind("a"), b = ind("b"), c = ind("c");
      return {{G::of(one, zero, one, zero), G::of(zero, one, b, zero), G::unit(3, c),
               G::of(a, zero, zero, one)},
              c * fm,
              JPattern::of(false, false, false, true),
              {"a", "b", "c"}};
    }
    default:
      throw InvalidSpec("realization case must be 1..4");
  }
}

RealizationMap make_realization(int case_no, long m, Case4Reading reading) {
  CaseData data = case_data(case_no, m);
  auto check = validate_spec(data.generators, data.delta3, data.j);
  if (!check.valid()) throw InvalidSpec("case data rejected: " + check.violations.front());
  RealizationMap map{case_no, m, reading, signature_for(case_no), data.indeterminates,
                     *check.spec, {}, {}};
  for (std::size_t k = 0; k < map.signature.size(); ++k) {
    const std::string& name = map.signature.names[k];
    const int p = name[1] - '0';
    if (map.signature.kinds[k] == VarKind::polynomial) {
      map.t_indices.push_back(p);
    } else {
      // x_p is the p-th generator in cases 2 and 4; cases 1 and 3 list x1, x3.
      const std::size_t g = (case_no == 1 || case_no == 3) ? (p == 1 ? 0 : 1) : static_cast<std::size_t>(p - 1);
      map.identifications.push_back(data.generators[g]);
    }
  }
  return map;
}

LaurentElement concrete_bracket(int case_no, long m, const LaurentElement& f, const LaurentElement& g,
                                Case4Reading reading) {
  const Signature sig = signature_for(case_no);
  if (!(f.signature() == sig) || !(g.signature() == sig)) {
    throw SignatureMismatch("operands are not over the signature of case " + std::to_string(case_no));
  }
  auto v = [&](const char* name, std::int64_t power = 1) { return LaurentElement::variable(sig, name, power); };
  auto k = [&](const FieldElement& c) { return LaurentElement::constant(sig, c); };
  switch (case_no) {
    case 1: {
      const LaurentElement x3m1 = v("x3", m + 1);
      return v("x1", 2) * v("x3") * (f.diff("x1") * g.diff("t2") - f.diff("t2") * g.diff("x1")) +
             (x3m1 * f.diff("x3") + f) * g.diff("t4") - f.diff("t4") * (x3m1 * g.diff("x3") + g);
    }
    case 2: {
      const LaurentElement x3m1 = v("x3", m + 1);
      return v("x1", 2) * v("x2") * v("x3") * (f.diff("x1") * g.diff("x2") - f.diff("x2") * g.diff("x1")) +
             v("x4") * ((x3m1 * f.diff("x3") + f) * g.diff("x4") - f.diff("x4") * (x3m1 * g.diff("x3") + g));
    }
    case 3: {
      const LaurentElement x3m = v("x3", m);
      const LaurentElement a = k(ind("a"));
      auto e = [&](const LaurentElement& h) { return v("x1") * h.diff("x1") + a * v("x3") * h.diff("x3"); };
      return v("x1", 2) * (f.diff("x1") * g.diff("t2") - f.diff("t2") * g.diff("x1")) +
             (x3m * e(f) + f) * g.diff("t4") - f.diff("t4") * (x3m * e(g) + g);
    }
    case 4: {
      const LaurentElement x3m = v("x3", m);
      const LaurentElement a = k(ind("a")), b = k(ind("b")), c = k(ind("c"));
      auto d1 = [&](const LaurentElement& h) { return v("x1") * h.diff("x1") + a * v("x4") * h.diff("x4"); };
      auto d4 = [&](const LaurentElement& h) { return v("x4") * h.diff("x4") + h.diff("t4"); };
      auto d3 = [&](const LaurentElement& h1, const LaurentElement& h) {
        return v("x1") * h1.diff("x1") + b * v("x2") * h.diff("x2") + c * v("x3") * h.diff("x3");
      };
      const LaurentElement& last_x1 = reading == Case4Reading::printed ? f : g;
      return v("x1") * v("x2") * (d1(f) * g.diff("x2") - f.diff("x2") * d1(g)) +
             (x3m * d3(f, f) + f) * d4(g) - d4(f) * (x3m * d3(last_x1, g) + g);
    }
    default:
      throw InvalidSpec("realization case must be 1..4");
  }
}

LaurentElement realize(const RealizationMap& map, const Algebra& alg, const AlgebraElement& u) {
  const Subgroup ident(map.identifications);
  if (ident.rank() != map.identifications.size()) throw NotRepresentable("identifications are dependent");
  LaurentElement out(map.signature);
  for (const auto& [mono, c] : u.terms()) {
    auto coords = ident.coordinates_of(alg.vector(mono.alpha));
    if (!coords) throw NotRepresentable(print_monomial(mono) + " is outside the identification lattice");
    // independent generators are kept in input order, so basis j is identification j
    LaurentElement::Exps e(map.signature.size(), 0);
    std::size_t xi = 0, ti = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (map.signature.kinds[k] == VarKind::laurent) {
        e[k] = (*coords)[xi++].get_si();
      } else {
        e[k] = mono.i[static_cast<std::size_t>(map.t_indices[ti++] - 1)];
      }
    }
    for (int p = 1; p <= 4; ++p) {
      const bool has_t = std::find(map.t_indices.begin(), map.t_indices.end(), p) != map.t_indices.end();
      if (!has_t && mono.i[static_cast<std::size_t>(p - 1)] != 0) {
        throw NotRepresentable("t" + std::to_string(p) + " has no concrete counterpart");
      }
    }
    out.add(e, c);
  }
  return out;
}

CrosscheckReport crosscheck(const RealizationMap& map, std::size_t samples, std::uint64_t seed) {
  const Algebra alg(map.spec);
  CrosscheckReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler sampler(alg, sub_seed(seed, s), {}, map.indeterminates);
    const AlgebraElement u = sampler.derived_element();
    const AlgebraElement v = sampler.derived_element();
    const LaurentElement lhs = realize(map, alg, bracket(alg, u, v));
    const LaurentElement rhs = concrete_bracket(map.case_no, map.m, realize(map, alg, u),
                                                realize(map, alg, v), map.reading);
    if (!(lhs == rhs)) {
      rep.ok = false;
      rep.counterexample.emplace(u, v);
      rep.detail = "abstract " + lhs.to_string() + " vs concrete " + rhs.to_string();
      return rep;
    }
    ++rep.checked;
  }
  return rep;
}

}  // namespace blocklie
