#include "blocklie/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "blocklie/errors.hpp"

namespace blocklie {

namespace {

// Largest monomial dividing every term of both polynomials.
Exponents common_monomial(const Polynomial& a, const Polynomial& b) {
  bool first = true;
  Exponents m;
  for (const auto* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      if (first) {
        m = t.exps;
        first = false;
        continue;
      }
      if (t.exps.size() < m.size()) m.resize(t.exps.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
    }
  }
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

Polynomial divide_monomial(const Polynomial& p, const Exponents& m) {
  std::vector<PolyTerm> terms = p.terms();
  for (auto& t : terms) {
    for (std::size_t i = 0; i < m.size(); ++i) t.exps[i] -= m[i];
  }
  return Polynomial::from_terms(std::move(terms));
}

// Factor making p a primitive integer polynomial with positive leading coefficient.
Rational primitive_scale(const Polynomial& p) {
  Integer g = 0, l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (p.leading().coef < 0) s = -s;
  return s;
}

}  // namespace

FieldElement::FieldElement(Polynomial p) {
  if (p.is_constant()) {
    q_ = p.constant_value();
  } else {
    rational_ = false;
    num_ = std::move(p);
    den_ = Polynomial(1L);
  }
}

FieldElement FieldElement::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  return FieldElement(q);
}

FieldElement FieldElement::indeterminate(std::string_view name) {
  return FieldElement(Polynomial::variable(name));
}

FieldElement FieldElement::fraction(Polynomial num, Polynomial den) {
  FieldElement r = unreduced(std::move(num), std::move(den));
  r.normalize();
  return r;
}

FieldElement FieldElement::unreduced(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  FieldElement r;
  if (num.is_constant() && den.is_constant()) {
    r.q_ = num.constant_value() / den.constant_value();
    return r;
  }
  r.rational_ = false;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

const Rational& FieldElement::rational_value() const {
  if (!rational_) throw std::logic_error("rational_value of a non-rational element");
  return q_;
}

std::optional<Integer> FieldElement::integer_value() const {
  if (!rational_ || q_.get_den() != 1) return std::nullopt;
  return q_.get_num();
}

Polynomial FieldElement::numerator() const { return rational_ ? Polynomial(q_) : num_; }

Polynomial FieldElement::denominator() const { return rational_ ? Polynomial(1L) : den_; }

void FieldElement::demote_if_rational() {
  if (rational_) return;
  if (num_.is_constant() && den_.is_constant()) {
    q_ = num_.constant_value() / den_.constant_value();
    rational_ = true;
    num_ = Polynomial();
    den_ = Polynomial();
  }
}

void FieldElement::normalize() {
  if (rational_) return;
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    *this = FieldElement();
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.constant_value();
    den_ = Polynomial(1L);
    demote_if_rational();
    return;
  }
  Exponents m = common_monomial(num_, den_);
  if (!m.empty()) {
    num_ = divide_monomial(num_, m);
    den_ = divide_monomial(den_, m);
  }
  if (!den_.is_constant()) {
    if (auto q = Polynomial::divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = Polynomial(1L);
    } else if (auto g = univariate_gcd(num_, den_); g && !g->is_constant()) {
      num_ = *Polynomial::divide_exact(num_, *g);
      den_ = *Polynomial::divide_exact(den_, *g);
    } else if (!num_.is_constant()) {
      if (auto r = Polynomial::divide_exact(den_, num_)) {
        num_ = Polynomial(1L);
        den_ = std::move(*r);
      }
    }
  }
  const Rational s = primitive_scale(den_);
  num_ *= s;
  den_ *= s;
  demote_if_rational();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (r.rational_) r.q_ = -r.q_;
  else r.num_ = -r.num_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (rational_ && o.rational_) {
    q_ += o.q_;
    return *this;
  }
  if (o.is_zero()) return *this;
  Polynomial n, d;
  if (!rational_ && !o.rational_ && den_ == o.den_) {
    n = num_ + o.num_;
    d = den_;
  } else {
    n = numerator() * o.denominator() + o.numerator() * denominator();
    d = denominator() * o.denominator();
  }
  *this = fraction(std::move(n), std::move(d));
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (rational_ && o.rational_) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = FieldElement();
    return *this;
  }
  if (o.rational_) {
    num_ *= o.q_;
    return *this;
  }
  if (rational_) {
    const Rational c = q_;
    *this = o;
    num_ *= c;
    return *this;
  }
  *this = fraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  if (rational_) return FieldElement(Rational(1) / q_);
  return fraction(den_, num_);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (rational_) {
    Rational r = 1;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return FieldElement(r);
  }
  const auto ue = static_cast<unsigned>(e);
  return fraction(num_.pow(ue), den_.pow(ue));
}

bool operator==(const FieldElement& a, const FieldElement& b) { return fe_eq(a, b); }

bool FieldElement::needs_parens() const {
  if (rational_) return false;
  if (!den_.is_constant()) return true;
  return num_.terms().size() > 1;
}

std::string FieldElement::to_string() const {
  if (rational_) return q_.get_str();
  std::string n = num_.to_string();
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

FieldElement fe_arith(ArithKind kind, const FieldElement& x, const FieldElement& y) {
  switch (kind) {
    case ArithKind::add: return x + y;
    case ArithKind::sub: return x - y;
    case ArithKind::mul: return x * y;
    case ArithKind::div:
      if (y.is_zero()) throw DivisionByZero("division by zero");
      return x / y;
  }
  throw std::logic_error("unknown arithmetic kind");
}

bool fe_eq(const FieldElement& x, const FieldElement& y) {
  if (x.is_rational() && y.is_rational()) return x.rational_value() == y.rational_value();
  return x.numerator() * y.denominator() == y.numerator() * x.denominator();
}

FieldElement fe_reduce(const FieldElement& x) {
  FieldElement r = x;
  r.normalize();
  return r;
}

std::optional<FieldElement> exact_root(const FieldElement& x, unsigned e) {
  if (x.is_rational()) {
    auto r = exact_root(x.rational_value(), e);
    if (!r) return std::nullopt;
    return FieldElement(*r);
  }
  const FieldElement n = fe_reduce(x);
  auto rn = exact_root(n.numerator(), e);
  if (!rn) return std::nullopt;
  auto rd = exact_root(n.denominator(), e);
  if (!rd) return std::nullopt;
  FieldElement r = FieldElement::fraction(*rn, *rd);
  if (!fe_eq(r.pow(e), x)) return std::nullopt;
  return r;
}

}  // namespace blocklie
