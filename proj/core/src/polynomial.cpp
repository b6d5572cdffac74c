#include "blocklie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "blocklie/errors.hpp"

namespace blocklie {

namespace {

struct TableState {
  std::shared_mutex mutex;
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> ids;
};

TableState& table() {
  static TableState state;
  return state;
}

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// a / b as monomials, nullopt if b does not divide a.
std::optional<Exponents> div_exps(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponents r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (r[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

std::uint32_t degree_of(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// Sort descending and merge equal monomials.
void canonicalize(std::vector<PolyTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return compare_graded_lex(a.exps, b.exps) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coef;
    while (j < terms.size() && compare_graded_lex(terms[j].exps, terms[i].exps) == 0) {
      c += terms[j].coef;
      ++j;
    }
    if (c != 0) {
      terms[out].exps = std::move(terms[i].exps);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

std::size_t VariableTable::intern(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  }
  if (!valid_name(name)) {
    throw ConfigError("invalid indeterminate name '" + std::string(name) + "'");
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  const std::size_t id = t.names.size();
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return id;
}

std::string VariableTable::name(std::size_t id) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.names.at(id);
}

std::optional<std::size_t> VariableTable::find(std::string_view name) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) return it->second;
  return std::nullopt;
}

bool VariableTable::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  // reserved by the element grammar
  if (name == "x") return false;
  if (name.size() == 2 && name[0] == 't' && name[1] >= '1' && name[1] <= '4') return false;
  return true;
}

int compare_graded_lex(const Exponents& a, const Exponents& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(PolyTerm{{}, c});
}

Polynomial Polynomial::variable(std::size_t id, std::uint32_t power) {
  Polynomial p;
  Exponents e(id + 1, 0);
  e[id] = power;
  trim(e);
  p.terms_.push_back(PolyTerm{std::move(e), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(std::string_view name, std::uint32_t power) {
  return variable(VariableTable::intern(name), power);
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms) {
  for (auto& t : terms) trim(t.exps);
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_[0].coef;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.front().exps);
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] != 0) out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<PolyTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = compare_graded_lex(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) out.push_back(PolyTerm{std::move(terms_[i].exps), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<PolyTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      out.push_back(PolyTerm{add_exps(x.exps, y.exps), x.coef * y.coef});
    }
  }
  canonicalize(out);
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coef != b.terms_[i].coef) return false;
    if (compare_graded_lex(a.terms_[i].exps, b.terms_[i].exps) != 0) return false;
  }
  return true;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& num,
                                                   const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.is_zero()) return Polynomial();
  if (den.is_constant()) return num * (Rational(1) / den.constant_value());
  Polynomial rem = num;
  std::vector<PolyTerm> quot;
  const PolyTerm& lead = den.leading();
  while (!rem.is_zero()) {
    const PolyTerm& r = rem.leading();
    auto m = div_exps(r.exps, lead.exps);
    if (!m) return std::nullopt;
    PolyTerm q{*m, r.coef / lead.coef};
    Polynomial step;
    step.terms_.push_back(q);
    rem -= step * den;
    quot.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quot));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (any) mono << "*";
      mono << VariableTable::name(v);
      if (t.exps[v] != 1) mono << "^" << t.exps[v];
      any = true;
    }
    if (!any) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

std::optional<Rational> exact_root(const Rational& q, unsigned e) {
  if (e == 0) throw std::invalid_argument("zeroth root");
  if (e == 1) return q;
  if (q == 0) return Rational(0);
  const bool negative = q < 0;
  if (negative && e % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::optional<Polynomial> exact_root(const Polynomial& p, unsigned e) {
  if (e == 0) throw std::invalid_argument("zeroth root");
  if (e == 1 || p.is_zero()) return p;
  if (p.is_constant()) {
    auto r = exact_root(p.constant_value(), e);
    if (!r) return std::nullopt;
    return Polynomial(*r);
  }
  const PolyTerm& lead = p.leading();
  Exponents root_exps;
  for (auto x : lead.exps) {
    if (x % e != 0) return std::nullopt;
    root_exps.push_back(x / e);
  }
  auto lc = exact_root(lead.coef, e);
  if (!lc) return std::nullopt;
  if (*lc < 0) *lc = -*lc;  // only possible for odd e with negative lead
  if (lead.coef < 0) *lc = -*lc;
  Polynomial root = Polynomial::from_terms({PolyTerm{root_exps, *lc}});
  // Newton-style term-by-term completion; each new term is strictly smaller
  // than the root's leading term, and there are finitely many such monomials.
  const Polynomial derivative_scale = root.pow(e - 1) * Rational(e);
  const PolyTerm& ds = derivative_scale.leading();
  for (std::size_t guard = 0; guard < 4096; ++guard) {
    Polynomial rem = p - root.pow(e);
    if (rem.is_zero()) return root;
    const PolyTerm& r = rem.leading();
    auto m = div_exps(r.exps, ds.exps);
    if (!m) return std::nullopt;
    if (compare_graded_lex(*m, root.leading().exps) >= 0) return std::nullopt;
    root += Polynomial::from_terms({PolyTerm{*m, r.coef / ds.coef}});
  }
  return std::nullopt;
}

namespace {

// Univariate view: variable id (or npos for constants).
std::optional<std::size_t> sole_variable(const Polynomial& p) {
  auto vars = p.variables();
  if (vars.empty()) return static_cast<std::size_t>(-1);
  if (vars.size() == 1) return vars[0];
  return std::nullopt;
}

// Remainder of a by b, both univariate in the same variable.
Polynomial univariate_rem(Polynomial a, const Polynomial& b) {
  const PolyTerm& lb = b.leading();
  while (!a.is_zero() && a.total_degree() >= b.total_degree()) {
    const PolyTerm& la = a.leading();
    auto m = div_exps(la.exps, lb.exps);
    if (!m) break;
    a -= Polynomial::from_terms({PolyTerm{*m, la.coef / lb.coef}}) * b;
  }
  return a;
}

}  // namespace

std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b) {
  auto va = sole_variable(a);
  auto vb = sole_variable(b);
  if (!va || !vb) return std::nullopt;
  const std::size_t npos = static_cast<std::size_t>(-1);
  if (*va != npos && *vb != npos && *va != *vb) {
    return Polynomial(Rational(1));
  }
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = univariate_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading().coef);
}

}  // namespace blocklie
