#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace blocklie {

using Rational = mpq_class;
using Integer = mpz_class;

/// Process-wide table of indeterminate names. Ids are handed out in order of
/// first use and never reused, so they can be stored in exponent vectors.
class VariableTable {
 public:
  static std::size_t intern(std::string_view name);
  static std::string name(std::size_t id);
  static std::optional<std::size_t> find(std::string_view name);
  static bool valid_name(std::string_view name);
};

/// Exponent vector indexed by variable id; trailing zeros are trimmed so
/// that equal monomials have equal representations.
using Exponents = boost::container::small_vector<std::uint32_t, 3>;

/// Graded lexicographic comparison: total degree first, then the exponent of
/// the lowest variable id. Returns <0, 0, >0.
int compare_graded_lex(const Exponents& a, const Exponents& b);

struct PolyTerm {
  Exponents exps;
  Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(std::size_t id, std::uint32_t power = 1);
  static Polynomial variable(std::string_view name, std::uint32_t power = 1);
  static Polynomial from_terms(std::vector<PolyTerm> terms);

  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;
  const PolyTerm& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  /// Ids of the variables that occur with positive exponent.
  std::vector<std::size_t> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Exact quotient if `den` divides `num`, nullopt otherwise.
  static std::optional<Polynomial> divide_exact(const Polynomial& num,
                                                const Polynomial& den);

  /// Rendering in the scalar literal grammar, e.g. "3*a^2 - 1".
  std::string to_string() const;

 private:
  std::vector<PolyTerm> terms_;
};

/// Exact e-th root when `p` is the e-th power of a polynomial with rational
/// coefficients (positive leading coefficient chosen), nullopt otherwise.
std::optional<Polynomial> exact_root(const Polynomial& p, unsigned e);

/// Exact e-th root of a rational number, nullopt if none exists in Q.
std::optional<Rational> exact_root(const Rational& q, unsigned e);

/// Monic gcd of two univariate polynomials in the same variable (constants
/// count as univariate). nullopt when the inputs are genuinely multivariate.
std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace blocklie
