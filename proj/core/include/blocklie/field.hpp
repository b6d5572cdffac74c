#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blocklie/polynomial.hpp"

namespace blocklie {

/// Element of Q(z1,...,zk): a quotient of polynomials in named
/// indeterminates. Rational values take a fast path that never touches the
/// polynomial representation.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT
  explicit FieldElement(Polynomial p);

  static FieldElement rational(long num, long den);
  static FieldElement indeterminate(std::string_view name);
  /// num/den, normalized (sign, content and opportunistic cancellation).
  static FieldElement fraction(Polynomial num, Polynomial den);
  /// num/den with only the zero-denominator check; used to exercise
  /// equality on non-normalized representatives.
  static FieldElement unreduced(Polynomial num, Polynomial den);

  bool is_zero() const noexcept { return rational_ ? sgn(q_) == 0 : num_.is_zero(); }
  bool is_one() const noexcept { return rational_ && q_ == 1; }
  bool is_rational() const noexcept { return rational_; }
  /// Precondition: is_rational().
  const Rational& rational_value() const;
  std::optional<Integer> integer_value() const;

  Polynomial numerator() const;
  Polynomial denominator() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement pow(long e) const;
  FieldElement inverse() const;

  /// Cross-multiplication equality; independent of normalization.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Rendering in the scalar grammar; parse_scalar(to_string()) == *this.
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a factor.
  bool needs_parens() const;

 private:
  friend FieldElement fe_reduce(const FieldElement& x);
  void normalize();
  void demote_if_rational();

  bool rational_ = true;
  Rational q_;
  Polynomial num_;
  Polynomial den_;
};

enum class ArithKind { add, sub, mul, div };

FieldElement fe_arith(ArithKind kind, const FieldElement& x, const FieldElement& y);
bool fe_eq(const FieldElement& x, const FieldElement& y);
/// Cancels common factors when one is found cheaply; result is fe_eq to x.
FieldElement fe_reduce(const FieldElement& x);

/// Exact e-th root in the field, nullopt if none exists.
std::optional<FieldElement> exact_root(const FieldElement& x, unsigned e);

/// Parses the scalar grammar. When `allowed` is non-null, identifiers must be
/// listed there.
FieldElement parse_scalar(std::string_view text,
                          const std::vector<std::string>* allowed = nullptr);

namespace detail {
/// Parses a product of scalar factors starting at `pos`, stopping before
/// '+', '-', end of input, or an element-grammar monomial token ("x{", "t1".."t4").
/// Returns nullopt (pos unchanged) when no factor is present.
std::optional<FieldElement> parse_scalar_product(std::string_view text, std::size_t& pos,
                                                 const std::vector<std::string>* allowed);
void skip_space(std::string_view text, std::size_t& pos);
/// True when `text` at `pos` starts a monomial token of the element grammar.
bool at_monomial_token(std::string_view text, std::size_t pos);
}  // namespace detail

}  // namespace blocklie
