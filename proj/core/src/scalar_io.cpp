#include <algorithm>
#include <cctype>

#include "blocklie/errors.hpp"
#include "blocklie/field.hpp"

namespace blocklie {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ScalarParser {
 public:
  ScalarParser(std::string_view text, std::size_t& pos, const std::vector<std::string>* allowed)
      : text_(text), pos_(pos), allowed_(allowed) {}

  FieldElement expr() {
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    auto first = product();
    if (!first) throw SyntaxError(pos_, "number, identifier or '('");
    FieldElement acc = negate ? -*first : *first;
    for (;;) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      auto rhs = product();
      if (!rhs) throw SyntaxError(pos_, "number, identifier or '('");
      if (c == '+') acc += *rhs;
      else acc -= *rhs;
    }
    return acc;
  }

  std::optional<FieldElement> product() {
    skip();
    auto acc = factor();
    if (!acc) return std::nullopt;
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        auto rhs = factor();
        if (!rhs) throw SyntaxError(pos_, "number, identifier or '('");
        if (c == '*') {
          *acc *= *rhs;
        } else {
          if (rhs->is_zero()) throw DivisionByZero("division by zero in scalar literal");
          *acc /= *rhs;
        }
        continue;
      }
      auto rhs = factor();
      if (!rhs) break;
      *acc *= *rhs;
    }
    return acc;
  }

  void skip() { detail::skip_space(text_, pos_); }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::uint32_t natural() {
    skip();
    if (!is_digit(peek())) throw SyntaxError(pos_, "natural exponent");
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) throw SyntaxError(start, "exponent below 10^6");
    return static_cast<std::uint32_t>(std::stoul(digits));
  }

  std::uint32_t optional_power() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    return natural();
  }

  std::optional<FieldElement> factor() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    if (detail::at_monomial_token(text_, pos_)) return std::nullopt;
    const char c = peek();
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (is_digit(peek())) ++pos_;
      Integer n(std::string(text_.substr(start, pos_ - start)));
      FieldElement v{Rational(n)};
      return v.pow(optional_power());
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (allowed_ && std::find(allowed_->begin(), allowed_->end(), name) == allowed_->end()) {
        throw SyntaxError(start, "declared indeterminate (got '" + name + "')");
      }
      if (!VariableTable::valid_name(name)) throw SyntaxError(start, "indeterminate name");
      const std::uint32_t e = optional_power();
      return FieldElement(Polynomial::variable(name, e));
    }
    if (c == '(') {
      ++pos_;
      FieldElement inner = expr();
      skip();
      if (peek() != ')') throw SyntaxError(pos_, "')'");
      ++pos_;
      return inner.pow(optional_power());
    }
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t& pos_;
  const std::vector<std::string>* allowed_;
};

}  // namespace

namespace detail {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool at_monomial_token(std::string_view text, std::size_t pos) {
  auto ident_ends = [&](std::size_t p) { return p >= text.size() || !is_ident_char(text[p]); };
  if (text.substr(pos, 1) == "x") {
    std::size_t p = pos + 1;
    skip_space(text, p);
    if (p < text.size() && text[p] == '{') return true;
  }
  if (pos + 1 < text.size() && text[pos] == 't' && text[pos + 1] >= '1' && text[pos + 1] <= '4') {
    return ident_ends(pos + 2);
  }
  return false;
}

std::optional<FieldElement> parse_scalar_product(std::string_view text, std::size_t& pos,
                                                 const std::vector<std::string>* allowed) {
  const std::size_t start = pos;
  ScalarParser p(text, pos, allowed);
  auto r = p.product();
  if (!r) pos = start;
  return r;
}

}  // namespace detail

FieldElement parse_scalar(std::string_view text, const std::vector<std::string>* allowed) {
  std::size_t pos = 0;
  ScalarParser p(text, pos, allowed);
  FieldElement r = p.expr();
  p.skip();
  if (pos != text.size()) throw SyntaxError(pos, "end of scalar");
  return r;
}

}  // namespace blocklie
