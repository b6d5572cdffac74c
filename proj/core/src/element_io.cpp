#include "blocklie/element_io.hpp"

#include <cctype>
#include <sstream>

#include "blocklie/errors.hpp"

namespace blocklie {

namespace {

class ElementParser {
 public:
  ElementParser(const Algebra& alg, std::string_view text, const std::vector<std::string>* names)
      : alg_(alg), text_(text), names_(names) {}

  AlgebraElement parse() {
    AlgebraElement out;
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    term(out, negate);
    for (;;) {
      skip();
      if (pos_ >= text_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, "'+', '-' or end of input");
      ++pos_;
      term(out, c == '-');
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() { detail::skip_space(text_, pos_); }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string s(text_.substr(start, pos_ - start));
    if (s.size() > 15) throw SyntaxError(start, "coordinate of at most 15 characters");
    return std::stoll(s);
  }

  std::uint32_t natural() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "natural exponent");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string s(text_.substr(start, pos_ - start));
    if (s.size() > 6) throw SyntaxError(start, "exponent below 10^6");
    return static_cast<std::uint32_t>(std::stoul(s));
  }

  void term(AlgebraElement& out, bool negate) {
    skip();
    auto coef = detail::parse_scalar_product(text_, pos_, names_);
    skip();
    AlphaVec alpha = alg_.zero_alpha();
    TExps i{};
    bool have_monomial = false;
    if (peek() == 'x') {
      ++pos_;
      skip();
      if (peek() != '{') throw SyntaxError(pos_, "'{'");
      ++pos_;
      AlphaVec parsed;
      skip();
      if (peek() != '}') {
        parsed.push_back(integer());
        for (;;) {
          skip();
          if (peek() == ',') {
            ++pos_;
            parsed.push_back(integer());
            continue;
          }
          break;
        }
      }
      skip();
      if (peek() != '}') throw SyntaxError(pos_, "',' or '}'");
      ++pos_;
      if (parsed.size() != alg_.rank()) {
        throw ArityError("x{...} has " + std::to_string(parsed.size()) +
                         " coordinates but Gamma has rank " + std::to_string(alg_.rank()));
      }
      alpha = std::move(parsed);
      have_monomial = true;
    }
    for (;;) {
      skip();
      if (!detail::at_monomial_token(text_, pos_) || peek() != 't') break;
      const int p = text_[pos_ + 1] - '0';
      pos_ += 2;
      std::uint32_t e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        e = natural();
      }
      i[static_cast<std::size_t>(p - 1)] += e;
      have_monomial = true;
    }
    if (!coef && !have_monomial) throw SyntaxError(pos_, "scalar or monomial");
    FieldElement c = coef ? *coef : FieldElement(1L);
    if (negate) c = -c;
    out += alg_.x(alpha, i, c);
  }

  const Algebra& alg_;
  std::string_view text_;
  const std::vector<std::string>* names_;
  std::size_t pos_ = 0;
};

bool is_unit_monomial(const Monomial& m) {
  for (auto x : m.alpha) {
    if (x != 0) return false;
  }
  return m.i == TExps{};
}

bool negative_leading(const FieldElement& c) {
  if (c.is_rational()) return c.rational_value() < 0;
  return c.numerator().leading().coef < 0;
}

}  // namespace

AlgebraElement parse_element(const Algebra& alg, std::string_view text,
                             const std::vector<std::string>* indeterminates) {
  return ElementParser(alg, text, indeterminates).parse();
}

std::string print_monomial(const Monomial& m) {
  std::ostringstream os;
  bool any_alpha = false;
  for (auto x : m.alpha) any_alpha = any_alpha || x != 0;
  bool first = true;
  if (any_alpha) {
    os << "x{";
    for (std::size_t k = 0; k < m.alpha.size(); ++k) {
      if (k) os << ",";
      os << m.alpha[k];
    }
    os << "}";
    first = false;
  }
  for (std::size_t p = 0; p < 4; ++p) {
    if (m.i[p] == 0) continue;
    if (!first) os << " ";
    os << "t" << (p + 1);
    if (m.i[p] != 1) os << "^" << m.i[p];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string print_element(const AlgebraElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c0] : u.terms()) {
    FieldElement c = c0;
    const bool neg = negative_leading(c);
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = is_unit_monomial(m);
    if (c.is_one()) {
      os << print_monomial(m);
      continue;
    }
    std::string cs = c.to_string();
    if (c.needs_parens()) cs = "(" + cs + ")";
    os << cs;
    if (!unit) os << " " << print_monomial(m);
  }
  return os.str();
}

}  // namespace blocklie
