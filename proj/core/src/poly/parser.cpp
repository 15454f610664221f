#include "sdlab/poly/parser.hpp"

#include <cctype>

namespace sdlab::poly {

bool VariableDeclaration::declares(Variable v) const {
  const auto i = static_cast<int>(v.index());
  switch (v.block()) {
    case Block::X: return i >= 1 && i <= m;
    case Block::T: return i <= n;
    case Block::C: return i >= 1 && i <= c_max && static_cast<int>(v.sub_index()) < i;
  }
  return false;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableDeclaration& decl, const CoefficientMode& mode)
      : text_(text), decl_(decl), mode_(mode) {}

  Polynomial parse() {
    Polynomial result(mode_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = parse_term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError("syntax error: " + msg, pos_); }

  Integer parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_small_uint() {
    const std::size_t start = pos_;
    Integer v = parse_uint();
    if (v > 0x3fff) throw ParseError("index or exponent too large", start);
    return static_cast<std::uint32_t>(v.get_ui());
  }

  Monomial parse_var_pow() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    ++pos_;
    Variable v = Variable::X(0);
    const std::uint32_t i = parse_small_uint();
    if (c == 'X') {
      v = Variable::X(i);
    } else if (c == 'T') {
      v = Variable::T(i);
    } else if (c == 'C') {
      if (peek() != '_') fail("expected '_' in center variable");
      ++pos_;
      v = Variable::C(i, parse_small_uint());
    } else {
      pos_ = start;
      fail("expected variable");
    }
    if (!decl_.declares(v)) throw ParseError("undeclared variable " + v.to_string(), start);
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      e = parse_small_uint();
    }
    return Monomial::of(v, e);
  }

  Polynomial parse_term() {
    Scalar coeff = mode_.one();
    Monomial mono;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      Rational q(parse_uint());
      if (peek() == '/') {
        ++pos_;
        const Integer den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", start);
        q /= Rational(den);
      }
      try {
        coeff = mode_.from_rational(q);
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), start);
      }
    } else if (c == 'X' || c == 'T' || c == 'C') {
      mono = parse_var_pow();
    } else {
      fail("expected coefficient or variable");
    }
    while (peek() == '*') {
      ++pos_;
      mono = mono * parse_var_pow();
    }
    return Polynomial::term(mode_, coeff, mono);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const VariableDeclaration& decl_;
  const CoefficientMode& mode_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VariableDeclaration& decl, const CoefficientMode& mode) {
  return Parser(text, decl, mode).parse();
}

}  // namespace sdlab::poly
