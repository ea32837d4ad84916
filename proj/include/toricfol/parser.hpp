#pragma once

// Text syntax for polynomials and degree classes.
//
//   poly  := ['-'] term (('+' | '-') term)*
//   term  := coef ['*' power ('*' power)*] | power ('*' power)*
//   coef  := integer ['/' integer]
//   power := name ['^' integer]
//
// Whitespace is insignificant. Decimal points and exponents are rejected.

#include "toricfol/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace toricfol {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error("column " + std::to_string(column) + ": " + message), column_(column), message_(message) {}
  /// 1-based column within the parsed text.
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p(names_.size());
    skip();
    if (at_end()) fail("empty polynomial expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail(std::string("expected '+' or '-' before '") + peek() + "'");
      }
      first = false;
      auto [m, c] = term();
      p.add_term(m, sign * c);
      skip();
    }
    return p;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      if (peek() == '.' || (pos_ + 1 < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) ||
                                                     s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')))
        fail("rational literals must be p/q", start);
    }
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1); }

 private:
  std::pair<Monomial, Rational> term() {
    Monomial m(names_.size());
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      Integer den = 1;
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) fail("zero denominator", at);
        skip();
      }
      c = Rational(num, den);
      c.canonicalize();
      if (at_end() || peek() != '*') return {m, c};
      ++pos_;
      skip();
    }
    for (;;) {
      power(m);
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip();
    }
    return {m, c};
  }

  void power(Monomial& m) {
    if (at_end()) fail("expected a variable name");
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail(std::string("unexpected character '") + peek() + "'");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    std::size_t idx = names_.size();
    for (std::size_t j = 0; j < names_.size(); ++j)
      if (names_[j] == name) idx = j;
    if (idx == names_.size()) fail("undeclared variable '" + name + "'", start);
    skip();
    std::uint32_t e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (!at_end() && peek() == '-') fail("exponents must be nonnegative integers", at);
      Integer v = integer();
      if (!v.fits_uint_p() || v > 1000000) fail("exponent too large", at);
      e = static_cast<std::uint32_t>(v.get_ui());
    }
    m[idx] += e;
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return detail::PolynomialParser(text, names).parse();
}

/// A single exact rational "p" or "p/q" (optionally signed).
inline Rational parse_rational(std::string_view text) {
  static const std::vector<std::string> none;
  detail::PolynomialParser p(text, none);
  p.skip();
  int sign = 1;
  if (!p.at_end() && (p.peek() == '-' || p.peek() == '+')) {
    sign = p.peek() == '-' ? -1 : 1;
    std::string rest(text.substr(p.pos() + 1));
    Rational v = parse_rational(rest);
    return sign * v;
  }
  Integer num = p.integer();
  Integer den = 1;
  p.skip();
  if (!p.at_end() && p.peek() == '/') {
    std::string rest(text.substr(p.pos() + 1));
    detail::PolynomialParser q(rest, none);
    q.skip();
    den = q.integer();
    q.skip();
    if (!q.at_end()) q.fail("unexpected trailing text");
    if (den == 0) throw ParseError("zero denominator", p.pos() + 2);
  } else if (!p.at_end()) {
    p.fail("unexpected trailing text");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// A signed integer literal.
inline Integer parse_integer(std::string_view text) {
  static const std::vector<std::string> none;
  detail::PolynomialParser p(text, none);
  p.skip();
  bool neg = false;
  if (!p.at_end() && (p.peek() == '-' || p.peek() == '+')) {
    neg = p.peek() == '-';
    std::string rest(text.substr(p.pos() + 1));
    Integer v = parse_integer(rest);
    return neg ? Integer(-v) : v;
  }
  Integer v = p.integer();
  p.skip();
  if (!p.at_end()) p.fail("unexpected trailing text");
  return v;
}

/// Comma separated integers, optionally wrapped in parentheses: "(2,-1)".
inline IntVector parse_integer_list(std::string_view text) {
  std::string s(text);
  auto l = s.find_first_not_of(" \t");
  auto r = s.find_last_not_of(" \t");
  if (l == std::string::npos) return {};
  s = s.substr(l, r - l + 1);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("missing ')'", s.size());
    s = s.substr(1, s.size() - 2);
  }
  IntVector out;
  std::size_t start = 0;
  for (;;) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_integer(item));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), start + e.column() + (text.size() != s.size() ? 1 : 0));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ParsedDegree {
  IntVector free_part;
  IntVector residues;
};

/// "(1,[2])", "(1,0)", "(3)": free coordinates followed by bracketed residues.
inline ParsedDegree parse_degree(std::string_view text) {
  std::string s(text);
  auto l = s.find_first_not_of(" \t");
  auto r = s.find_last_not_of(" \t");
  if (l == std::string::npos || s[l] != '(' || s[r] != ')')
    throw ParseError("degree must be written as (a,b,...,[t],...)", l == std::string::npos ? 1 : l + 1);
  std::string body = s.substr(l + 1, r - l - 1);
  ParsedDegree d;
  std::size_t start = 0;
  for (;;) {
    auto comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty degree entry", l + start + 2);
    item = item.substr(a, b - a + 1);
    try {
      if (item.front() == '[') {
        if (item.back() != ']') throw ParseError("missing ']'", item.size());
        d.residues.push_back(parse_integer(item.substr(1, item.size() - 2)));
      } else {
        if (!d.residues.empty()) throw ParseError("free coordinates must precede torsion residues", 1);
        d.free_part.push_back(parse_integer(item));
      }
    } catch (const ParseError& e) {
      throw ParseError(e.message(), l + start + a + 1 + e.column());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return d;
}

}  // namespace toricfol
