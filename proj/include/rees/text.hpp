#ifndef REES_TEXT_HPP
#define REES_TEXT_HPP

// Polynomial text format.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | variable | '(' expr ')'
//
// Variables are the ring's names; x, y, z are accepted for T1, T2, T3 when the
// ring has no variables of those names. Adjacent variables need no separator
// ("s^2t" is s^2*t); the longest matching name wins.
//
// Printing is canonical: terms in descending grevlex order, "^" for powers,
// "*" between factors, unit coefficients omitted.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rees/poly.hpp"

namespace rees {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

template <class Field>
class Parser {
 public:
  Parser(std::string_view text, Ring<Field> ring, std::size_t line) : text_(text), ring_(std::move(ring)), line_(line) {
    for (std::size_t i = 0; i < ring_->size(); ++i) names_.emplace_back(ring_->name(i), i);
    const char* aliases[][2] = {{"x", "T1"}, {"y", "T2"}, {"z", "T3"}};
    for (auto& [alias, target] : aliases) {
      auto idx = ring_->index_of(target);
      if (idx && !ring_->index_of(alias)) names_.emplace_back(alias, *idx);
    }
  }

  Polynomial<Field> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty input");
    Polynomial<Field> p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial<Field> expr() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Polynomial<Field> acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_++] == '-';
      Polynomial<Field> t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial<Field> term() {
    Polynomial<Field> acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial<Field> factor() {
    Polynomial<Field> base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<Field> primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<Field> inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer(), den = 1;
      if (peek('/')) {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected denominator");
        std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial<Field>::constant(ring_, ring_->field().from_ratio(num, den));
      } catch (const DivisionByZero&) {
        fail("denominator vanishes in " + ring_->field().name());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t best = 0, index = 0;
      for (const auto& [name, idx] : names_) {
        if (name.size() > best && text_.substr(pos_, name.size()) == name) {
          best = name.size();
          index = idx;
        }
      }
      if (best == 0) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
        fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
      }
      pos_ += best;
      return Polynomial<Field>::variable(ring_, index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  Ring<Field> ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, std::size_t>> names_;
};

}  // namespace detail

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const Ring<Field>& ring, std::size_t line = 1) {
  return detail::Parser<Field>(text, ring, line).parse();
}

template <class Field>
std::string to_string(const Polynomial<Field>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff.is_negative();
    auto magnitude = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = magnitude.is_one();
    if (!unit || t.monomial.is_one()) out << magnitude.to_string();
    bool need_star = !unit;
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << p.ring()->name(i);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace rees

#endif  // REES_TEXT_HPP
