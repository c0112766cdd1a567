/*
   Copyright 2026 The gwcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Text literals for fields, elements and polynomials.
//
//   field   := atom ( '[' ident ']' '/' '(' poly ')' )*
//   atom    := 'Q' | 'R' | 'C' | 'F(' p ')' | 'F(' p '^' m ')' | 'F(' q ')'
//            | 'Qp(' p ')'
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/')? factor)*       juxtaposition multiplies
//   factor  := '-' factor | primary ['^' ['-'] int]
//   primary := int | ident | '(' expr ')'
//
// Identifiers name the generators of the tower: the bracketed variable of each
// extension, "a" for F(p^m) and "i" for C. Inside an extension literal the
// freshly bracketed variable is the polynomial indeterminate.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gwcount/extension.hpp"
#include "gwcount/field.hpp"

namespace gwcount {

FieldPtr parse_field(std::string_view text);
Element parse_element(const FieldPtr& field, std::string_view text,
                      std::size_t offset = 0);
/// Polynomial over `field` in the indeterminate `variable`.
Polynomial parse_polynomial(const FieldPtr& field, std::string_view text,
                            const std::string& variable, std::size_t offset = 0);

// ===========================================================================

namespace detail {

class ExprParser {
 public:
  ExprParser(FieldPtr field, std::string_view text, std::string variable,
             std::size_t offset)
      : field_(std::move(field)),
        text_(text),
        variable_(std::move(variable)),
        offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, offset_ + pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial constant(const Element& e) const { return make_polynomial(field_, {e}); }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = scale(acc, -one(field_));
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (d.degree() != 0) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        acc = scale(acc, inverse(d.coeffs[0]));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (accept('-')) return scale(factor(), -one(field_));
    Polynomial base = primary();
    if (accept('^')) {
      bool negative = accept('-');
      skip_ws();
      const std::size_t at = pos_;
      Integer e = integer();
      if (negative) {
        if (base.degree() != 0) {
          pos_ = at;
          fail("negative power of a non-constant");
        }
        return constant(pow(base.coeffs[0], -e));
      }
      Polynomial r = make_polynomial(field_, {one(field_)});
      for (Integer k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(from_rational(field_, Rational(integer())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!variable_.empty() && name == variable_) {
        return monomial(field_, one(field_), 1);
      }
      for (const Field* f = field_.get(); f && !f->is_prime_layer(); f = f->base().get()) {
        if (f->generator_name() == name) {
          return constant(embed(generator(f->self()), field_));
        }
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldPtr field_;
  std::string_view text_;
  std::string variable_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

class FieldParser {
 public:
  explicit FieldParser(std::string_view text) : text_(text) {}

  FieldPtr parse() {
    FieldPtr f = atom();
    while (accept('[')) {
      const std::string var = ident();
      expect(']');
      expect('/');
      expect('(');
      const std::size_t start = pos_;
      const std::size_t close = matching_paren(start);
      Polynomial m = parse_polynomial(f, text_.substr(start, close - start), var, start);
      pos_ = close + 1;
      f = make_extension(f, m, var);
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters in field literal");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("expected an identifier");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t matching_paren(std::size_t from) const {
    int depth = 1;
    for (std::size_t i = from; i < text_.size(); ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced parentheses", from);
  }

  FieldPtr atom() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name == "Q") return rationals();
    if (name == "R") return reals();
    if (name == "C") return complexes();
    if (name == "Qp") {
      expect('(');
      Integer p = integer();
      expect(')');
      return padics(p);
    }
    if (name == "F") {
      expect('(');
      Integer p = integer();
      unsigned m = 1;
      if (accept('^')) m = static_cast<unsigned>(integer());
      expect(')');
      if (m == 1 && !is_probable_prime(p) && p > 1) {
        // F(q) with q a prime power.
        auto factors = factorize(p);
        if (factors.size() == 1) {
          m = static_cast<unsigned>(factors[0].second);
          p = factors[0].first;
        }
      }
      return finite_field(p, m);
    }
    pos_ = start;
    fail("unknown field '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FieldPtr parse_field(std::string_view text) {
  return detail::FieldParser(text).parse();
}

inline Polynomial parse_polynomial(const FieldPtr& field, std::string_view text,
                                   const std::string& variable, std::size_t offset) {
  return detail::ExprParser(field, text, variable, offset).parse_all();
}

inline Element parse_element(const FieldPtr& field, std::string_view text,
                             std::size_t offset) {
  Polynomial p = parse_polynomial(field, text, "", offset);
  return p.is_zero() ? zero(field) : p.coeffs[0];
}

}  // namespace gwcount
