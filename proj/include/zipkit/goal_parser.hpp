#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zipkit/formula.hpp"

namespace zipkit {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

namespace parse_detail {

enum class Tok { Ident, Meta, True, False, Amp, Pipe, Arrow, LParen, RParen, Comma, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word = take_word();
      if (word == "true") return {Tok::True, word, line, col};
      if (word == "false") return {Tok::False, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    switch (c) {
      case '?': {
        advance();
        if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
          throw ParseError(line, col, "expected a name after '?'");
        return {Tok::Meta, take_word(), line, col};
      }
      case '&': advance(); return {Tok::Amp, "&", line, col};
      case '|':
        advance();
        if (pos_ < src_.size() && src_[pos_] == '-') {
          advance();
          return {Tok::Turnstile, "|-", line, col};
        }
        return {Tok::Pipe, "|", line, col};
      case '-':
        advance();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        throw ParseError(line, col, "expected '>' after '-'");
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case ',': advance(); return {Tok::Comma, ",", line, col};
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string take_word() {
    std::string out;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      out += c;
      advance();
    }
    return out;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { cur_ = lex_.next(); }

  // sequent := [formula {',' formula}] '|-' formula
  Sequent sequent() {
    Sequent s;
    if (cur_.kind != Tok::Turnstile) {
      s.hypotheses.push_back(formula());
      while (cur_.kind == Tok::Comma) {
        shift();
        s.hypotheses.push_back(formula());
      }
    }
    expect(Tok::Turnstile, "'|-'");
    s.conclusion = formula();
    expect(Tok::End, "end of input");
    return s;
  }

  Formula formula_only() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  // Right-associative, loosest to tightest: ->, |, &.
  Formula formula() { return imp(); }

  Formula imp() {
    Formula lhs = disj();
    if (cur_.kind == Tok::Arrow) {
      shift();
      return Formula::imp(std::move(lhs), imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    if (cur_.kind == Tok::Pipe) {
      shift();
      return Formula::disj(std::move(lhs), disj());
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = atom();
    if (cur_.kind == Tok::Amp) {
      shift();
      return Formula::conj(std::move(lhs), conj());
    }
    return lhs;
  }

  Formula atom() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        shift();
        return f;
      }
      case Tok::Meta: {
        Formula f = Formula::meta(cur_.text);
        shift();
        return f;
      }
      case Tok::True: shift(); return Formula::top();
      case Tok::False: shift(); return Formula::bot();
      case Tok::LParen: {
        shift();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError(cur_.line, cur_.column, "expected a formula, got '" + describe(cur_) + "'");
    }
  }

  static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : t.text; }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k)
      throw ParseError(cur_.line, cur_.column,
                       std::string("expected ") + what + ", got '" + describe(cur_) + "'");
    if (k != Tok::End) shift();
  }

  void shift() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_;
};

}  // namespace parse_detail

// Grammar: atoms [A-Za-z][A-Za-z0-9_]*, metavariables ?name, 'true'/'false',
// connectives & | -> (right-associative, -> loosest), parentheses, and an
// optional comma-separated hypothesis list before '|-'. Throws ParseError
// with line/column on malformed input.
inline Sequent parse_goal(const std::string& text) {
  return parse_detail::Parser(text).sequent();
}

inline Formula parse_formula(const std::string& text) {
  return parse_detail::Parser(text).formula_only();
}

}  // namespace zipkit
