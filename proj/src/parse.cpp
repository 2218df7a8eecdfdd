#include "rinv/parse.hpp"

#include <cctype>

#include "rinv/errors.hpp"

namespace rinv {

namespace {

struct Token {
  enum Kind { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg, const Token& at) const {
    fail(Errc::SyntaxError,
         msg + " at " + std::to_string(at.line) + ":" + std::to_string(at.col));
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, "", line_, col_};
      return;
    }
    char c = s_[pos_];
    auto single = [&](Token::Kind k) {
      tok_ = {k, std::string(1, c), line_, col_};
      ++pos_;
      ++col_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_ = {Token::Int, s_.substr(start, pos_ - start), line_, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      std::string name = s_.substr(start, pos_ - start);
      // Jet-suffix sugar: IDENT immediately followed by ^(digits).
      if (pos_ + 2 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
        size_t p = pos_ + 2;
        std::string digits;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
          digits += s_[p];
          ++p;
        }
        if (!digits.empty() && p < s_.size() && s_[p] == ')') {
          name += "^(" + digits + ")";
          col_ += static_cast<int>(p + 1 - pos_);
          pos_ = p + 1;
        }
      }
      tok_ = {Token::Ident, std::move(name), line_, tok_.col};
      return;
    }
    switch (c) {
      case '+': single(Token::Plus); return;
      case '-': single(Token::Minus); return;
      case '*': single(Token::Star); return;
      case '/': single(Token::Slash); return;
      case '^': single(Token::Caret); return;
      case '(': single(Token::LParen); return;
      case ')': single(Token::RParen); return;
      default:
        fail(Errc::SyntaxError, std::string("unexpected character '") + c + "' at " +
                                    std::to_string(line_) + ":" + std::to_string(col_));
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Token::End, "", 1, 1};
};

class Parser {
 public:
  Parser(const std::string& text, VarTablePtr table)
      : lex_(text), table_(std::move(table)) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    if (lex_.peek().kind != Token::End)
      lex_.error("unexpected trailing input", lex_.peek());
    return v;
  }

 private:
  RationalFunction expr() {
    RationalFunction v = term();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Plus) {
        lex_.take();
        v = v + term();
      } else if (k == Token::Minus) {
        lex_.take();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        v = v * factor();
      } else if (k == Token::Slash) {
        Token t = lex_.take();
        RationalFunction d = factor();
        if (d.is_zero()) lex_.error("division by zero", t);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFunction factor() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -power();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    while (lex_.peek().kind == Token::Caret) {
      lex_.take();
      Token e = lex_.peek();
      if (e.kind != Token::Int) lex_.error("expected integer exponent", e);
      lex_.take();
      long k = std::stol(e.text);
      base = base.pow(static_cast<int>(k));
    }
    return base;
  }

  RationalFunction primary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Int: {
        lex_.take();
        return RationalFunction::constant(table_, BigRational::from_string(t.text));
      }
      case Token::Ident: {
        lex_.take();
        if (!table_->find(t.text)) lex_.error("undeclared identifier '" + t.text + "'", t);
        return RationalFunction::variable(table_, t.text);
      }
      case Token::LParen: {
        lex_.take();
        RationalFunction v = expr();
        if (lex_.peek().kind != Token::RParen)
          lex_.error("expected ')'", lex_.peek());
        lex_.take();
        return v;
      }
      default:
        lex_.error("expected a value", t);
    }
  }

  Lexer lex_;
  VarTablePtr table_;
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const VarTablePtr& table) {
  return Parser(text, table).parse();
}

Polynomial parse_polynomial(const std::string& text, const VarTablePtr& table) {
  RationalFunction v = parse_expression(text, table);
  if (!v.is_polynomial())
    fail(Errc::SyntaxError, "expected a polynomial, got '" + v.str() + "'");
  return v.as_polynomial();
}

}  // namespace rinv
