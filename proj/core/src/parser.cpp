#include "alba/parser.hpp"

#include <cctype>

namespace alba {

namespace {

enum class Tok {
  End,
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Until,
  Next,
  Eventually,
  Always,
  LParen,
  RParen,
  Implies
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok() const noexcept { return tok_; }
  const std::string& value() const noexcept { return value_; }
  std::size_t pos() const noexcept { return tok_pos_; }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    tok_pos_ = pos_;
    if (pos_ >= text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '!': tok_ = Tok::Not; ++pos_; return;
      case '&': tok_ = Tok::And; ++pos_; return;
      case '|': tok_ = Tok::Or; ++pos_; return;
      case '(': tok_ = Tok::LParen; ++pos_; return;
      case ')': tok_ = Tok::RParen; ++pos_; return;
      case 'U': tok_ = Tok::Until; ++pos_; return;
      case 'X': tok_ = Tok::Next; ++pos_; return;
      case 'F': tok_ = Tok::Eventually; ++pos_; return;
      case 'G': tok_ = Tok::Always; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok_ = Tok::Implies;
          pos_ += 2;
          return;
        }
        throw ParseError("unknown token '-'", pos_);
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      value_ = text_.substr(start, pos_ - start);
      if (value_ == "tt") {
        tok_ = Tok::True;
      } else if (value_ == "ff") {
        tok_ = Tok::False;
      } else {
        tok_ = Tok::Atom;
      }
      return;
    }
    throw ParseError(std::string("unknown token '") + c + "'", pos_);
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t tok_pos_ = 0;
  Tok tok_ = Tok::End;
  std::string value_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula parse() {
    Formula f = parse_implies();
    if (lex_.tok() != Tok::End) {
      throw ParseError("unexpected trailing input", lex_.pos());
    }
    return f;
  }

private:
  // implies (sugar, right-assoc, loosest) > or > and > until > unary.
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lex_.tok() == Tok::Implies) {
      lex_.advance();
      Formula rhs = parse_implies();
      return make_or(make_not(lhs), rhs);
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (lex_.tok() == Tok::Or) {
      lex_.advance();
      acc = make_or(acc, parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_until();
    while (lex_.tok() == Tok::And) {
      lex_.advance();
      acc = make_and(acc, parse_until());
    }
    return acc;
  }

  Formula parse_until() {
    Formula lhs = parse_unary();
    if (lex_.tok() == Tok::Until) {
      lex_.advance();
      return make_until(lhs, parse_until());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (lex_.tok()) {
      case Tok::Not: lex_.advance(); return make_not(parse_unary());
      case Tok::Next: lex_.advance(); return make_next(parse_unary());
      case Tok::Eventually:
        lex_.advance();
        return make_eventually(parse_unary());
      case Tok::Always: lex_.advance(); return make_always(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    switch (lex_.tok()) {
      case Tok::True: lex_.advance(); return make_true();
      case Tok::False: lex_.advance(); return make_false();
      case Tok::Atom: {
        Formula f = make_atom(lex_.value());
        lex_.advance();
        return f;
      }
      case Tok::LParen: {
        lex_.advance();
        Formula f = parse_implies();
        if (lex_.tok() != Tok::RParen) {
          throw ParseError("expected ')'", lex_.pos());
        }
        lex_.advance();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", lex_.pos());
      default:
        throw ParseError("expected a formula", lex_.pos());
    }
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

}  // namespace alba
