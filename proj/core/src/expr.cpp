#include "oscalg/expr.hpp"

#include <cctype>

#include "oscalg/error.hpp"

namespace oscalg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "unexpected trailing input");
    }
    return e;
  }

 private:
  Expr expr() {
    skip_ws();
    std::size_t start = pos_;
    bool negated = accept('-');
    Expr lhs = term();
    if (negated) {
      Expr zero;
      zero.kind = Expr::Kind::literal;
      zero.value = Rational(0);
      zero.pos = start;
      lhs = binary(Expr::Kind::sub, std::move(zero), std::move(lhs), start);
    }
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = binary(Expr::Kind::add, std::move(lhs), term(), pos_);
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::sub, std::move(lhs), term(), pos_);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = binary(Expr::Kind::mul, std::move(lhs), factor(), pos_);
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(peek())) {
        throw ParseError(at, "exponent must be a natural literal");
      }
      std::string digits = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        throw ParseError(pos_, "exponent must be a natural literal");
      }
      Expr e;
      e.kind = Expr::Kind::pow;
      e.exponent = static_cast<unsigned>(std::stoul(digits));
      e.pos = at;
      e.kids.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) {
      throw ParseError(at, "unexpected end of expression");
    }
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_ws();
      if (!accept(')')) {
        throw ParseError(pos_, "expected ')'");
      }
      return inner;
    }
    if (std::isdigit(c)) {
      std::string num = read_digits();
      std::string lit = num;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(peek())) {
          throw ParseError(slash + 1, "expected denominator digits");
        }
        lit += "/" + read_digits();
      }
      Expr e;
      e.kind = Expr::Kind::literal;
      e.pos = at;
      try {
        e.value = Rational::parse(lit);
      } catch (const ParseError& inner) {
        throw ParseError(at + inner.position(), "bad rational literal");
      }
      return e;
    }
    if (std::isalpha(c) || c == '_') {
      std::string id = read_identifier();
      Expr e;
      e.pos = at;
      if (id == "n") {
        e.kind = Expr::Kind::index_var;
      } else {
        e.kind = Expr::Kind::parameter;
        e.name = std::move(id);
      }
      return e;
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    e.kids.push_back(std::move(lhs));
    e.kids.push_back(std::move(rhs));
    return e;
  }

  char peek() const { return text_[pos_]; }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const Rational& lookup(const Bindings& bindings, const Expr& e) {
  auto it = bindings.find(e.name);
  if (it == bindings.end()) {
    throw ParseError(e.pos, "unbound identifier '" + e.name + "'");
  }
  return it->second;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

Rational interpret(const Expr& e, const Rational& n, const Bindings& bindings) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.value;
    case Expr::Kind::index_var:
      return n;
    case Expr::Kind::parameter:
      return lookup(bindings, e);
    case Expr::Kind::add:
      return interpret(e.kids[0], n, bindings) + interpret(e.kids[1], n, bindings);
    case Expr::Kind::sub:
      return interpret(e.kids[0], n, bindings) - interpret(e.kids[1], n, bindings);
    case Expr::Kind::mul:
      return interpret(e.kids[0], n, bindings) * interpret(e.kids[1], n, bindings);
    case Expr::Kind::pow: {
      Rational base = interpret(e.kids[0], n, bindings);
      Rational acc(1);
      for (unsigned i = 0; i < e.exponent; ++i) acc *= base;
      return acc;
    }
  }
  throw Error("corrupt expression tree");
}

Polynomial lower_to_polynomial(const Expr& e, const Bindings& bindings) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return Polynomial(e.value);
    case Expr::Kind::index_var:
      return Polynomial::variable();
    case Expr::Kind::parameter:
      return Polynomial(lookup(bindings, e));
    case Expr::Kind::add:
      return lower_to_polynomial(e.kids[0], bindings) + lower_to_polynomial(e.kids[1], bindings);
    case Expr::Kind::sub:
      return lower_to_polynomial(e.kids[0], bindings) - lower_to_polynomial(e.kids[1], bindings);
    case Expr::Kind::mul:
      return lower_to_polynomial(e.kids[0], bindings) * lower_to_polynomial(e.kids[1], bindings);
    case Expr::Kind::pow: {
      Polynomial base = lower_to_polynomial(e.kids[0], bindings);
      Polynomial acc(Rational(1));
      for (unsigned i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  throw Error("corrupt expression tree");
}

Polynomial parse_coeff_expr(std::string_view text, const Bindings& bindings) {
  return lower_to_polynomial(parse_expr(text), bindings);
}

}  // namespace oscalg
