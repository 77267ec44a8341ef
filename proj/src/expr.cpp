#include "padic/expr.hpp"

#include <cctype>

namespace padic {

ParseError::ParseError(std::string message, int line_, int column_)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " +
                         std::move(message)),
      line(line_),
      column(column_) {}

namespace {

struct Lexer {
  explicit Lexer(const std::string& text) : src(text) {}

  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, col);
  }

  void skip_space() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '\n') {
        ++line;
        col = 1;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_space();
    return pos >= src.size();
  }

  char peek() {
    skip_space();
    return pos < src.size() ? src[pos] : '\0';
  }

  char take() {
    char c = peek();
    if (pos < src.size()) {
      ++pos;
      ++col;
    }
    return c;
  }

  bool accept(char want) {
    if (peek() == want) {
      take();
      return true;
    }
    return false;
  }

  Int integer() {
    skip_space();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      ++pos;
      ++col;
    }
    if (start == pos) fail("expected an integer");
    return Int(src.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;
  explicit Parser(const std::string& text) : lex(text) {}

  RatFunc parse() {
    RatFunc value = expr();
    if (!lex.done()) lex.fail("trailing input");
    return value;
  }

  RatFunc expr() {
    bool negated = lex.accept('-');
    RatFunc acc = term();
    if (negated) acc = -acc;
    while (true) {
      if (lex.accept('+'))
        acc += term();
      else if (lex.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (lex.accept('*')) {
        acc *= factor();
      } else if (lex.accept('/')) {
        RatFunc d = factor();
        if (d.is_zero()) lex.fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    RatFunc base = atom();
    if (lex.accept('^')) {
      Int e = lex.integer();
      if (e > poly_degree_cap()) lex.fail("exponent exceeds the degree cap");
      unsigned long n = e.get_ui();
      RatFunc acc(1);
      for (unsigned long i = 0; i < n; ++i) acc *= base;
      return acc;
    }
    return base;
  }

  RatFunc atom() {
    char c = lex.peek();
    if (c == '(') {
      lex.take();
      RatFunc inner = expr();
      if (!lex.accept(')')) lex.fail("expected ')'");
      return inner;
    }
    if (c == 'T') {
      lex.take();
      return RatFunc::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rat(lex.integer()));
    lex.fail(std::string("unexpected character '") + c + "'");
  }
};

void append_term(std::string& out, const Rat& coeff, long degree, bool first) {
  Rat a = coeff;
  if (first) {
    if (a < 0) {
      out += "-";
      a = -a;
    }
  } else {
    out += a < 0 ? " - " : " + ";
    if (a < 0) a = -a;
  }
  if (degree == 0) {
    out += to_string(a);
    return;
  }
  if (a != 1) out += to_string(a) + "*";
  out += "T";
  if (degree > 1) out += "^" + std::to_string(degree);
}

// Single-monomial polynomials need no parentheses inside a product chain.
std::string wrap(const Poly& f) {
  size_t terms = 0;
  for (const Rat& c : f.coeffs())
    if (c != 0) ++terms;
  std::string body = to_expr_string(f);
  return terms > 1 ? "(" + body + ")" : body;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

std::string to_expr_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    if (f.coeff(i) == 0) continue;
    append_term(out, f.coeff(i), i, first);
    first = false;
  }
  return out;
}

std::string to_expr_string(const RatFunc& f) {
  if (f.den().is_one()) return to_expr_string(f.num());
  return wrap(f.num()) + "/" + wrap(f.den());
}

std::ostream& operator<<(std::ostream& out, const Poly& f) {
  return out << to_expr_string(f);
}

std::ostream& operator<<(std::ostream& out, const RatFunc& f) {
  return out << to_expr_string(f);
}

}  // namespace padic
