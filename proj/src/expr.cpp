#include "fgpair/expr.hpp"

#include <cctype>
#include <sstream>

namespace fg {

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Err::ParseError, msg + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long k = integer();
      return base.pow(static_cast<int>(neg ? -k : k));
    }
    return base;
  }

  long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(std::string(s.substr(start, pos - start)));
  }

  RatFunc atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name(s.substr(start, pos - start));
      if (name == "i") return RatFunc::imag_unit();
      return RatFunc::var(sym(name));
    }
    fail("unexpected character");
  }
};

void print_mono_tail(std::ostringstream& os, const Mono& m) {
  for (int i = 0; i < kSymCount; ++i) {
    if (!m.e[i]) continue;
    os << "*" << sym_name(i);
    if (m.e[i] > 1) os << "^" << int(m.e[i]);
  }
}

// true if the coefficient prints with a bare leading '-'
bool coeff_negative(const GRat& c) {
  if (c.im == 0) return c.re < 0;
  if (c.re == 0) return c.im < 0;
  return false;  // parenthesized complex
}

void print_term(std::ostringstream& os, const Mono& m, const GRat& c) {
  if (m.is_one()) {
    os << c.str();
    return;
  }
  if (c.is_one()) {
    std::ostringstream tmp;
    print_mono_tail(tmp, m);
    os << tmp.str().substr(1);  // drop leading '*'
    return;
  }
  if (c == GRat(-1)) {
    std::ostringstream tmp;
    print_mono_tail(tmp, m);
    os << "-" << tmp.str().substr(1);
    return;
  }
  os << c.str();
  print_mono_tail(os, m);
}

}  // namespace

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading monomial first, for readability
  auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      print_term(os, m, c);
      first = false;
      continue;
    }
    if (coeff_negative(c)) {
      os << " - ";
      print_term(os, m, -c);
    } else {
      os << " + ";
      print_term(os, m, c);
    }
  }
  return os.str();
}

std::string print_ratfunc(const RatFunc& f) {
  if (f.den().is_one()) return print_poly(f.num());
  return "(" + print_poly(f.num()) + ")/(" + print_poly(f.den()) + ")";
}

RatFunc parse_ratfunc(std::string_view text) {
  Parser p{text};
  RatFunc v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace fg
