#include "gcmlab/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace gcmlab {

namespace {

struct Parser {
  const Ring& ring;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 18) fail("integer literal too long");
    return std::stoll(s.substr(start, pos - start));
  }

  Poly base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit((unsigned char)c))
      return ring.constant(ring.field().from_int(integer()));
    if (std::isalpha((unsigned char)c) || c == '_' || c == '@') {
      std::size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring.var_index(name);
      if (idx < 0) {
        pos = start;
        fail("unknown variable '" + name + "'");
      }
      return ring.var((std::size_t)idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) fail("negative exponent");
      if (e > 0xffff) fail("exponent too large");
      return poly_pow(b, (unsigned)e);
    }
    return b;
  }

  Poly term() {
    Poly p = factor();
    while (peek() == '*') {
      eat('*');
      p = p * factor();
    }
    return p;
  }

  Poly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      char c = peek();
      if (c == '+') {
        eat('+');
        p = p + term();
      } else if (c == '-') {
        eat('-');
        p = p - term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

Poly parse_poly(const Ring& ring, const std::string& text) {
  Parser p{ring, text};
  Poly r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

std::vector<Poly> parse_poly_list(const Ring& ring, const std::string& text) {
  std::vector<Poly> out;
  std::size_t start = 0;
  int depth = 0;
  bool any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
      if (!blank) {
        out.push_back(parse_poly(ring, piece));
        any = true;
      } else if (i < text.size() || any) {
        throw std::invalid_argument("empty entry in polynomial list");
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace gcmlab
