#include "fflog/expr.hpp"

#include <cctype>

namespace fflog {

namespace {

struct Parser {
  const WFieldPtr& W;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
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
  [[noreturn]] void fail(const std::string& what) {
    raise(err::PARSE, what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  long long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  WElem atom() {
    skip();
    if (eat('(')) {
      WElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('-')) return -atom();
    char c = peek();
    if (std::isdigit((unsigned char)c)) return WElem::from_int(W, integer());
    if (s.compare(pos, 5, "theta") == 0) {
      pos += 5;
      return WElem::theta(W);
    }
    if (c == 'T') {
      ++pos;
      return WElem::theta(W);
    }
    if (c == 'u') {
      ++pos;
      return WElem::monomial(W, 1, 1);
    }
    if (c == 'g') {
      ++pos;
      return WElem::monomial(W, W->F.Fqs().gen(), 0);
    }
    fail("expected atom");
  }

  WElem factor() {
    WElem v = atom();
    skip();
    if (eat('^')) {
      long long k = integer();
      v = v.pow(k);
    }
    return v;
  }

  WElem term() {
    WElem v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  WElem expr() {
    WElem v = term();
    for (;;) {
      skip();
      if (eat('+')) {
        v = v + term();
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        v = v - term();
      } else {
        return v;
      }
    }
  }
};

}  // namespace

WElem parse_welem(const WFieldPtr& W, const std::string& text) {
  Parser p{W, text};
  WElem v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace fflog
