#include "parser.hpp"

#include <cctype>
#include <sstream>

namespace polyfib {

namespace {

struct Parser {
  const std::string& s;
  std::string vx, vy;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(msg + " at position " + std::to_string(i));
  }

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  BPoly expr() {
    BPoly r = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  BPoly term() {
    BPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  BPoly factor() {
    if (eat('-')) return -factor();
    BPoly b = base();
    if (eat('^')) {
      long e = integer();
      if (e > 512) fail("exponent too large");
      BPoly r = BPoly::constant(FElem(1));
      for (long k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  BPoly base() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      BPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit((unsigned char)c)) return BPoly::constant(FElem(rational()));
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string id = ident();
      if (id == vx) return BPoly::x();
      if (id == vy) return BPoly::y();
      fail("unknown variable '" + id + "'");
    }
    fail("unexpected character");
  }

  std::string ident() {
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
      ++j;
    std::string id = s.substr(i, j - i);
    i = j;
    return id;
  }

  long integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail("expected integer");
    if (j - i > 4) fail("integer too large");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  }

  Rat rational() {
    Int num = digits();
    if (i < s.size() && s[i] == '/') {
      ++i;
      if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
        fail("expected denominator");
      Int den = digits();
      if (den == 0) fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  Int digits() {
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
};

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

BPoly parse_polynomial(const std::string& text, const std::string& vx,
                       const std::string& vy) {
  if (vx.empty() || vy.empty() || vx == vy)
    throw InputError("two distinct variable names required");
  Parser p{text, vx, vy};
  BPoly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("unexpected character");
  return r;
}

std::string poly_to_string(const BPoly& f, const std::string& vx,
                           const std::string& vy) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lexicographic.
  std::vector<std::pair<BPoly::Key, FElem>> terms(f.terms().begin(),
                                                  f.terms().end());
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  for (auto& [key, cf] : terms) {
    Rat c = cf.rat();
    bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Rat a = neg ? Rat(-c) : c;
    std::vector<std::string> parts;
    if (a != 1 || (key.first == 0 && key.second == 0)) parts.push_back(rat_str(a));
    if (key.first > 0)
      parts.push_back(key.first == 1 ? vx : vx + "^" + std::to_string(key.first));
    if (key.second > 0)
      parts.push_back(key.second == 1 ? vy : vy + "^" + std::to_string(key.second));
    for (size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

}  // namespace polyfib
