#include "dp8/mpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace dp8 {

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (int(vars.size()) != p.nvars()) throw std::invalid_argument("poly_to_string: variable count mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  // map iterates ascending lex; emit descending so leading terms come first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = sgn(c) < 0;
    Rat abs_c = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += rat_to_string(abs_c);
    else if (abs_c == 1)
      out += mono;
    else
      out += rat_to_string(abs_c) + "*" + mono;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Int(s.substr(start, pos - start));
  }

  // rational literal: digits optionally followed by /digits
  Rat rational() {
    Int num = integer();
    if (eat('/')) {
      Int den = integer();
      if (den == 0) fail("zero denominator");
      return rat(num, den);
    }
    return Rat(num);
  }

  int variable() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return int(i);
    pos = start;
    fail("unknown variable '" + name + "'");
  }

  // factor := rational | var ('^' int)?
  Poly factor() {
    const int n = int(vars.size());
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(n, rational());
    int v = variable();
    int power = 1;
    if (eat('^')) {
      Int e = integer();
      if (e < 0 || e > 64) fail("exponent out of range");
      power = int(e.get_si());
    }
    return Poly::variable(n, v, power);
  }

  // term := factor ('*' factor)*
  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly expression() {
    const int n = int(vars.size());
    Poly total(n);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      Poly t = term();
      total = neg ? total - t : total + t;
      skip_ws();
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        break;
    }
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return total;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, vars};
  return p.expression();
}

}  // namespace dp8
