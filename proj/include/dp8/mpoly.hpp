#pragma once

#include <map>
#include <string>
#include <vector>

#include "dp8/rational.hpp"

namespace dp8 {

// Sparse multivariate polynomial over Q. The exponent vector length is fixed
// per polynomial; all arithmetic requires matching arity.
class Poly {
 public:
  using Expo = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
  }
  static Poly variable(int nvars, int index, int power = 1) {
    Poly p(nvars);
    Expo e(nvars, 0);
    e[index] = power;
    p.terms_[e] = Rat(1);
    return p;
  }
  static Poly monomial(const Expo& e, const Rat& c) {
    Poly p(int(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Rat coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    Rat& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  Poly operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    Poly out(p.nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : p.terms_) out.terms_[e] = s * c;
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(int k) const {
    Poly out = constant(nvars_, Rat(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  Poly derivative(int var) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Expo d = e;
      d[var] -= 1;
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  Rat eval(const std::vector<Rat>& point) const {
    Rat v(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      v += t;
    }
    return v;
  }

  size_t max_coeff_digits() const {
    size_t d = 1;
    for (const auto& [e, c] : terms_) d = std::max(d, rat_digits(c));
    return d;
  }

 private:
  void check(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  }

  int nvars_ = 0;
  std::map<Expo, Rat> terms_;
};

// Canonical text form: terms in descending lexicographic exponent order,
// "c*v0^e0*v1" style with unit coefficients and trivial powers elided.
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

// Parses the grammar: signed rational coefficients, named variables, '*',
// '^', '+', '-'. Throws std::invalid_argument with a character position on
// malformed input.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace dp8
