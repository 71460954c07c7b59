#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dp8/integers.hpp"
#include "dp8/rational.hpp"

namespace dp8 {

// Descriptor of Q(sqrt(a)). a is normalized to its squarefree part on
// construction; squares are rejected so the extension is always a field.
struct QuadField {
  Int a = 0;  // 0 is the "no extension yet" marker used by wildcard elements

  QuadField() = default;
  explicit QuadField(const Int& d) {
    if (d == 0) throw std::invalid_argument("QuadField: a must be nonzero");
    a = squarefree_part(d);
    if (a == 1) throw std::invalid_argument("QuadField: a must not be a square");
  }
  bool operator==(const QuadField& o) const { return a == o.a; }
};

// Element x + y*alpha of Q(sqrt(a)), alpha^2 = a.
//
// Elements built from plain rationals carry a == 0 and act as wildcards: the
// extension is adopted from the other operand. Mixing two distinct nonzero
// extensions is a contract violation and throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : x_(v) {}  // NOLINT: implicit by design, mirrors mpq_class
  QuadExt(const Rat& v) : x_(v) {}
  QuadExt(const QuadField& f, Rat x, Rat y) : a_(f.a), x_(std::move(x)), y_(std::move(y)) {
    if (y_ == 0) a_ = 0;
  }

  const Int& ext() const { return a_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  QuadField field() const { return a_ == 0 ? QuadField() : QuadField(a_); }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }

  // x - y*alpha
  QuadExt conj() const { return raw(a_, x_, -y_); }
  // x^2 - a*y^2, always rational
  Rat norm() const { return x_ * x_ - Rat(a_) * y_ * y_; }
  Rat trace() const { return 2 * x_; }

  friend QuadExt operator+(const QuadExt& l, const QuadExt& r) {
    return raw(unify(l, r), l.x_ + r.x_, l.y_ + r.y_);
  }
  friend QuadExt operator-(const QuadExt& l, const QuadExt& r) {
    return raw(unify(l, r), l.x_ - r.x_, l.y_ - r.y_);
  }
  QuadExt operator-() const { return raw(a_, -x_, -y_); }
  friend QuadExt operator*(const QuadExt& l, const QuadExt& r) {
    Int a = unify(l, r);
    return raw(a, l.x_ * r.x_ + Rat(a) * l.y_ * r.y_, l.x_ * r.y_ + l.y_ * r.x_);
  }
  friend QuadExt operator/(const QuadExt& l, const QuadExt& r) {
    if (r.is_zero()) throw std::domain_error("QuadExt: division by zero");
    Rat n = r.norm();
    QuadExt num = l * r.conj();
    return raw(num.a_ == 0 ? unify(l, r) : num.a_, num.x_ / n, num.y_ / n);
  }
  QuadExt& operator+=(const QuadExt& r) { return *this = *this + r; }
  QuadExt& operator-=(const QuadExt& r) { return *this = *this - r; }
  QuadExt& operator*=(const QuadExt& r) { return *this = *this * r; }
  QuadExt& operator/=(const QuadExt& r) { return *this = *this / r; }

  friend bool operator==(const QuadExt& l, const QuadExt& r) {
    if (l.x_ != r.x_ || l.y_ != r.y_) return false;
    if (l.y_ != 0) unify(l, r);
    return true;
  }
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }

  std::string str() const {
    if (is_rational()) return rat_to_string(x_);
    std::string s;
    if (x_ != 0) s += rat_to_string(x_) + (sgn(y_) > 0 ? "+" : "");
    if (y_ == 1)
      s += "";
    else if (y_ == -1)
      s += "-";
    else
      s += rat_to_string(y_) + "*";
    s += "sqrt(" + a_.get_str() + ")";
    return s;
  }

 private:
  static QuadExt raw(const Int& a, Rat x, Rat y) {
    QuadExt z;
    z.a_ = (y == 0) ? Int(0) : a;
    z.x_ = std::move(x);
    z.y_ = std::move(y);
    return z;
  }
  static Int unify(const QuadExt& l, const QuadExt& r) {
    if (l.a_ == 0) return r.a_;
    if (r.a_ == 0 || l.a_ == r.a_) return l.a_;
    throw std::invalid_argument("QuadExt: mixed extensions Q(sqrt(" + l.a_.get_str() +
                                ")) and Q(sqrt(" + r.a_.get_str() + "))");
  }

  Int a_ = 0;
  Rat x_, y_;
};

inline QuadExt alpha_of(const QuadField& f) { return QuadExt(f, Rat(0), Rat(1)); }

// Square root of z inside Q(sqrt(a)) if one exists. With z = x + y*alpha and
// w = u + v*alpha, w^2 = z forces either y = 0 (pure cases) or
// u^2 = (x +- sqrt(norm(z)))/2, v = y/(2u); everything reduces to rational
// square tests.
inline std::optional<QuadExt> qext_sqrt(const QuadExt& z) {
  if (z.is_zero()) throw std::invalid_argument("qext_sqrt: z must be nonzero");
  QuadField f = z.field();
  if (z.is_rational()) {
    if (auto u = rat_sqrt(z.x())) return QuadExt(*u);
    return std::nullopt;  // sqrt may still exist as v*alpha for a specific a,
                          // but a rational carries no extension to look in
  }
  Rat n = z.norm();
  auto s = rat_sqrt(n);
  if (!s) return std::nullopt;
  for (const Rat& cand : {Rat((z.x() + *s) / 2), Rat((z.x() - *s) / 2)}) {
    if (auto u = rat_sqrt(cand)) {
      if (*u == 0) continue;
      Rat v = z.y() / (2 * *u);
      QuadExt w(f, *u, v);
      if (w * w == z) return w;
    }
  }
  return std::nullopt;
}

// Variant that knows the ambient field, so pure-rational inputs can also be
// recognized as squares of v*alpha.
inline std::optional<QuadExt> qext_sqrt_in(const QuadField& f, const QuadExt& z) {
  if (z.is_zero()) throw std::invalid_argument("qext_sqrt_in: z must be nonzero");
  if (!z.is_rational()) return qext_sqrt(z);
  if (auto u = rat_sqrt(z.x())) return QuadExt(*u);
  if (auto v = rat_sqrt(z.x() / Rat(f.a))) return QuadExt(f, Rat(0), *v);
  return std::nullopt;
}

}  // namespace dp8
