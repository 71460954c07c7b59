#pragma once

#include <vector>

#include "dp8/integers.hpp"
#include "dp8/matrix.hpp"

namespace dp8 {

// Univariate polynomials over K, dense coefficient vector, c[i] on t^i.
template <FieldElem K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& v) { return UPoly({v}); }
  static UPoly monomial(int deg, const K& v) {
    std::vector<K> c(deg + 1, K(0));
    c[deg] = v;
    return UPoly(std::move(c));
  }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const K& coeff(int i) const {
    static const K zero(0);
    return i >= 0 && i < int(c_.size()) ? c_[i] : zero;
  }
  const K& lead() const { return c_.back(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    std::vector<K> c = c_;
    for (auto& v : c) v = inv * v;
    return UPoly(std::move(c));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Division with remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    std::vector<K> rem = c_, quot(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, K(0));
    K lead_inv = K(1) / d.lead();
    for (int i = int(rem.size()) - 1; i >= d.degree(); --i) {
      if (fe_is_zero(rem[i])) continue;
      K f = rem[i] * lead_inv;
      quot[i - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

  K eval(const K& x) const {
    K v(0);
    for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
    return v;
  }

  Mat<K> eval(const Mat<K>& m) const {
    Mat<K> v(m.rows(), m.cols());
    for (int i = degree(); i >= 0; --i) {
      v = v * m;
      for (int k = 0; k < m.rows(); ++k) v(k, k) += c_[i];
    }
    return v;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (fe_is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      if (i == 0)
        s += fe_str(c_[i]);
      else {
        s += fe_str(c_[i]) + "*" + var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && fe_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <FieldElem K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FieldElem K>
UPoly<K> upoly_lcm(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return UPoly<K>();
  UPoly<K> g = upoly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

// Monic least-degree annihilator of a square matrix, via Krylov chains from
// each unit vector; the overall minimal polynomial is the lcm of the local
// annihilators.
template <FieldElem K>
UPoly<K> minimal_polynomial(const Mat<K>& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal_polynomial: square matrix required");
  const int n = a.rows();
  if (n == 0) return UPoly<K>({K(1)});
  UPoly<K> result = UPoly<K>::constant(K(1));
  for (int start = 0; start < n; ++start) {
    if (result.degree() == n) break;
    Vec<K> v(n, K(0));
    v[start] = K(1);
    std::vector<Vec<K>> chain{v};
    for (;;) {
      Vec<K> next = a * chain.back();
      // test dependence of `next` on chain
      Mat<K> sys(n, int(chain.size()));
      for (int j = 0; j < int(chain.size()); ++j)
        for (int i = 0; i < n; ++i) sys(i, j) = chain[j][i];
      if (auto coeff = solve(sys, next)) {
        std::vector<K> poly(chain.size() + 1, K(0));
        for (size_t i = 0; i < chain.size(); ++i) poly[i] = -(*coeff)[i];
        poly[chain.size()] = K(1);
        result = upoly_lcm(result, UPoly<K>(std::move(poly)));
        break;
      }
      chain.push_back(std::move(next));
    }
  }
  return result;
}

template <FieldElem K>
bool is_nilpotent(const Mat<K>& a) {
  UPoly<K> m = minimal_polynomial(a);
  for (int i = 0; i < m.degree(); ++i)
    if (!fe_is_zero(m.coeff(i))) return false;
  return true;
}

// kernel(A - lambda I) as a subspace.
template <FieldElem K>
Mat<K> eigenspace(const Mat<K>& a, const K& lambda) {
  if (!a.is_square()) throw std::invalid_argument("eigenspace: square matrix required");
  Mat<K> shifted = a;
  for (int i = 0; i < a.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

// All rational roots of a monic polynomial over Q, with multiplicity dropped;
// also reports whether the polynomial splits into linear factors over Q.
struct RationalRoots {
  std::vector<Rat> roots;
  bool splits = false;
};

RationalRoots rational_roots(const UPoly<Rat>& p);

}  // namespace dp8
