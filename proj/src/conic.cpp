#include "dp8/conic.hpp"

#include <algorithm>

#include "dp8/integers.hpp"

namespace dp8 {

// ---------------------------------------------------------------------------
// Congruence diagonalization
// ---------------------------------------------------------------------------

template <FieldElem K>
Diagonalization<K> diagonalize(const TernaryForm<K>& f) {
  const int n = 3;
  Mat<K> d = f.a;
  Mat<K> t = Mat<K>::identity(n);

  auto add_col = [&](int dst, int src, const K& c) {
    // x_src += c * x_dst as a substitution: column op on T and symmetric op on D
    for (int i = 0; i < n; ++i) t(i, dst) += c * t(i, src);
    for (int i = 0; i < n; ++i) d(i, dst) += c * d(i, src);
    for (int i = 0; i < n; ++i) d(dst, i) += c * d(src, i);
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
    for (int r = 0; r < n; ++r) std::swap(d(r, i), d(r, j));
    for (int c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
  };

  for (int k = 0; k < n; ++k) {
    if (fe_is_zero(d(k, k))) {
      for (int i = k + 1; i < n; ++i)
        if (!fe_is_zero(d(i, i))) {
          swap_cols(k, i);
          break;
        }
    }
    if (fe_is_zero(d(k, k))) {
      // all remaining diagonal entries vanish: create one from an
      // off-diagonal entry (char 0, so x_i += x_j doubles it in)
      bool found = false;
      for (int i = k; i < n && !found; ++i)
        for (int j = i + 1; j < n && !found; ++j)
          if (!fe_is_zero(d(i, j))) {
            add_col(i, j, K(1));
            if (i != k) swap_cols(k, i);
            found = true;
          }
      if (!found) break;  // remaining block is zero
    }
    K inv = K(1) / d(k, k);
    for (int i = k + 1; i < n; ++i)
      if (!fe_is_zero(d(k, i))) add_col(i, k, -(d(k, i) * inv));
  }
  // zero out numerical dust off the diagonal (exact arithmetic: must be zero)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !fe_is_zero(d(i, j)))
        throw std::logic_error("diagonalize: off-diagonal residue");
  return {t, d};
}

template Diagonalization<Rat> diagonalize(const TernaryForm<Rat>&);
template Diagonalization<QuadExt> diagonalize(const TernaryForm<QuadExt>&);

// ---------------------------------------------------------------------------
// Hilbert symbols and local solvability over Q
// ---------------------------------------------------------------------------

namespace {

long val_p(const Rat& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("val_p: zero");
  long v = 0;
  Int n = x.get_num();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  Int d = x.get_den();
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    --v;
  }
  return v;
}

// unit part of x at p, reduced modulo m (m a power of p)
Int unit_mod(const Rat& x, const Int& p, const Int& m) {
  long v = val_p(x, p);
  Int n = x.get_num(), d = x.get_den();
  for (long i = 0; i < v; ++i) n /= p;
  for (long i = 0; i < -v; ++i) d /= p;
  Int dinv;
  if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()))
    throw std::logic_error("unit_mod: denominator not invertible");
  return mod_positive(n * dinv, m);
}

int legendre(const Int& u, const Int& p) { return jacobi(u, p); }

// (-1)^((u-1)/2) parity for odd u
int eps2(const Int& u_mod8) { return int(Int((u_mod8 - 1) / 2 % 2).get_si()); }
// (-1)^((u^2-1)/8) parity for odd u
int omega2(const Int& u_mod8) { return int(Int((u_mod8 * u_mod8 - 1) / 8 % 2).get_si()); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (p == 0) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (p == 2) {
    long alpha = val_p(a, p), beta = val_p(b, p);
    Int u = unit_mod(a, p, Int(8)), v = unit_mod(b, p, Int(8));
    int e = eps2(u) * eps2(v) + int(alpha % 2 != 0) * omega2(v) + int(beta % 2 != 0) * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  long alpha = val_p(a, p), beta = val_p(b, p);
  Int u = unit_mod(a, p, p), v = unit_mod(b, p, p);
  int s = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && mod_positive(p, Int(4)) == 3) s = -s;
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

bool ternary_locally_solvable(const Rat& d0, const Rat& d1, const Rat& d2, const Int& p) {
  return hilbert_symbol(Rat(-d0 * d1), Rat(-d0 * d2), p) == 1;
}

// ---------------------------------------------------------------------------
// Legendre descent over Q
// ---------------------------------------------------------------------------

namespace {

struct Sol2 {
  bool ok = false;
  Rat x, y, z;  // x^2 = a y^2 + b z^2
  Place obstruction;
};

// Lagrange-Legendre descent for x^2 = a y^2 + b z^2, a and b squarefree.
Sol2 solve2(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw std::logic_error("solve2: zero coefficient");
  if (b > 0 && mpz_perfect_square_p(b.get_mpz_t())) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), b.get_mpz_t());
    return {true, Rat(s), Rat(0), Rat(1), {}};
  }
  if (a > 0 && mpz_perfect_square_p(a.get_mpz_t())) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
    return {true, Rat(s), Rat(1), Rat(0), {}};
  }
  if (a == -1 && b == -1) return {false, {}, {}, {}, Place{Int(0)}};
  if (abs(a) > abs(b)) {
    Sol2 s = solve2(b, a);
    if (!s.ok) return s;
    return {true, s.x, s.z, s.y, {}};
  }
  // |a| <= |b|, neither a square, |b| >= 2. Lagrange reduction: shared prime
  // factors of a and b need no special treatment, the modular root is 0 there.
  Int babs = abs(b);
  auto t0 = sqrt_mod_squarefree(a, babs);
  if (!t0) {
    for (const auto& [p, e] : factor(babs).primes)
      if (p != 2 && jacobi(a, p) == -1) return {false, {}, {}, {}, Place{p}};
    throw std::logic_error("solve2: modular sqrt failed without an odd obstruction");
  }
  Int t = *t0;
  if (2 * t > babs) t = babs - t;  // representative of least absolute value
  Int m = (t * t - a) / b;
  if (m == 0) throw std::logic_error("solve2: unexpected square");
  Int m1 = squarefree_part(m);
  Int k = square_divisor_part(m);
  Sol2 s = solve2(a, m1);  // u^2 = a v^2 + m1 w^2
  if (!s.ok) return s;
  if (s.z == 0) throw std::logic_error("solve2: degenerate recursive solution");
  // (t + sqrt(a))(u + v sqrt(a)) has norm b*(m1*k*w)^2
  Rat X = Rat(t) * s.x + Rat(a) * s.y;
  Rat Y = Rat(t) * s.y + s.x;
  Rat Z = Rat(m1 * k) * s.z;
  return {true, X, Y, Z, {}};
}

void primitivize(Vec<Rat>& p) {
  Int l = 1;
  for (const Rat& c : p) {
    Int d = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  Int g = 0;
  for (Rat& c : p) {
    c *= Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (g > 1)
    for (Rat& c : p) c /= Rat(g);
  for (const Rat& c : p) {
    if (c == 0) continue;
    if (c < 0)
      for (Rat& v : p) v = -v;
    break;
  }
}

}  // namespace

ConicCertificate<Rat> solve_conic_q(const TernaryForm<Rat>& f) {
  if (det(f.a) == 0)
    throw std::invalid_argument("solve_conic_q: degenerate form rejected");
  Diagonalization<Rat> dg = diagonalize(f);
  // accumulated map from solutions of the running diagonal form back to the
  // original coordinates
  Mat<Rat> back = dg.transform;
  Int e[3];
  for (int i = 0; i < 3; ++i) {
    Rat c = dg.diagonal(i, i);
    // scale the variable so the coefficient becomes a squarefree integer
    Int den = c.get_den();
    c *= Rat(den * den);
    for (int r = 0; r < 3; ++r) back(r, i) *= Rat(den, 1);
    Int ci = c.get_num();
    Int m = square_divisor_part(ci);
    for (int r = 0; r < 3; ++r) back(r, i) /= Rat(m);
    e[i] = ci / (m * m);
  }
  // pairwise coprime reduction
  for (;;) {
    Int g01, g;
    mpz_gcd(g01.get_mpz_t(), e[0].get_mpz_t(), e[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g01.get_mpz_t(), e[2].get_mpz_t());
    if (g > 1) {  // common content of the form, drop it
      for (auto& v : e) v /= g;
      continue;
    }
    int pi = -1, pj = -1;
    Int p = 0;
    for (int i = 0; i < 3 && pi < 0; ++i)
      for (int j = i + 1; j < 3 && pi < 0; ++j) {
        Int gij;
        mpz_gcd(gij.get_mpz_t(), e[i].get_mpz_t(), e[j].get_mpz_t());
        if (gij > 1) {
          p = factor(gij).primes.front().first;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    int pk = 3 - pi - pj;
    // (p a', p b', c) -> (a', b', p c); new solutions map by x_k -> p x_k
    e[pi] /= p;
    e[pj] /= p;
    e[pk] *= p;
    for (int r = 0; r < 3; ++r) back(r, pk) *= Rat(p);
    // keep the third coefficient squarefree
    Int m = square_divisor_part(e[pk]);
    if (m > 1) {
      e[pk] /= m * m;
      for (int r = 0; r < 3; ++r) back(r, pk) /= Rat(m);
    }
  }

  int s0 = sgn(e[0]), s1 = sgn(e[1]), s2 = sgn(e[2]);
  if (s0 == s1 && s1 == s2) {
    ConicCertificate<Rat> cert;
    cert.status = ConicStatus::Unsolvable;
    cert.obstruction = Place{Int(0)};
    return cert;
  }

  // multiply by e0: X^2 = a y^2 + b z^2 with X = e0 x
  Sol2 s = solve2(Int(-e[0] * e[1]), Int(-e[0] * e[2]));
  ConicCertificate<Rat> cert;
  if (!s.ok) {
    cert.status = ConicStatus::Unsolvable;
    cert.obstruction = s.obstruction;
    return cert;
  }
  Vec<Rat> pd{s.x / Rat(e[0]), s.y, s.z};
  Vec<Rat> point = back * pd;
  primitivize(point);
  if (vec_is_zero(point) || f.eval(point) != 0)
    throw std::logic_error("solve_conic_q: descent produced an invalid point");
  cert.status = ConicStatus::Solvable;
  cert.point = point;
  return cert;
}

// ---------------------------------------------------------------------------
// Conics over Q(sqrt(a))
// ---------------------------------------------------------------------------

namespace {

// exact sign of m + s*n*sqrt(a) under the embedding sqrt(a) -> s*sqrt(a), a > 0
int sign_embed(const QuadExt& v, int s, const Int& a) {
  const Rat& m = v.x();
  Rat t = s * v.y();
  if (t == 0) return sgn(m);
  if (m == 0) return sgn(t);
  if (sgn(m) == sgn(t)) return sgn(m);
  // opposite signs: compare m^2 against t^2 a
  int c = cmp(m * m, t * t * Rat(a));
  if (c == 0) throw std::logic_error("sign_embed: zero element");
  return c > 0 ? sgn(m) : sgn(t);
}

struct PadicPart {
  long v = 0;
  Int unit;  // modulo p
};

// valuation and unit residue of the image of m + n*alpha in Q_p under
// alpha -> r (r^2 = a mod p^K, K beyond the valuation of the norm)
PadicPart padic_image(const Int& m, const Int& n, const Int& a, const Int& p, const Int& r0) {
  Int norm = m * m - a * n * n;
  if (norm == 0) throw std::logic_error("padic_image: zero norm");
  long vn = 0;
  Int t = abs(norm);
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    t /= p;
    ++vn;
  }
  long K = vn + 1;
  Int pk = 1;
  for (long i = 0; i < K; ++i) pk *= p;
  // Hensel lift r0 to a root of x^2 = a mod p^K
  Int r = mod_positive(r0, p), mod = p;
  while (mod < pk) {
    mod = mod * mod;
    if (mod > pk) mod = pk;
    Int inv2r;
    Int two_r = mod_positive(2 * r, mod);
    if (!mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t()))
      throw std::logic_error("padic_image: lift failed");
    r = mod_positive(r - (r * r - a) * inv2r, mod);
  }
  Int w = mod_positive(m + n * r, pk);
  PadicPart out;
  while (out.v < K && w % p == 0) {
    w /= p;
    ++out.v;
  }
  if (out.v >= K) throw std::logic_error("padic_image: valuation exceeds norm bound");
  out.unit = mod_positive(w, p);
  return out;
}

// Hilbert symbol (x, y)_p for odd p with x = p^va * u, y = p^vb * w given by
// valuation parities and unit residues mod p.
int hilbert_parts(long va, const Int& u, long vb, const Int& w, const Int& p) {
  int s = 1;
  if ((va % 2 != 0) && (vb % 2 != 0) && mod_positive(p, Int(4)) == 3) s = -s;
  if (vb % 2 != 0) s *= jacobi(u, p);
  if (va % 2 != 0) s *= jacobi(w, p);
  return s;
}

bool locally_solvable_parts(const PadicPart d[3], const Int& p) {
  // (-d0 d1, -d0 d2)_p == 1
  long va = d[0].v + d[1].v, vb = d[0].v + d[2].v;
  Int u = mod_positive(-d[0].unit * d[1].unit, p);
  Int w = mod_positive(-d[0].unit * d[2].unit, p);
  return hilbert_parts(va, u, vb, w, p) == 1;
}

void primitivize_qext(Vec<QuadExt>& pt) {
  Int l = 1;
  auto fold_den = [&](const Rat& c) {
    Int d = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  };
  for (const auto& c : pt) {
    fold_den(c.x());
    fold_den(c.y());
  }
  Int g = 0;
  QuadField f;
  for (auto& c : pt) {
    if (c.ext() != 0) f = c.field();
    QuadExt scaled = QuadExt(Rat(l)) * c;
    c = scaled;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Rat(c.x()).get_num().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Rat(c.y()).get_num().get_mpz_t());
  }
  if (g > 1)
    for (auto& c : pt) c /= QuadExt(Rat(g));
  for (const auto& c : pt) {
    if (c.is_zero()) continue;
    const Rat& lead = c.x() != 0 ? c.x() : c.y();
    if (lead < 0)
      for (auto& v : pt) v = -v;
    break;
  }
}

constexpr unsigned long kSmallPlaceBound = 20000;

}  // namespace

ConicCertificate<QuadExt> solve_conic_qext(const TernaryForm<QuadExt>& f, long height) {
  Int a = 0;
  for (int i = 0; i < 3 && a == 0; ++i)
    for (int j = 0; j < 3 && a == 0; ++j) a = f.a(i, j).ext();
  if (a == 0) {
    // all entries rational and no ambient field given: answer with the
    // rational solver embedded
    if (det(f.a).is_zero())
      throw std::invalid_argument("solve_conic_qext: degenerate form rejected");
    Mat<Rat> m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = f.a(i, j).x();
    ConicCertificate<Rat> inner = solve_conic_q(TernaryForm<Rat>(m));
    ConicCertificate<QuadExt> cert;
    cert.status = inner.status;
    cert.obstruction = inner.obstruction;
    if (inner.point) {
      Vec<QuadExt> p;
      for (const Rat& c : *inner.point) p.emplace_back(c);
      cert.point = p;
    }
    return cert;
  }
  return solve_conic_qext(f, QuadField(a), height);
}

ConicCertificate<QuadExt> solve_conic_qext(const TernaryForm<QuadExt>& f, const QuadField& field,
                                           long height) {
  if (det(f.a).is_zero())
    throw std::invalid_argument("solve_conic_qext: degenerate form rejected");
  const Int& a = field.a;

  Diagonalization<QuadExt> dg = diagonalize(f);
  Mat<QuadExt> back = dg.transform;
  QuadExt A[3];
  for (int i = 0; i < 3; ++i) {
    QuadExt c = dg.diagonal(i, i);
    Int dx = c.x().get_den(), dy = c.y().get_den(), den;
    mpz_lcm(den.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    c = c * QuadExt(Rat(den * den));
    for (int r = 0; r < 3; ++r) back(r, i) = back(r, i) * QuadExt(Rat(den));
    A[i] = c;
  }
  // drop integer content of the form
  Int content = 0;
  for (const auto& c : A) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), Rat(c.x()).get_num().get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), Rat(c.y()).get_num().get_mpz_t());
  }
  if (content > 1)
    for (auto& c : A) c /= QuadExt(Rat(content));

  ConicCertificate<QuadExt> cert;

  // real embeddings exist only for a > 0; a definite embedding blocks
  // solutions globally since E embeds into R coordinatewise
  if (a > 0) {
    for (int s : {1, -1}) {
      int sg = sign_embed(A[0], s, a);
      if (sign_embed(A[1], s, a) == sg && sign_embed(A[2], s, a) == sg) {
        cert.status = ConicStatus::Unsolvable;
        cert.obstruction = Place{Int(0)};
        return cert;
      }
    }
  }

  // split-prime local obstructions at small places
  {
    std::vector<Int> candidates;
    for (const auto& c : A) {
      Int t = abs(Rat(c.norm()).get_num());
      for (unsigned long p = 3; p <= kSmallPlaceBound && t > 1; p += 2) {
        if (!mpz_divisible_ui_p(t.get_mpz_t(), p)) continue;
        candidates.push_back(Int(static_cast<long>(p)));
        while (mpz_divisible_ui_p(t.get_mpz_t(), p))
          mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Int& p : candidates) {
      if (mpz_divisible_p(Int(2 * a).get_mpz_t(), p.get_mpz_t())) continue;
      if (jacobi(a, p) != 1) continue;  // inert or ramified: skip
      auto r0 = sqrt_mod_prime(a, p);
      if (!r0) continue;
      for (const Int& r : {*r0, Int(p - *r0)}) {
        PadicPart parts[3];
        for (int i = 0; i < 3; ++i)
          parts[i] = padic_image(Rat(A[i].x()).get_num(), Rat(A[i].y()).get_num(), a, p, r);
        if (!locally_solvable_parts(parts, p)) {
          cert.status = ConicStatus::Unsolvable;
          cert.obstruction = Place{p};
          return cert;
        }
      }
    }
  }

  // bounded search over Z[alpha]: pick y, z of growing height, test whether
  // -(A1 y^2 + A2 z^2)/A0 is a square in E
  for (long h = 0; h <= height; ++h) {
    for (long y1 = -h; y1 <= h; ++y1)
      for (long y2 = -h; y2 <= h; ++y2)
        for (long z1 = -h; z1 <= h; ++z1)
          for (long z2 = -h; z2 <= h; ++z2) {
            if (std::max({labs(y1), labs(y2), labs(z1), labs(z2)}) != h) continue;
            if (y1 == 0 && y2 == 0 && z1 == 0 && z2 == 0) continue;
            QuadExt y(field, Rat(y1), Rat(y2)), z(field, Rat(z1), Rat(z2));
            QuadExt w = -(A[1] * y * y + A[2] * z * z);
            Vec<QuadExt> pd;
            if (w.is_zero()) {
              pd = {QuadExt(0), y, z};
            } else {
              auto x = qext_sqrt_in(field, w / A[0]);
              if (!x) continue;
              pd = {*x, y, z};
            }
            Vec<QuadExt> point = back * pd;
            primitivize_qext(point);
            if (vec_is_zero(point) || !f.eval(point).is_zero())
              throw std::logic_error("solve_conic_qext: search produced an invalid point");
            cert.status = ConicStatus::Solvable;
            cert.point = point;
            return cert;
          }
  }

  cert.status = ConicStatus::Inconclusive;
  cert.height_bound = height;
  return cert;
}

// ---------------------------------------------------------------------------
// Certificate rechecks
// ---------------------------------------------------------------------------

bool conic_certificate_recheck(const TernaryForm<Rat>& f, const ConicCertificate<Rat>& cert) {
  switch (cert.status) {
    case ConicStatus::Solvable:
      return cert.point && !vec_is_zero(*cert.point) && f.eval(*cert.point) == 0;
    case ConicStatus::Unsolvable: {
      if (!cert.obstruction) return false;
      Diagonalization<Rat> dg = diagonalize(f);
      return !ternary_locally_solvable(dg.diagonal(0, 0), dg.diagonal(1, 1), dg.diagonal(2, 2),
                                       cert.obstruction->prime);
    }
    case ConicStatus::Inconclusive:
      return false;  // never emitted over Q
  }
  return false;
}

bool conic_certificate_recheck(const TernaryForm<QuadExt>& f,
                               const ConicCertificate<QuadExt>& cert) {
  switch (cert.status) {
    case ConicStatus::Solvable:
      return cert.point && !vec_is_zero(*cert.point) && f.eval(*cert.point).is_zero();
    case ConicStatus::Unsolvable: {
      if (!cert.obstruction) return false;
      Int a = 0;
      for (int i = 0; i < 3 && a == 0; ++i)
        for (int j = 0; j < 3 && a == 0; ++j) a = f.a(i, j).ext();
      Diagonalization<QuadExt> dg = diagonalize(f);
      QuadExt d[3] = {dg.diagonal(0, 0), dg.diagonal(1, 1), dg.diagonal(2, 2)};
      if (cert.obstruction->is_real()) {
        if (a <= 0) return false;
        for (int s : {1, -1}) {
          int sg = sign_embed(d[0], s, a);
          if (sign_embed(d[1], s, a) == sg && sign_embed(d[2], s, a) == sg) return true;
        }
        return false;
      }
      const Int& p = cert.obstruction->prime;
      if (a == 0 || jacobi(a, p) != 1) return false;
      auto r0 = sqrt_mod_prime(a, p);
      if (!r0) return false;
      for (const Int& r : {*r0, Int(p - *r0)}) {
        PadicPart parts[3];
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
          // integral rescale of the diagonal entry
          QuadExt c = d[i];
          Int dx = c.x().get_den(), dy = c.y().get_den(), den;
          mpz_lcm(den.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
          c = c * QuadExt(Rat(den * den));
          if (c.is_zero()) {
            ok = false;
            break;
          }
          parts[i] = padic_image(Rat(c.x()).get_num(), Rat(c.y()).get_num(), a, p, r);
        }
        if (ok && !locally_solvable_parts(parts, p)) return true;
      }
      return false;
    }
    case ConicStatus::Inconclusive:
      return true;  // nothing claimed, nothing to refute
  }
  return false;
}

}  // namespace dp8
