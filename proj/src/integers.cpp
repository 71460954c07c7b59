#include "dp8/integers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dp8 {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> sieve(kTrialBound + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

Int pollard_brent(const Int& n) {
  // Brent's cycle variant with deterministic parameters; n odd composite,
  // no factor below the trial bound.
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys = 0;
    unsigned long r = 1;
    const unsigned long batch = 128;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = f(ys);
        Int diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    // unlucky polynomial, retry with next c
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  // 2 = definitely prime; GMP uses Miller-Rabin + BPSW internally.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factor(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor: input 0 rejected");
  Factorization f;
  Int m = n;
  if (m < 0) {
    f.sign = -1;
    m = -m;
  }
  std::map<Int, int> acc;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      acc[Int(p)] += 1;
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) factor_into(m, acc);
  f.primes.assign(acc.begin(), acc.end());
  return f;
}

Int squarefree_part(const Int& n) {
  Factorization f = factor(n);
  Int d = f.sign;
  for (const auto& [p, e] : f.primes)
    if (e % 2 == 1) d *= p;
  return d;
}

Int square_divisor_part(const Int& n) {
  Factorization f = factor(n);
  Int m = 1;
  for (const auto& [p, e] : f.primes)
    for (int i = 0; i < e / 2; ++i) m *= p;
  return m;
}

int jacobi(const Int& a, const Int& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
  Int r = mod_positive(a, p);
  if (r == 0) return Int(0);
  if (p == 2) return r;  // 0,1 are their own roots mod 2
  if (jacobi(r, p) != 1) return std::nullopt;
  // Tonelli-Shanks. Deterministic non-residue scan.
  Int q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  auto powm = [&](Int base, Int exp) {
    Int out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return out;
  };
  if (s == 1) return powm(r, (p + 1) / 4);
  Int z = 2;
  while (jacobi(z, p) != -1) ++z;
  Int m(static_cast<long>(s));
  Int c = powm(z, q);
  Int t = powm(r, q);
  Int x = powm(r, (q + 1) / 2);
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

std::optional<Int> sqrt_mod_squarefree(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("sqrt_mod_squarefree: modulus must be positive");
  if (m == 1) return Int(0);
  Factorization f = factor(m);
  Int x = 0, mod = 1;
  for (const auto& [p, e] : f.primes) {
    if (e != 1) throw std::invalid_argument("sqrt_mod_squarefree: modulus not squarefree");
    auto rp = sqrt_mod_prime(a, p);
    if (!rp) return std::nullopt;
    // CRT combine x (mod) with *rp (p)
    Int pinv;
    if (!mpz_invert(pinv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t()))
      throw std::logic_error("sqrt_mod_squarefree: non-coprime CRT moduli");
    Int diff = mod_positive(*rp - x, p);
    x = x + mod * (diff * pinv % p);
    mod *= p;
  }
  return mod_positive(x, mod);
}

}  // namespace dp8
