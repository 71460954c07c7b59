#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dp8/rational.hpp"

namespace dp8 {

// Complete signed factorization: n = sign * prod(prime^exp).
struct Factorization {
  int sign = 1;                              // +1 or -1
  std::vector<std::pair<Int, int>> primes;   // ascending, exponents >= 1

  Int reconstruct() const {
    Int v = sign;
    for (const auto& [p, e] : primes)
      for (int i = 0; i < e; ++i) v *= p;
    return v;
  }
};

bool is_probable_prime(const Int& n);

// Trial division up to 1e6, then Pollard rho (Brent) on the cofactors.
// Deterministic; rejects n == 0.
Factorization factor(const Int& n);

// d squarefree with n = d*m^2, sign of n preserved. Rejects n == 0.
Int squarefree_part(const Int& n);

// Largest m with m^2 | n (the cofactor of the squarefree part), m > 0.
Int square_divisor_part(const Int& n);

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(const Int& a, const Int& n);

// Square root of a modulo an odd prime p (Tonelli-Shanks), if one exists.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Solve t^2 == a (mod m) for squarefree m > 0 via CRT over the prime factors.
std::optional<Int> sqrt_mod_squarefree(const Int& a, const Int& m);

inline Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace dp8
