#include "dp8/integers.hpp"

#include "doctest.h"
#include "dp8/rng.hpp"

using namespace dp8;

namespace {

// independent oracle: plain trial division
std::vector<std::pair<Int, int>> trial_division(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

TEST_CASE("factor basics") {
  Factorization f = factor(Int(12));
  CHECK(f.sign == 1);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0] == std::pair<Int, int>(Int(2), 2));
  CHECK(f.primes[1] == std::pair<Int, int>(Int(3), 1));

  Factorization m = factor(Int(-1));
  CHECK(m.sign == -1);
  CHECK(m.primes.empty());

  CHECK_THROWS_AS(factor(Int(0)), std::invalid_argument);
}

TEST_CASE("factor matches trial division on a Table-1-sized value") {
  Int n(720193);
  Factorization f = factor(n);
  CHECK(f.primes == trial_division(n));
  CHECK(f.reconstruct() == n);
}

TEST_CASE("factor reconstructs random integers up to 1e9") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    long v = rng.nonzero_integer(1000000000L);
    Factorization f = factor(Int(v));
    CHECK(f.reconstruct() == v);
    for (const auto& [p, e] : f.primes) {
      CHECK(e >= 1);
      CHECK(is_probable_prime(p));
    }
  }
}

TEST_CASE("factor handles large semiprimes via rho") {
  Int p(1000003), q(999983);
  Factorization f = factor(p * q);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0].first == q);
  CHECK(f.primes[1].first == p);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(Int(8)) == 2);
  CHECK(squarefree_part(Int(-12)) == -3);
  CHECK(squarefree_part(Int(1)) == 1);
  CHECK(squarefree_part(Int(720)) == 5);
  CHECK(square_divisor_part(Int(720)) == 12);
  CHECK_THROWS_AS(squarefree_part(Int(0)), std::invalid_argument);
}

TEST_CASE("sqrt_mod_prime") {
  // 2 is a QR mod 7 (3^2=2), 3 is not
  auto r = sqrt_mod_prime(Int(2), Int(7));
  REQUIRE(r.has_value());
  CHECK((*r * *r) % 7 == 2);
  CHECK(!sqrt_mod_prime(Int(3), Int(7)).has_value());

  // p == 1 mod 8 exercises the full Tonelli-Shanks loop
  auto s = sqrt_mod_prime(Int(10), Int(1009));
  if (s) CHECK((*s * *s) % 1009 == 10);

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Int p(1009);
    Int a = mod_positive(Int(rng.integer(100000)), p);
    if (a == 0) continue;
    auto root = sqrt_mod_prime(a, p);
    if (root)
      CHECK((*root * *root) % p == a);
    else
      CHECK(jacobi(a, p) == -1);
  }
}

TEST_CASE("sqrt_mod_squarefree via CRT") {
  Int m = Int(3) * 5 * 7;
  auto r = sqrt_mod_squarefree(Int(4), m);
  REQUIRE(r.has_value());
  CHECK((*r * *r) % m == 4);
  // 2 is a non-residue mod 5
  CHECK(!sqrt_mod_squarefree(Int(2), Int(5)).has_value());
}
