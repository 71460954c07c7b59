#include "dp8/upoly.hpp"

namespace dp8 {

RationalRoots rational_roots(const UPoly<Rat>& p) {
  RationalRoots out;
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  UPoly<Rat> f = p.monic();
  // deflate roots t=0 first
  while (f.degree() > 0 && f.coeff(0) == 0) {
    if (out.roots.empty() || out.roots.back() != 0) out.roots.push_back(Rat(0));
    f = f.divmod(UPoly<Rat>({Rat(0), Rat(1)})).first;
  }
  if (f.degree() == 0) {
    out.splits = true;
    return out;
  }
  // clear denominators: integer polynomial c0 + ... + cd t^d
  Int den = 1;
  for (int i = 0; i <= f.degree(); ++i) {
    Int d = f.coeff(i).get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<Int> c(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    Rat v = f.coeff(i) * Rat(den);
    c[i] = v.get_num();
  }
  // candidates p/q with p | c0, q | lead
  auto divisors = [](const Int& n) {
    Factorization fac = factor(n);
    std::vector<Int> divs{1};
    for (const auto& [prime, e] : fac.primes) {
      size_t sz = divs.size();
      Int pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= prime;
        for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
      }
    }
    return divs;
  };
  std::vector<Int> ps = divisors(c[0]);
  std::vector<Int> qs = divisors(c.back());
  for (const Int& num : ps)
    for (const Int& q : qs)
      for (int sign : {1, -1}) {
        Rat cand = rat(sign * num, q);
        while (f.degree() > 0 && f.eval(cand) == 0) {
          out.roots.push_back(cand);
          f = f.divmod(UPoly<Rat>({-cand, Rat(1)})).first;
        }
      }
  // dedupe
  std::sort(out.roots.begin(), out.roots.end(), [](const Rat& a, const Rat& b) { return a < b; });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  out.splits = f.degree() == 0;
  return out;
}

}  // namespace dp8
