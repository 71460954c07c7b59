#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dp8 {

// Exact rationals. mpq_class keeps values in lowest terms with positive
// denominator as long as every entry point canonicalizes, which the helpers
// below do.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "p/q", optional leading sign, arbitrary size.
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root when q is the square of a rational.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return rat(rn, rd);
}

inline bool is_rational_square(const Rat& q) { return rat_sqrt(q).has_value(); }

// Decimal digit count of the larger of |numerator|, denominator; the "size"
// statistic reported by the CLI.
inline size_t rat_digits(const Rat& q) {
  size_t n = mpz_sizeinbase(q.get_num().get_mpz_t(), 10);
  size_t d = mpz_sizeinbase(q.get_den().get_mpz_t(), 10);
  return n > d ? n : d;
}

}  // namespace dp8
