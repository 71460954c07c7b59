#pragma once

#include <optional>

#include "dp8/matrix.hpp"

namespace dp8 {

// Symmetric ternary quadratic form over Q or Q(sqrt(a)).
template <FieldElem K>
struct TernaryForm {
  Mat<K> a;  // 3x3 symmetric

  explicit TernaryForm(Mat<K> m) : a(std::move(m)) {
    if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("TernaryForm: 3x3 required");
    if (!(a == a.transpose())) throw std::invalid_argument("TernaryForm: symmetric matrix required");
    if (a.is_zero()) throw std::invalid_argument("TernaryForm: zero form");
  }

  K eval(const Vec<K>& p) const {
    K v(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v += a(i, j) * p[i] * p[j];
    return v;
  }
};

enum class ConicStatus { Solvable, Unsolvable, Inconclusive };

// A place of Q (or of the relevant completion data for Q(sqrt(a))):
// prime == 0 encodes the real place.
struct Place {
  Int prime = 0;
  bool is_real() const { return prime == 0; }
  std::string str() const { return is_real() ? "real" : "p=" + prime.get_str(); }
};

template <FieldElem K>
struct ConicCertificate {
  ConicStatus status = ConicStatus::Inconclusive;
  std::optional<Vec<K>> point;         // primitive, exact zero of the form
  std::optional<Place> obstruction;    // set for Unsolvable
  long height_bound = 0;               // search bound that was exhausted (Inconclusive)
};

// Invertible T with T^t A T diagonal; zero diagonal entries appear for
// rank-deficient input.
template <FieldElem K>
struct Diagonalization {
  Mat<K> transform;
  Mat<K> diagonal;
};

template <FieldElem K>
Diagonalization<K> diagonalize(const TernaryForm<K>& f);

// Legendre descent over Q: always decides, returning either an exact point or
// a local obstruction.
ConicCertificate<Rat> solve_conic_q(const TernaryForm<Rat>& f);

inline constexpr long kDefaultConicHeight = 20;

// Over Q(sqrt(a)): real-embedding and split-prime local tests, then bounded
// exhaustive search over Z[alpha] coordinates up to the given height. Returns
// the lexicographically first point in search order, an obstruction, or an
// explicit inconclusive verdict. The field argument pins the extension when
// every coefficient happens to be rational; without it, a fully rational form
// is delegated to the rational solver.
ConicCertificate<QuadExt> solve_conic_qext(const TernaryForm<QuadExt>& f,
                                           long height = kDefaultConicHeight);
ConicCertificate<QuadExt> solve_conic_qext(const TernaryForm<QuadExt>& f, const QuadField& field,
                                           long height);

// Hilbert symbol (a,b)_p for nonzero rationals; p = 0 means the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

// Whether diag(d0,d1,d2) (nonzero entries) is isotropic over Q_p (p prime)
// or over R (p = 0).
bool ternary_locally_solvable(const Rat& d0, const Rat& d1, const Rat& d2, const Int& p);

// Independent re-verification of a certificate against the original form.
bool conic_certificate_recheck(const TernaryForm<Rat>& f, const ConicCertificate<Rat>& cert);
bool conic_certificate_recheck(const TernaryForm<QuadExt>& f,
                               const ConicCertificate<QuadExt>& cert);

// Field-generic entry point; the height bound and tag only matter over
// Q(sqrt(a)).
inline ConicCertificate<Rat> solve_conic(const TernaryForm<Rat>& f, long, FTag<Rat> = {}) {
  return solve_conic_q(f);
}
inline ConicCertificate<QuadExt> solve_conic(const TernaryForm<QuadExt>& f, long height,
                                             FTag<QuadExt> tag = {}) {
  if (tag.field.a != 0) return solve_conic_qext(f, tag.field, height);
  return solve_conic_qext(f, height);
}

}  // namespace dp8
