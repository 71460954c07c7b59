#pragma once

#include <optional>
#include <vector>

#include "dp8/conic.hpp"
#include "dp8/subspace.hpp"
#include "dp8/upoly.hpp"

namespace dp8 {

// Finite-dimensional Lie algebra over K given by structure constants in a
// fixed basis, optionally carrying a faithful matrix realization of that
// basis. Construction validates antisymmetry, the Jacobi identity, and
// consistency of the realization with the structure constants.
template <FieldElem K>
class LieAlgebra {
 public:
  static LieAlgebra from_structure_constants(std::vector<std::vector<Vec<K>>> sc) {
    LieAlgebra l;
    l.dim_ = int(sc.size());
    l.sc_ = std::move(sc);
    l.validate();
    return l;
  }

  // Derives structure constants from linearly independent matrices.
  static LieAlgebra from_realization(std::vector<Mat<K>> basis) {
    LieAlgebra l;
    l.dim_ = int(basis.size());
    const int n = basis.empty() ? 0 : basis[0].rows();
    Mat<K> cols(n * n, l.dim_);
    for (int k = 0; k < l.dim_; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cols(i * n + j, k) = basis[k](i, j);
    if (rank(cols) != l.dim_)
      throw std::invalid_argument("LieAlgebra: realization matrices are dependent");
    Mat<K> rhs(n * n, l.dim_ * (l.dim_ - 1) / 2);
    int col = 0;
    for (int p = 0; p < l.dim_; ++p)
      for (int q = p + 1; q < l.dim_; ++q, ++col) {
        Mat<K> br = Mat<K>::bracket(basis[p], basis[q]);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) rhs(i * n + j, col) = br(i, j);
      }
    auto coeff = solve_multi(cols, rhs);
    if (!coeff) throw std::invalid_argument("LieAlgebra: brackets leave the span");
    l.sc_.assign(l.dim_, std::vector<Vec<K>>(l.dim_, Vec<K>(l.dim_, K(0))));
    col = 0;
    for (int p = 0; p < l.dim_; ++p)
      for (int q = p + 1; q < l.dim_; ++q, ++col)
        for (int k = 0; k < l.dim_; ++k) {
          l.sc_[p][q][k] = (*coeff)(k, col);
          l.sc_[q][p][k] = -(*coeff)(k, col);
        }
    l.realization_ = std::move(basis);
    l.validate();
    return l;
  }

  int dim() const { return dim_; }
  const std::vector<std::vector<Vec<K>>>& sc() const { return sc_; }
  bool has_realization() const { return realization_.has_value(); }
  const std::vector<Mat<K>>& realization() const { return *realization_; }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out(dim_, K(0));
    for (int i = 0; i < dim_; ++i) {
      if (fe_is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (fe_is_zero(y[j])) continue;
        K c = x[i] * y[j];
        for (int k = 0; k < dim_; ++k)
          if (!fe_is_zero(sc_[i][j][k])) out[k] += c * sc_[i][j][k];
      }
    }
    return out;
  }

  // matrix of y -> [x, y]
  Mat<K> ad(const Vec<K>& x) const {
    Mat<K> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      Vec<K> e(dim_, K(0));
      e[j] = K(1);
      Vec<K> br = bracket(x, e);
      for (int k = 0; k < dim_; ++k) m(k, j) = br[k];
    }
    return m;
  }

  Mat<K> ad_basis(int i) const {
    Vec<K> e(dim_, K(0));
    e[i] = K(1);
    return ad(e);
  }

  // image of a coordinate vector in the matrix realization
  Mat<K> realize(const Vec<K>& x) const {
    if (!realization_) throw std::logic_error("LieAlgebra: no realization");
    const auto& b = *realization_;
    Mat<K> m(b[0].rows(), b[0].cols());
    for (int i = 0; i < dim_; ++i)
      if (!fe_is_zero(x[i])) m = m + x[i] * b[i];
    return m;
  }

  // Promotes a rational algebra to the quadratic extension.
  LieAlgebra<QuadExt> extend_scalars() const
    requires std::same_as<K, Rat>
  {
    std::vector<std::vector<Vec<QuadExt>>> sc(dim_,
                                              std::vector<Vec<QuadExt>>(dim_, Vec<QuadExt>(dim_)));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) sc[i][j][k] = QuadExt(sc_[i][j][k]);
    return LieAlgebra<QuadExt>::from_structure_constants(std::move(sc));
  }

  void validate() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          if (sc_[i][j][k] != -sc_[j][i][k])
            throw std::invalid_argument("LieAlgebra: antisymmetry violated");
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          Vec<K> ei(dim_, K(0)), ej(dim_, K(0)), ek(dim_, K(0));
          ei[i] = K(1);
          ej[j] = K(1);
          ek[k] = K(1);
          Vec<K> s = vec_add(bracket(bracket(ei, ej), ek),
                             vec_add(bracket(bracket(ej, ek), ei), bracket(bracket(ek, ei), ej)));
          if (!vec_is_zero(s)) throw std::invalid_argument("LieAlgebra: Jacobi identity violated");
        }
    if (realization_) {
      const auto& b = *realization_;
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          Mat<K> br = Mat<K>::bracket(b[i], b[j]);
          Vec<K> c(dim_, K(0));
          for (int k = 0; k < dim_; ++k) c[k] = sc_[i][j][k];
          if (!(realize(c) == br))
            throw std::invalid_argument("LieAlgebra: realization does not match brackets");
        }
    }
  }

 private:
  int dim_ = 0;
  std::vector<std::vector<Vec<K>>> sc_;
  std::optional<std::vector<Mat<K>>> realization_;
};

// square root inside the coefficient field; the extension hint supplies the
// ambient field when the value itself is rational
inline std::optional<Rat> field_sqrt(const Rat& v, const Int&) { return rat_sqrt(v); }
inline std::optional<QuadExt> field_sqrt(const QuadExt& v, const Int& ext_hint) {
  if (v.is_zero()) return QuadExt(0);
  Int a = v.ext() != 0 ? v.ext() : ext_hint;
  if (a == 0) {
    auto r = rat_sqrt(v.x());
    if (!r) return std::nullopt;
    return QuadExt(*r);
  }
  return qext_sqrt_in(QuadField(a), v);
}

template <FieldElem K>
struct Sl2Triple {
  Vec<K> e, h, f;
};

template <FieldElem K>
struct LeviData {
  Subspace<K> nilradical;
  Subspace<K> radical;
  Subspace<K> levi;
};

template <FieldElem K>
struct Sl2Result {
  std::optional<Sl2Triple<K>> triple;
  ConicCertificate<K> certificate;  // outcome of the Killing isotropy conic
};

// --------------------------------------------------------------------------
// Basic invariants
// --------------------------------------------------------------------------

template <FieldElem K>
Mat<K> killing_form(const LieAlgebra<K>& l) {
  std::vector<Mat<K>> ads;
  for (int i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
  Mat<K> k(l.dim(), l.dim());
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i; j < l.dim(); ++j) {
      K t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

template <FieldElem K>
bool is_semisimple(const LieAlgebra<K>& l) {
  if (l.dim() == 0) return true;
  return !fe_is_zero(det(killing_form(l)));
}

template <FieldElem K>
Subspace<K> centre(const LieAlgebra<K>& l) {
  const int d = l.dim();
  Mat<K> sys(d * d, d);
  for (int j = 0; j < d; ++j) {
    Mat<K> adj = l.ad_basis(j);
    // [x, e_j] = -ad(e_j) x
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i) sys(j * d + k, i) = adj(k, i);
  }
  return Subspace<K>::row_space(kernel(sys));
}

template <FieldElem K>
Subspace<K> derived_subalgebra(const LieAlgebra<K>& l) {
  std::vector<Vec<K>> gens;
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j) {
      Vec<K> v(l.dim());
      for (int k = 0; k < l.dim(); ++k) v[k] = l.sc()[i][j][k];
      gens.push_back(std::move(v));
    }
  return Subspace<K>::span(l.dim(), gens);
}

// Basis of the centralizer of ad L in gl(L), identity first when present.
template <FieldElem K>
std::vector<Mat<K>> centroid(const LieAlgebra<K>& l) {
  const int d = l.dim();
  std::vector<Mat<K>> ads;
  for (int i = 0; i < d; ++i) ads.push_back(l.ad_basis(i));
  Mat<K> sys(d * d * d, d * d);
  for (int a = 0; a < d; ++a) {
    const Mat<K>& m = ads[a];
    // (X m - m X)[r][s] = sum_q X[r][q] m[q][s] - sum_p m[r][p] X[p][s]
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) {
        int row = (a * d + r) * d + s;
        for (int q = 0; q < d; ++q) sys(row, r * d + q) += m(q, s);
        for (int p = 0; p < d; ++p) sys(row, p * d + s) -= m(r, p);
      }
  }
  Mat<K> ker = kernel(sys);
  // re-span with the identity first so scalars are always basis element 0
  std::vector<Vec<K>> vecs;
  Vec<K> id(d * d, K(0));
  for (int i = 0; i < d; ++i) id[i * d + i] = K(1);
  Subspace<K> space = Subspace<K>::row_space(ker);
  bool has_id = space.contains(id);
  if (has_id) vecs.push_back(id);
  Subspace<K> acc = has_id ? Subspace<K>::span(d * d, {id}) : Subspace<K>(d * d);
  for (int i = 0; i < ker.rows(); ++i) {
    Vec<K> v = ker.row(i);
    if (acc.contains(v)) continue;
    vecs.push_back(v);
    acc = acc.sum(Subspace<K>::span(d * d, {v}));
  }
  std::vector<Mat<K>> out;
  for (const auto& v : vecs) {
    Mat<K> m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m(r, c) = v[r * d + c];
    out.push_back(std::move(m));
  }
  return out;
}

// Matrix of the reduction-residue map of a subspace (zero exactly on it).
template <FieldElem K>
Mat<K> reduce_matrix(const Subspace<K>& s) {
  const int d = s.ambient_dim();
  Mat<K> m(d, d);
  for (int j = 0; j < d; ++j) {
    Vec<K> e(d, K(0));
    e[j] = K(1);
    Vec<K> r = s.reduce(e);
    for (int i = 0; i < d; ++i) m(i, j) = r[i];
  }
  return m;
}

template <FieldElem K>
Subspace<K> normalizer(const LieAlgebra<K>& l, const Subspace<K>& s) {
  const int d = l.dim();
  if (s.dim() == 0) return Subspace<K>::full(d);
  Mat<K> red = reduce_matrix(s);
  Mat<K> sys(s.dim() * d, d);
  for (int j = 0; j < s.dim(); ++j) {
    Mat<K> cond = red * (K(-1) * l.ad(s.basis_vector(j)));  // x -> [x, s_j] mod S
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) sys(j * d + r, c) = cond(r, c);
  }
  return Subspace<K>::row_space(kernel(sys));
}

// Solvable radical via the Killing-orthogonal complement of [L, L]
// (characteristic zero).
template <FieldElem K>
Subspace<K> radical(const LieAlgebra<K>& l) {
  Subspace<K> der = derived_subalgebra(l);
  if (der.dim() == 0) return Subspace<K>::full(l.dim());
  Mat<K> kf = killing_form(l);
  Mat<K> sys(der.dim(), l.dim());
  for (int i = 0; i < der.dim(); ++i) {
    Vec<K> row = kf * der.basis_vector(i);
    for (int j = 0; j < l.dim(); ++j) sys(i, j) = row[j];
  }
  return Subspace<K>::row_space(kernel(sys));
}

namespace lie_detail {

template <FieldElem K>
Subspace<K> bracket_span(const LieAlgebra<K>& l, const Subspace<K>& a, const Subspace<K>& b) {
  std::vector<Vec<K>> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      gens.push_back(l.bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace<K>::span(l.dim(), gens);
}

// quotient of l by an ideal: algebra on the free columns, with projection and
// lift maps between coordinates
template <FieldElem K>
struct Quotient {
  LieAlgebra<K> algebra;
  Mat<K> project;  // (d - r) x d
  Mat<K> lift;     // d x (d - r)
};

template <FieldElem K>
Quotient<K> quotient(const LieAlgebra<K>& l, const Subspace<K>& ideal) {
  const int d = l.dim();
  std::vector<int> free = ideal.free_columns();
  const int q = int(free.size());
  Mat<K> proj(q, d), lift(d, q);
  Mat<K> red = reduce_matrix(ideal);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < d; ++j) proj(i, j) = red(free[i], j);
    lift(free[i], i) = K(1);
  }
  std::vector<std::vector<Vec<K>>> sc(q, std::vector<Vec<K>>(q, Vec<K>(q, K(0))));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec<K> br = proj * l.bracket(lift.col(i), lift.col(j));
      sc[i][j] = br;
    }
  return {LieAlgebra<K>::from_structure_constants(std::move(sc)), proj, lift};
}

// subalgebra on the canonical basis of a bracket-closed subspace
template <FieldElem K>
struct Sub {
  LieAlgebra<K> algebra;
  Mat<K> embed;  // d x s, columns are the basis vectors
};

template <FieldElem K>
std::optional<Sub<K>> subalgebra(const LieAlgebra<K>& l, const Subspace<K>& s) {
  const int d = l.dim(), m = s.dim();
  Mat<K> embed(d, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) embed(i, j) = s.basis_vector(j)[i];
  std::vector<std::vector<Vec<K>>> sc(m, std::vector<Vec<K>>(m, Vec<K>(m, K(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto c = s.coordinates(l.bracket(s.basis_vector(i), s.basis_vector(j)));
      if (!c) return std::nullopt;  // not bracket-closed
      sc[i][j] = *c;
    }
  return Sub<K>{LieAlgebra<K>::from_structure_constants(std::move(sc)), embed};
}

}  // namespace lie_detail

// Maximal ideal of the radical acting ad-nilpotently. [L, R] is always
// contained in it; the remainder is grown by nilpotency tests on complement
// basis vectors. Sound for the small solvable radicals arising here; the
// pipeline re-verifies everything downstream.
template <FieldElem K>
Subspace<K> nilradical(const LieAlgebra<K>& l) {
  Subspace<K> rad = radical(l);
  Subspace<K> full = Subspace<K>::full(l.dim());
  Subspace<K> n = lie_detail::bracket_span(l, full, rad);
  for (;;) {
    bool grew = false;
    for (int i = 0; i < rad.dim(); ++i) {
      Vec<K> v = n.reduce(rad.basis_vector(i));
      if (vec_is_zero(v)) continue;
      if (is_nilpotent(l.ad(v))) {
        n = n.sum(Subspace<K>::span(l.dim(), {v}));
        grew = true;
      }
    }
    if (!grew) break;
  }
  return n;
}

// Levi complement via Levi-Malcev: induct down the derived series of the
// radical; in the abelian-radical step the correction terms solve a linear
// (Whitehead) system. Returns nothing when the input is too degenerate for
// the construction (callers treat that as invalid input).
template <FieldElem K>
std::optional<Subspace<K>> levi_subalgebra(const LieAlgebra<K>& l) {
  Subspace<K> rad = radical(l);
  if (rad.dim() == 0) return Subspace<K>::full(l.dim());
  if (rad.dim() == l.dim()) return Subspace<K>(l.dim());
  Subspace<K> rad2 = lie_detail::bracket_span(l, rad, rad);
  if (rad2.dim() == 0) {
    // abelian radical: pick the complement spanned by free coordinates and
    // correct it inside the radical
    auto q = lie_detail::quotient(l, rad);
    const int m = q.algebra.dim(), r = rad.dim(), d = l.dim();
    std::vector<Vec<K>> x;
    for (int i = 0; i < m; ++i) x.push_back(q.lift.col(i));
    // unknowns: a_1..a_m in radical coordinates (m*r of them)
    std::vector<std::pair<int, int>> eqs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) eqs.emplace_back(i, j);
    Mat<K> sys(int(eqs.size()) * r, m * r);
    Vec<K> rhs_all(int(eqs.size()) * r, K(0));
    for (size_t t = 0; t < eqs.size(); ++t) {
      auto [i, j] = eqs[t];
      // defect: [x_i, x_j] - lift([x_i,x_j] in quotient) lies in rad
      Vec<K> br = l.bracket(x[i], x[j]);
      Vec<K> cq = q.project * br;
      Vec<K> defect = vec_sub(br, q.lift * cq);
      auto dc = rad.coordinates(defect);
      if (!dc) return std::nullopt;
      // condition: defect + [x_i, a_j] - [x_j, a_i] - sum_k cq_k a_k = 0
      for (int rr = 0; rr < r; ++rr) rhs_all[int(t) * r + rr] = -(*dc)[rr];
      for (int k = 0; k < r; ++k) {
        Vec<K> bk = rad.basis_vector(k);
        auto put = [&](int var_owner, const Vec<K>& contrib, const K& scale) {
          auto cc = rad.coordinates(contrib);
          if (!cc) throw std::logic_error("levi: correction left the radical");
          for (int rr = 0; rr < r; ++rr)
            sys(int(t) * r + rr, var_owner * r + k) += scale * (*cc)[rr];
        };
        put(j, l.bracket(x[i], bk), K(1));
        put(i, l.bracket(x[j], bk), K(-1));
      }
      for (int kk = 0; kk < m; ++kk) {
        const K& c = q.algebra.sc()[i][j][kk];
        if (fe_is_zero(c)) continue;
        for (int rr = 0; rr < r; ++rr) sys(int(t) * r + rr, kk * r + rr) -= c;
      }
    }
    auto sol = solve(sys, rhs_all);
    if (!sol) return std::nullopt;
    std::vector<Vec<K>> basis;
    for (int i = 0; i < m; ++i) {
      Vec<K> corr(d, K(0));
      for (int k = 0; k < r; ++k)
        corr = vec_add(corr, vec_scale((*sol)[i * r + k], rad.basis_vector(k)));
      basis.push_back(vec_add(x[i], corr));
    }
    return Subspace<K>::span(d, basis);
  }
  // non-abelian radical: pass to L / [R,R], lift, and recurse on the preimage
  auto q = lie_detail::quotient(l, rad2);
  auto levi_q = levi_subalgebra(q.algebra);
  if (!levi_q) return std::nullopt;
  std::vector<Vec<K>> span_t;
  for (int i = 0; i < levi_q->dim(); ++i) span_t.push_back(q.lift * levi_q->basis_vector(i));
  for (int i = 0; i < rad2.dim(); ++i) span_t.push_back(rad2.basis_vector(i));
  Subspace<K> t_span = Subspace<K>::span(l.dim(), span_t);
  auto sub = lie_detail::subalgebra(l, t_span);
  if (!sub) return std::nullopt;
  auto levi_t = levi_subalgebra(sub->algebra);
  if (!levi_t) return std::nullopt;
  std::vector<Vec<K>> out;
  for (int i = 0; i < levi_t->dim(); ++i) out.push_back(sub->embed * levi_t->basis_vector(i));
  return Subspace<K>::span(l.dim(), out);
}

// Restriction of the bracket to a bracket-closed subspace, with the
// column-matrix mapping subalgebra coordinates back into l.
template <FieldElem K>
struct SubalgebraData {
  LieAlgebra<K> algebra;
  Mat<K> embed;
};

template <FieldElem K>
std::optional<SubalgebraData<K>> restrict_to_subalgebra(const LieAlgebra<K>& l,
                                                        const Subspace<K>& s) {
  auto sub = lie_detail::subalgebra(l, s);
  if (!sub) return std::nullopt;
  return SubalgebraData<K>{std::move(sub->algebra), std::move(sub->embed)};
}

template <FieldElem K>
std::optional<LeviData<K>> levi_data(const LieAlgebra<K>& l) {
  LeviData<K> out;
  out.radical = radical(l);
  out.nilradical = nilradical(l);
  auto levi = levi_subalgebra(l);
  if (!levi) return std::nullopt;
  out.levi = *levi;
  return out;
}

// Splits a semisimple algebra into two complementary 3-dimensional ideals via
// a degree-2 centroid element, when the minimal polynomial splits over K.
template <FieldElem K>
std::optional<std::pair<Subspace<K>, Subspace<K>>> decompose_two_ideals(const LieAlgebra<K>& l,
                                                                        FTag<K> tag = {}) {
  if (l.dim() != 6 || !is_semisimple(l))
    throw std::invalid_argument("decompose_two_ideals: semisimple dimension 6 required");
  std::vector<Mat<K>> cent = centroid(l);
  if (cent.size() < 2) return std::nullopt;
  const Mat<K>& c = cent[1];  // identity-reduced, hence non-scalar
  UPoly<K> mp = minimal_polynomial(c);
  if (mp.degree() != 2) return std::nullopt;
  // roots of t^2 + p t + q
  K p = mp.coeff(1), q0 = mp.coeff(0);
  K disc = p * p - K(4) * q0;
  std::optional<K> sd = field_sqrt(disc, tag.ext());
  if (!sd) return std::nullopt;
  K r1 = (-p + *sd) / K(2), r2 = (-p - *sd) / K(2);
  if (r1 == r2) return std::nullopt;
  if (fe_less(r2, r1)) std::swap(r1, r2);
  Mat<K> m1 = c, m2 = c;
  for (int i = 0; i < l.dim(); ++i) {
    m1(i, i) -= r1;
    m2(i, i) -= r2;
  }
  Subspace<K> i1 = Subspace<K>::row_space(kernel(m1));
  Subspace<K> i2 = Subspace<K>::row_space(kernel(m2));
  if (i1.dim() != 3 || i2.dim() != 3) return std::nullopt;
  // deterministic ordering: lexicographically smaller canonical basis first
  auto lex_less = [&](const Subspace<K>& a, const Subspace<K>& b) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.ambient_dim(); ++j) {
        const K &x = a.basis()(i, j), &y = b.basis()(i, j);
        if (!(x == y)) return fe_less(x, y);
      }
    return false;
  };
  if (lex_less(i2, i1)) std::swap(i1, i2);
  return std::make_pair(i1, i2);
}

// Chevalley triple construction for 3-dimensional semisimple algebras: find a
// Killing-isotropic vector (conic solve), then e = a, h = -2b with [a,b] = a,
// f = the -2 eigenvector of ad(h) scaled so [e,f] = h.
template <FieldElem K>
Sl2Result<K> identify_sl2(const LieAlgebra<K>& l, long conic_height = kDefaultConicHeight,
                          FTag<K> tag = {}) {
  if (l.dim() != 3 || !is_semisimple(l))
    throw std::invalid_argument("identify_sl2: semisimple dimension 3 required");
  Sl2Result<K> out;
  Mat<K> kf = killing_form(l);
  out.certificate = solve_conic(TernaryForm<K>(kf), conic_height, tag);
  if (out.certificate.status != ConicStatus::Solvable) return out;
  Vec<K> a = *out.certificate.point;
  Mat<K> ad_a = l.ad(a);
  if (!is_nilpotent(ad_a)) return out;  // cannot happen for genuine twists
  auto b = solve(ad_a, a);
  if (!b) return out;
  Vec<K> e = a;
  Vec<K> h = vec_scale(K(-2), *b);
  Mat<K> f_space = eigenspace(l.ad(h), K(-2));
  if (f_space.rows() != 1) return out;
  Vec<K> f0 = f_space.row(0);
  // [e, f0] must be a nonzero multiple of h
  Vec<K> ef = l.bracket(e, f0);
  Mat<K> sys(l.dim(), 1);
  for (int i = 0; i < l.dim(); ++i) sys(i, 0) = h[i];
  auto gamma = solve(sys, ef);
  if (!gamma || fe_is_zero((*gamma)[0])) return out;
  Vec<K> f = vec_scale(K(K(1) / (*gamma)[0]), f0);
  Sl2Triple<K> t{e, h, f};
  if (!(l.bracket(t.h, t.e) == vec_scale(K(2), t.e))) return out;
  if (!(l.bracket(t.h, t.f) == vec_scale(K(-2), t.f))) return out;
  if (!(l.bracket(t.e, t.f) == t.h)) return out;
  out.triple = t;
  return out;
}

}  // namespace dp8
