#pragma once

#include <vector>

#include "dp8/matrix.hpp"

namespace dp8 {

// Linear subspace of K^n held in reduced row echelon form, so equality of
// subspaces is plain comparison of the basis matrices.
template <FieldElem K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<Vec<K>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Rref<K> r = rref(Mat<K>::from_rows(vectors));
    Mat<K> b(r.rank, ambient);
    for (int i = 0; i < r.rank; ++i)
      for (int j = 0; j < ambient; ++j) b(i, j) = r.m(i, j);
    s.basis_ = std::move(b);
    return s;
  }
  static Subspace row_space(const Mat<K>& m) {
    std::vector<Vec<K>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return span(m.cols(), rows);
  }
  static Subspace full(int ambient) { return row_space(Mat<K>::identity(ambient)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }
  Vec<K> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

  // Residue of v after eliminating against the echelon basis; zero iff v lies
  // in the subspace.
  Vec<K> reduce(Vec<K> v) const {
    for (int i = 0; i < basis_.rows(); ++i) {
      int p = pivot_col(i);
      if (fe_is_zero(v[p])) continue;
      K f = v[p];
      for (int j = p; j < ambient_; ++j)
        if (!fe_is_zero(basis_(i, j))) v[j] -= f * basis_(i, j);
    }
    return v;
  }

  // Coordinates of v in the echelon basis, if v belongs to the subspace.
  std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
    Vec<K> coeff(basis_.rows(), K(0));
    Vec<K> w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
      int p = pivot_col(i);
      if (fe_is_zero(w[p])) continue;
      coeff[i] = w[p];
      K f = w[p];
      for (int j = p; j < ambient_; ++j)
        if (!fe_is_zero(basis_(i, j))) w[j] -= f * basis_(i, j);
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coeff;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vec<K>> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (int i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
    return span(ambient_, rows);
  }

  // Indices that are not pivot columns; unit vectors there complete the basis.
  std::vector<int> free_columns() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (int i = 0; i < basis_.rows(); ++i) is_pivot[pivot_col(i)] = true;
    std::vector<int> free;
    for (int j = 0; j < ambient_; ++j)
      if (!is_pivot[j]) free.push_back(j);
    return free;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int pivot_col(int i) const {
    for (int j = 0; j < ambient_; ++j)
      if (!fe_is_zero(basis_(i, j))) return j;
    throw std::logic_error("Subspace: zero basis row");
  }

  int ambient_ = 0;
  Mat<K> basis_;
};

}  // namespace dp8
