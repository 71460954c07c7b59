#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dp8/field.hpp"

namespace dp8 {

template <FieldElem K>
using Vec = std::vector<K>;

// Dense row-major matrix over an exact field.
template <FieldElem K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
  }
  Mat(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : init) {
      if (int(r.size()) != cols_) throw std::invalid_argument("Mat: ragged init");
      for (const auto& v : r) a_.push_back(v);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec<K>>& rows) {
    Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (int(rows[i].size()) != m.cols_) throw std::invalid_argument("Mat: ragged rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec<K> row(int i) const {
    return Vec<K>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
  }
  Vec<K> col(int j) const {
    Vec<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const Vec<K>& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!fe_is_zero(v)) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  K trace() const {
    K t(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator+(const Mat& l, const Mat& r) {
    l.check_same_shape(r);
    Mat m(l.rows_, l.cols_);
    for (size_t i = 0; i < l.a_.size(); ++i) m.a_[i] = l.a_[i] + r.a_[i];
    return m;
  }
  friend Mat operator-(const Mat& l, const Mat& r) {
    l.check_same_shape(r);
    Mat m(l.rows_, l.cols_);
    for (size_t i = 0; i < l.a_.size(); ++i) m.a_[i] = l.a_[i] - r.a_[i];
    return m;
  }
  Mat operator-() const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
  }
  friend Mat operator*(const K& s, const Mat& m) {
    Mat out(m.rows_, m.cols_);
    for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
    return out;
  }
  friend Mat operator*(const Mat& l, const Mat& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat m(l.rows_, r.cols_);
    for (int i = 0; i < l.rows_; ++i)
      for (int k = 0; k < l.cols_; ++k) {
        const K& lv = l(i, k);
        if (fe_is_zero(lv)) continue;
        for (int j = 0; j < r.cols_; ++j) {
          const K& rv = r(k, j);
          if (!fe_is_zero(rv)) m(i, j) += lv * rv;
        }
      }
    return m;
  }
  friend bool operator==(const Mat& l, const Mat& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.a_ == r.a_;
  }

  friend Vec<K> operator*(const Mat& m, const Vec<K>& v) {
    if (int(v.size()) != m.cols_) throw std::invalid_argument("Mat: dimension mismatch in apply");
    Vec<K> out(m.rows_, K(0));
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j)
        if (!fe_is_zero(m(i, j))) out[i] += m(i, j) * v[j];
    return out;
  }

  // [x, y] = xy - yx
  static Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <FieldElem K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <FieldElem K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <FieldElem K>
Vec<K> vec_scale(const K& s, const Vec<K>& a) {
  Vec<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

template <FieldElem K>
bool vec_is_zero(const Vec<K>& a) {
  for (const auto& v : a)
    if (!fe_is_zero(v)) return false;
  return true;
}

// Controls whether eliminations run the OpenMP path. The parallel and serial
// engines choose identical pivots and produce identical output.
void set_parallel_elimination(bool on);
bool parallel_elimination();

template <FieldElem K>
struct Rref {
  Mat<K> m;                      // reduced row echelon form, zero rows kept
  std::vector<int> pivot_cols;   // one per pivot row, ascending
  int rank = 0;
};

namespace detail {

// Eliminates column `col` against the normalized pivot row `p` for every row
// in [0, rows) except p. Shared by the serial and parallel engines.
template <FieldElem K>
void eliminate_rows(Mat<K>& m, int p, int col, bool parallel);

}  // namespace detail

template <FieldElem K>
Rref<K> rref(Mat<K> m, bool parallel) {
  Rref<K> out;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!fe_is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    K inv = K(1) / m(r, c);
    m(r, c) = K(1);
    for (int j = c + 1; j < cols; ++j)
      if (!fe_is_zero(m(r, j))) m(r, j) = inv * m(r, j);
    detail::eliminate_rows(m, r, c, parallel);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.m = std::move(m);
  return out;
}

template <FieldElem K>
Rref<K> rref(Mat<K> m) {
  return rref(std::move(m), parallel_elimination());
}

// Basis of {x : A x = 0} as rows, in reduced echelon form.
template <FieldElem K>
Mat<K> kernel(const Mat<K>& a) {
  Rref<K> r = rref(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Mat<K> basis(n - r.rank, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = K(1);
    for (int i = 0; i < r.rank; ++i) basis(row, r.pivot_cols[i]) = -r.m(i, f);
    ++row;
  }
  // already independent; re-reduce so subspace bases are canonical
  return rref(basis).m;
}

// Exact solution of A x = b, if consistent.
template <FieldElem K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Mat<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref<K> r = rref(aug);
  Vec<K> x(a.cols(), K(0));
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
    x[r.pivot_cols[i]] = r.m(i, a.cols());
  }
  return x;
}

// Simultaneous exact solve A X = B for all columns of B.
template <FieldElem K>
std::optional<Mat<K>> solve_multi(const Mat<K>& a, const Mat<K>& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_multi: dimension mismatch");
  Mat<K> aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  Rref<K> r = rref(aug);
  Mat<K> x(a.cols(), b.cols());
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] >= a.cols()) return std::nullopt;  // inconsistent column
    for (int j = 0; j < b.cols(); ++j) x(r.pivot_cols[i], j) = r.m(i, a.cols() + j);
  }
  return x;
}

template <FieldElem K>
int rank(const Mat<K>& a) {
  return rref(a).rank;
}

template <FieldElem K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: square matrix required");
  const int n = a.rows();
  Mat<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = K(1);
  }
  Rref<K> r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] >= n) return std::nullopt;
  Mat<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

template <FieldElem K>
K det(const Mat<K>& a) {
  if (!a.is_square()) throw std::invalid_argument("det: square matrix required");
  Mat<K> m = a;
  const int n = m.rows();
  K d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!fe_is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    K inv = K(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (fe_is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <FieldElem K>
size_t mat_max_digits(const Mat<K>& m) {
  size_t d = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d = std::max(d, fe_digits(m(i, j)));
  return d;
}

}  // namespace dp8
