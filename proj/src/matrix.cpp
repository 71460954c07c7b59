#include "dp8/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dp8 {

namespace {
#ifdef _OPENMP
bool g_parallel = true;
#else
bool g_parallel = false;
#endif
}  // namespace

void set_parallel_elimination(bool on) {
#ifdef _OPENMP
  g_parallel = on;
#else
  (void)on;
  g_parallel = false;
#endif
}

bool parallel_elimination() { return g_parallel; }

namespace detail {

template <FieldElem K>
void eliminate_rows(Mat<K>& m, int p, int col, bool parallel) {
  const int rows = m.rows(), cols = m.cols();
  // Row updates are independent of each other; the pivot row is read-only
  // here, so the parallel and serial paths compute identical entries.
#ifdef _OPENMP
  if (parallel && size_t(rows) * (cols - col) > 2048) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) {
      if (i == p || fe_is_zero(m(i, col))) continue;
      K f = m(i, col);
      m(i, col) = K(0);
      for (int j = col + 1; j < cols; ++j)
        if (!fe_is_zero(m(p, j))) m(i, j) -= f * m(p, j);
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < rows; ++i) {
    if (i == p || fe_is_zero(m(i, col))) continue;
    K f = m(i, col);
    m(i, col) = K(0);
    for (int j = col + 1; j < cols; ++j)
      if (!fe_is_zero(m(p, j))) m(i, j) -= f * m(p, j);
  }
}

template void eliminate_rows<Rat>(Mat<Rat>&, int, int, bool);
template void eliminate_rows<QuadExt>(Mat<QuadExt>&, int, int, bool);

}  // namespace detail

}  // namespace dp8
