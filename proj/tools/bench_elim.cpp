// Compares the serial and OpenMP elimination engines on random dense rational
// systems of the sizes the pipeline produces, and checks they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "dp8/matrix.hpp"
#include "dp8/rng.hpp"

using namespace dp8;

namespace {

Mat<Rat> random_system(Rng& rng, int rows, int cols, long bound) {
  Mat<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rat(rng.integer(bound));
  return m;
}

double time_rref(const Mat<Rat>& m, bool parallel, int reps) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  for (int i = 0; i < reps; ++i) {
    auto r = rref(m, parallel);
    (void)r;
  }
  auto t1 = clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int rows = argc > 1 ? std::atoi(argv[1]) : 120;
  int cols = argc > 2 ? std::atoi(argv[2]) : 81;
  long bound = argc > 3 ? std::atol(argv[3]) : 1000;
  int reps = argc > 4 ? std::atoi(argv[4]) : 3;

  Rng rng(42);
  Mat<Rat> m = random_system(rng, rows, cols, bound);

  auto serial = rref(m, false);
  auto parallel = rref(m, true);
  if (!(serial.m == parallel.m) || serial.pivot_cols != parallel.pivot_cols) {
    std::fprintf(stderr, "engines disagree\n");
    return 1;
  }

  double ts = time_rref(m, false, reps);
  double tp = time_rref(m, true, reps);
  std::printf("rref %dx%d entries<=%ld  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              rows, cols, bound, ts, tp, ts / tp);
  return 0;
}
