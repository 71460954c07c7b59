#include "dp8/conic.hpp"

#include "doctest.h"
#include "dp8/rng.hpp"

using namespace dp8;

namespace {

Mat<Rat> diag3(long a, long b, long c) {
  Mat<Rat> m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// brute force oracle: x^2 + y^2 - 3z^2 has no primitive solution mod 9
bool has_primitive_solution_mod9_form_113() {
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z) {
        if (x % 3 == 0 && y % 3 == 0 && z % 3 == 0) continue;
        if ((x * x + y * y - 3 * z * z) % 9 == 0) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("diagonalize examples") {
  // already diagonal: untouched
  TernaryForm<Rat> d(diag3(2, -1, 5));
  auto dg = diagonalize(d);
  CHECK(dg.transform == Mat<Rat>::identity(3));
  CHECK(dg.diagonal == d.a);

  // parabola y0 y2 - y1^2: signature (+,-,-) up to order
  Mat<Rat> par(3, 3);
  par(0, 2) = par(2, 0) = rat(1, 2);
  par(1, 1) = -1;
  TernaryForm<Rat> fp(par);
  auto dgp = diagonalize(fp);
  CHECK(dgp.transform.transpose() * fp.a * dgp.transform == dgp.diagonal);
  CHECK(det(dgp.transform) != 0);
  int pos = 0, neg = 0;
  for (int i = 0; i < 3; ++i) {
    if (dgp.diagonal(i, i) > 0) ++pos;
    if (dgp.diagonal(i, i) < 0) ++neg;
  }
  CHECK(pos == 1);
  CHECK(neg == 2);

  // rank 2 hyperbolic x*y: diagonal signs (+,-,0)
  Mat<Rat> hyp(3, 3);
  hyp(0, 1) = hyp(1, 0) = rat(1, 2);
  TernaryForm<Rat> fh(hyp);
  auto dgh = diagonalize(fh);
  CHECK(dgh.transform.transpose() * fh.a * dgh.transform == dgh.diagonal);
  int signs[3];
  for (int i = 0; i < 3; ++i) signs[i] = sgn(Rat(dgh.diagonal(i, i)));
  CHECK(signs[0] * signs[1] == -1);
  CHECK(signs[2] == 0);
}

TEST_CASE("solve_conic_q solvable examples") {
  // x^2 + y^2 - 2 z^2 = 0, e.g. (1,1,1)
  auto cert = solve_conic_q(TernaryForm<Rat>(diag3(1, 1, -2)));
  REQUIRE(cert.status == ConicStatus::Solvable);
  REQUIRE(cert.point.has_value());
  CHECK(TernaryForm<Rat>(diag3(1, 1, -2)).eval(*cert.point) == 0);
  CHECK(conic_certificate_recheck(TernaryForm<Rat>(diag3(1, 1, -2)), cert));

  // hyperbolic xy - z^2
  Mat<Rat> m(3, 3);
  m(0, 1) = m(1, 0) = rat(1, 2);
  m(2, 2) = -1;
  TernaryForm<Rat> f(m);
  auto c2 = solve_conic_q(f);
  REQUIRE(c2.status == ConicStatus::Solvable);
  CHECK(f.eval(*c2.point) == 0);
}

TEST_CASE("solve_conic_q unsolvable examples") {
  // definite: real obstruction
  auto cert = solve_conic_q(TernaryForm<Rat>(diag3(1, 1, 1)));
  CHECK(cert.status == ConicStatus::Unsolvable);
  REQUIRE(cert.obstruction.has_value());
  CHECK(cert.obstruction->is_real());
  CHECK(conic_certificate_recheck(TernaryForm<Rat>(diag3(1, 1, 1)), cert));

  // x^2 + y^2 - 3 z^2: obstruction at 3 (mod-9 exhaustion agrees)
  CHECK(!has_primitive_solution_mod9_form_113());
  auto c3 = solve_conic_q(TernaryForm<Rat>(diag3(1, 1, -3)));
  CHECK(c3.status == ConicStatus::Unsolvable);
  REQUIRE(c3.obstruction.has_value());
  CHECK(c3.obstruction->prime == 3);
  CHECK(conic_certificate_recheck(TernaryForm<Rat>(diag3(1, 1, -3)), c3));
  CHECK(!ternary_locally_solvable(rat(1), rat(1), rat(-3), Int(3)));
  CHECK(ternary_locally_solvable(rat(1), rat(1), rat(-2), Int(3)));
}

TEST_CASE("solve_conic_q is deterministic") {
  TernaryForm<Rat> f(diag3(3, -5, 7));
  auto a = solve_conic_q(f);
  auto b = solve_conic_q(f);
  REQUIRE(a.status == b.status);
  if (a.point) CHECK(*a.point == *b.point);
}

TEST_CASE("random isotropic forms round trip") {
  Rng rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // congruence-transport diag(1,-1,c) by a random unimodular matrix
    long c = rng.nonzero_integer(30);
    Mat<Rat> d = diag3(1, -1, c);
    Mat<Rat> u = Mat<Rat>::identity(3);
    for (int k = 0; k < 6; ++k) {
      int i = int(rng.below(3)), j = int(rng.below(3));
      if (i == j) continue;
      Rat f = Rat(rng.integer(3));
      for (int r = 0; r < 3; ++r) u(r, j) += f * u(r, i);
    }
    Mat<Rat> a = u.transpose() * d * u;
    TernaryForm<Rat> form(a);
    if (det(a) == 0) continue;
    auto cert = solve_conic_q(form);
    REQUIRE(cert.status == ConicStatus::Solvable);
    CHECK(form.eval(*cert.point) == 0);
    CHECK(!vec_is_zero(*cert.point));
    ++solved;
  }
  CHECK(solved > 150);
}

TEST_CASE("hilbert symbol sanity") {
  // (2,3)_2: 2 = 2*1, 3 odd: eps(1)eps(3) + 1*omega(3) = 0 + 1 -> -1
  CHECK(hilbert_symbol(rat(2), rat(3), Int(2)) == -1);
  CHECK(hilbert_symbol(rat(-1), rat(-1), Int(0)) == -1);
  CHECK(hilbert_symbol(rat(-1), rat(-1), Int(2)) == -1);
  CHECK(hilbert_symbol(rat(-1), rat(-1), Int(3)) == 1);
  CHECK(hilbert_symbol(rat(5), rat(3), Int(3)) == -1);  // 5 is a non-residue mod 3
  // product formula spot check for a=6, b=-10 over all relevant places
  int prod = hilbert_symbol(rat(6), rat(-10), Int(0));
  for (long p : {2, 3, 5}) prod *= hilbert_symbol(rat(6), rat(-10), Int(p));
  CHECK(prod == 1);
}

TEST_CASE("solve_conic_qext finds points over Q(sqrt(3))") {
  QuadField f3{Int(3)};
  // x^2 + y^2 - (4 + 2 sqrt(3)) z^2, a known zero is (1 + sqrt(3), 0, 1)
  Mat<QuadExt> m(3, 3);
  m(0, 0) = QuadExt(1);
  m(1, 1) = QuadExt(1);
  m(2, 2) = -QuadExt(f3, rat(4), rat(2));
  QuadExt known(f3, rat(1), rat(1));
  CHECK(known * known == QuadExt(f3, rat(4), rat(2)));
  TernaryForm<QuadExt> form(m);
  auto cert = solve_conic_qext(form);
  REQUIRE(cert.status == ConicStatus::Solvable);
  CHECK(form.eval(*cert.point).is_zero());
  CHECK(conic_certificate_recheck(form, cert));
}

TEST_CASE("solve_conic_qext real obstruction over Q(sqrt(2))") {
  QuadField f2{Int(2)};
  Mat<QuadExt> m(3, 3);
  m(0, 0) = QuadExt(1);
  m(1, 1) = QuadExt(1);
  // keep a genuinely irrational coefficient so both embeddings are exercised
  m(2, 2) = QuadExt(f2, rat(3), rat(1));
  TernaryForm<QuadExt> form(m);
  auto cert = solve_conic_qext(form);
  CHECK(cert.status == ConicStatus::Unsolvable);
  REQUIRE(cert.obstruction.has_value());
  CHECK(cert.obstruction->is_real());
  CHECK(conic_certificate_recheck(form, cert));
}

TEST_CASE("solve_conic_qext split prime obstruction over Q(i)") {
  QuadField fi{Int(-1)};
  // diag(1, -2, 13i): 13 splits in Q(i); x^2 - 2y^2 needs 2 to be a QR mod 13
  Mat<QuadExt> m(3, 3);
  m(0, 0) = QuadExt(1);
  m(1, 1) = QuadExt(-2);
  m(2, 2) = QuadExt(fi, rat(0), rat(13));
  TernaryForm<QuadExt> form(m);
  auto cert = solve_conic_qext(form);
  CHECK(cert.status == ConicStatus::Unsolvable);
  REQUIRE(cert.obstruction.has_value());
  CHECK(cert.obstruction->prime == 13);
  CHECK(conic_certificate_recheck(form, cert));
}

TEST_CASE("solve_conic_qext inconclusive verdict records the bound") {
  QuadField f5{Int(5)};
  Mat<QuadExt> m(3, 3);
  m(0, 0) = QuadExt(1);
  m(1, 1) = QuadExt(f5, rat(1), rat(1));
  m(2, 2) = QuadExt(f5, rat(-7), rat(2));
  TernaryForm<QuadExt> form(m);
  auto cert = solve_conic_qext(form, 0);
  if (cert.status == ConicStatus::Inconclusive) CHECK(cert.height_bound == 0);
}

TEST_CASE("rational forms fall through to the exact rational solver") {
  Mat<QuadExt> m(3, 3);
  m(0, 0) = QuadExt(1);
  m(1, 1) = QuadExt(1);
  m(2, 2) = QuadExt(-2);
  auto cert = solve_conic_qext(TernaryForm<QuadExt>(m));
  REQUIRE(cert.status == ConicStatus::Solvable);
  CHECK(TernaryForm<QuadExt>(m).eval(*cert.point).is_zero());
}

TEST_CASE("degenerate forms are rejected") {
  CHECK_THROWS_AS(solve_conic_q(TernaryForm<Rat>(diag3(1, 1, 0))), std::invalid_argument);
}
