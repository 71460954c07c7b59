#include "dp8/lie.hpp"

#include "doctest.h"
#include "dp8/rng.hpp"

using namespace dp8;

namespace {

// sl2 with Chevalley basis (e, h, f)
LieAlgebra<Rat> sl2() {
  std::vector<std::vector<Vec<Rat>>> sc(3, std::vector<Vec<Rat>>(3, Vec<Rat>(3, Rat(0))));
  auto set = [&](int i, int j, int k, long v) {
    sc[i][j][k] = v;
    sc[j][i][k] = -v;
  };
  set(1, 0, 0, 2);   // [h,e] = 2e
  set(1, 2, 2, -2);  // [h,f] = -2f
  set(0, 2, 1, 1);   // [e,f] = h
  return LieAlgebra<Rat>::from_structure_constants(sc);
}

// cross product algebra: [x,y]=z, [y,z]=x, [z,x]=y
template <FieldElem K>
LieAlgebra<K> so3() {
  std::vector<std::vector<Vec<K>>> sc(3, std::vector<Vec<K>>(3, Vec<K>(3, K(0))));
  auto set = [&](int i, int j, int k, long v) {
    sc[i][j][k] = K(v);
    sc[j][i][k] = K(-v);
  };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  return LieAlgebra<K>::from_structure_constants(sc);
}

LieAlgebra<Rat> sl2_plus_sl2() {
  std::vector<std::vector<Vec<Rat>>> sc(6, std::vector<Vec<Rat>>(6, Vec<Rat>(6, Rat(0))));
  auto set = [&](int i, int j, int k, long v) {
    sc[i][j][k] = v;
    sc[j][i][k] = -v;
  };
  for (int block = 0; block < 2; ++block) {
    int o = 3 * block;
    set(o + 1, o + 0, o + 0, 2);
    set(o + 1, o + 2, o + 2, -2);
    set(o + 0, o + 2, o + 1, 1);
  }
  return LieAlgebra<Rat>::from_structure_constants(sc);
}

// the 3x3 matrix model of the blowup algebra: a, b1, b2, h(c1), e(c2), f(c3)
std::vector<Mat<Rat>> blowup_matrices() {
  auto unit = [](int i, int j) {
    Mat<Rat> m(3, 3);
    m(i, j) = 1;
    return m;
  };
  Mat<Rat> adir(3, 3);
  adir(0, 0) = 2;
  adir(1, 1) = -1;
  adir(2, 2) = -1;
  Mat<Rat> h(3, 3);
  h(1, 1) = 1;
  h(2, 2) = -1;
  return {adir, unit(0, 1), unit(0, 2), h, unit(1, 2), unit(2, 1)};
}

LieAlgebra<Rat> blowup_algebra() { return LieAlgebra<Rat>::from_realization(blowup_matrices()); }

LieAlgebra<Rat> gl2() {
  auto unit = [](int i, int j) {
    Mat<Rat> m(2, 2);
    m(i, j) = 1;
    return m;
  };
  return LieAlgebra<Rat>::from_realization({unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)});
}

LieAlgebra<Rat> abelian(int n) {
  std::vector<std::vector<Vec<Rat>>> sc(n, std::vector<Vec<Rat>>(n, Vec<Rat>(n, Rat(0))));
  return LieAlgebra<Rat>::from_structure_constants(sc);
}

Vec<Rat> unit_vec(int n, int i) {
  Vec<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("structure constant validation") {
  auto bad = [] {
    std::vector<std::vector<Vec<Rat>>> sc(2, std::vector<Vec<Rat>>(2, Vec<Rat>(2, Rat(0))));
    sc[0][1][0] = 1;  // antisymmetric partner missing
    return LieAlgebra<Rat>::from_structure_constants(sc);
  };
  CHECK_THROWS_AS(bad(), std::invalid_argument);

  // Jacobi violation: [x,y]=z, [x,z]=x, [y,z]=0 fails on the triple (x,y,z)
  auto bad_jacobi = [] {
    std::vector<std::vector<Vec<Rat>>> sc(3, std::vector<Vec<Rat>>(3, Vec<Rat>(3, Rat(0))));
    auto set = [&](int i, int j, int k, long v) {
      sc[i][j][k] = v;
      sc[j][i][k] = -v;
    };
    set(0, 1, 2, 1);
    set(0, 2, 0, 1);
    return LieAlgebra<Rat>::from_structure_constants(sc);
  };
  CHECK_THROWS_AS(bad_jacobi(), std::invalid_argument);
}

TEST_CASE("killing form of sl2 and friends") {
  Mat<Rat> k = killing_form(sl2());
  CHECK(k(1, 1) == 8);
  CHECK(k(0, 2) == 4);
  CHECK(k(2, 0) == 4);
  CHECK(k(0, 0) == 0);
  CHECK(k(2, 2) == 0);
  CHECK(k(0, 1) == 0);
  CHECK(k(2, 1) == 0);

  CHECK(killing_form(abelian(2)).is_zero());

  Mat<Rat> k2 = killing_form(sl2_plus_sl2());
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) CHECK(k2(i, j) == 0);
  CHECK(k2(1, 1) == 8);
  CHECK(k2(4, 4) == 8);
}

TEST_CASE("killing form invariance on random algebras") {
  for (const auto& l : {sl2_plus_sl2(), blowup_algebra()}) {
    Mat<Rat> k = killing_form(l);
    auto kf = [&](const Vec<Rat>& x, const Vec<Rat>& y) {
      Rat s = 0;
      Vec<Rat> ky = k * y;
      for (int i = 0; i < l.dim(); ++i) s += x[i] * ky[i];
      return s;
    };
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
      Vec<Rat> x(l.dim()), y(l.dim()), z(l.dim());
      for (int i = 0; i < l.dim(); ++i) {
        x[i] = rng.integer(5);
        y[i] = rng.integer(5);
        z[i] = rng.integer(5);
      }
      CHECK(kf(l.bracket(x, y), z) == kf(x, l.bracket(y, z)));
    }
  }
}

TEST_CASE("semisimplicity via Cartan's criterion") {
  CHECK(is_semisimple(sl2()));
  CHECK(is_semisimple(so3<Rat>()));
  CHECK(is_semisimple(sl2_plus_sl2()));
  CHECK(!is_semisimple(blowup_algebra()));
  CHECK(!is_semisimple(abelian(1)));
}

TEST_CASE("centre") {
  CHECK(centre(sl2()).dim() == 0);
  CHECK(centre(abelian(4)).dim() == 4);
  Subspace<Rat> zg = centre(gl2());
  REQUIRE(zg.dim() == 1);
  // identity = unit(0,0) + unit(1,1) is basis elements 0 and 3
  Vec<Rat> id{rat(1), rat(0), rat(0), rat(1)};
  CHECK(zg.contains(id));
}

TEST_CASE("centroid") {
  auto c1 = centroid(sl2());
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == Mat<Rat>::identity(3));

  auto c2 = centroid(sl2_plus_sl2());
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == Mat<Rat>::identity(6));
  // closed under product and contains a non-scalar element; the centroid of
  // a direct sum contains the idempotent projector pair
  Mat<Rat> prod = c2[1] * c2[1];
  bool in_span = false;
  // prod = alpha*I + beta*c2[1] for some rationals
  Mat<Rat> sys(36, 2);
  Vec<Rat> rhs(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      sys(i * 6 + j, 0) = i == j ? 1 : 0;
      sys(i * 6 + j, 1) = c2[1](i, j);
      rhs[i * 6 + j] = prod(i, j);
    }
  in_span = solve(sys, rhs).has_value();
  CHECK(in_span);

  // every centroid element commutes with every ad
  auto l = sl2_plus_sl2();
  for (const auto& m : c2)
    for (int i = 0; i < 6; ++i) CHECK(Mat<Rat>::bracket(m, l.ad_basis(i)).is_zero());
}

TEST_CASE("decompose_two_ideals splits sl2+sl2 into the blocks") {
  auto l = sl2_plus_sl2();
  auto split = decompose_two_ideals(l);
  REQUIRE(split.has_value());
  auto [i1, i2] = *split;
  CHECK(i1.dim() == 3);
  CHECK(i2.dim() == 3);
  CHECK(i1.sum(i2).dim() == 6);
  // bracket-orthogonal and bracket-closed
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(vec_is_zero(l.bracket(i1.basis_vector(i), i2.basis_vector(j))));
      CHECK(i1.contains(l.bracket(i1.basis_vector(i), i1.basis_vector(j))));
      CHECK(i2.contains(l.bracket(i2.basis_vector(i), i2.basis_vector(j))));
    }
  // the coordinate blocks themselves
  Subspace<Rat> b1 = Subspace<Rat>::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)});
  Subspace<Rat> b2 = Subspace<Rat>::span(6, {unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)});
  CHECK(((i1 == b1 && i2 == b2) || (i1 == b2 && i2 == b1)));
}

TEST_CASE("so3 + so3 does not decompose over Q but does over Q(i)") {
  // so3 x so3 has centroid Q x Q, so it does decompose over Q; the genuinely
  // simple 6-dimensional case is exercised by the sphere algebra elsewhere.
  // Here: so3 alone is simple of dimension 3, so decompose_two_ideals rejects
  // it by precondition.
  CHECK_THROWS_AS(decompose_two_ideals(so3<Rat>()), std::invalid_argument);
}

TEST_CASE("identify_sl2 on sl2 itself") {
  auto l = sl2();
  auto res = identify_sl2(l);
  REQUIRE(res.triple.has_value());
  const auto& t = *res.triple;
  CHECK(l.bracket(t.h, t.e) == vec_scale(rat(2), t.e));
  CHECK(l.bracket(t.h, t.f) == vec_scale(rat(-2), t.f));
  CHECK(l.bracket(t.e, t.f) == t.h);
}

TEST_CASE("identify_sl2 rejects so3 over Q with an anisotropy certificate") {
  auto l = so3<Rat>();
  Mat<Rat> k = killing_form(l);
  // Killing form is -2*Id: definite, hence anisotropic over Q
  CHECK(k == Rat(-2) * Mat<Rat>::identity(3));
  auto res = identify_sl2(l);
  CHECK(!res.triple.has_value());
  CHECK(res.certificate.status == ConicStatus::Unsolvable);
  REQUIRE(res.certificate.obstruction.has_value());
  CHECK(res.certificate.obstruction->is_real());
  CHECK(conic_certificate_recheck(TernaryForm<Rat>(k), res.certificate));
}

TEST_CASE("identify_sl2 accepts so3 over Q(i)") {
  auto li = so3<Rat>().extend_scalars();
  QuadField fi{Int(-1)};
  auto res = identify_sl2(li, kDefaultConicHeight, FTag<QuadExt>(fi));
  REQUIRE(res.triple.has_value());
  const auto& t = *res.triple;
  CHECK(li.bracket(t.h, t.e) == vec_scale(QuadExt(2), t.e));
  CHECK(li.bracket(t.h, t.f) == vec_scale(QuadExt(-2), t.f));
  CHECK(li.bracket(t.e, t.f) == t.h);
  // the isotropic vector found by the conic search is genuinely irrational
  bool irrational = false;
  for (const auto& c : t.e)
    if (!c.is_rational()) irrational = true;
  CHECK(irrational);
}

TEST_CASE("levi_data on the blowup algebra") {
  auto l = blowup_algebra();
  auto ld = levi_data(l);
  REQUIRE(ld.has_value());
  CHECK(ld->radical.dim() == 3);
  CHECK(ld->nilradical.dim() == 2);
  // nilradical = span(b1, b2) = coordinates 1, 2
  CHECK(ld->nilradical.contains(unit_vec(6, 1)));
  CHECK(ld->nilradical.contains(unit_vec(6, 2)));
  // nilradical is abelian
  CHECK(vec_is_zero(l.bracket(ld->nilradical.basis_vector(0), ld->nilradical.basis_vector(1))));
  CHECK(ld->levi.dim() == 3);
  // levi is the c-block: coordinates 3,4,5
  CHECK(ld->levi.contains(unit_vec(6, 3)));
  CHECK(ld->levi.contains(unit_vec(6, 4)));
  CHECK(ld->levi.contains(unit_vec(6, 5)));
  // levi closed under bracket
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(ld->levi.contains(l.bracket(ld->levi.basis_vector(i), ld->levi.basis_vector(j))));
}

TEST_CASE("levi_data degenerate cases") {
  auto l = sl2();
  auto ld = levi_data(l);
  REQUIRE(ld.has_value());
  CHECK(ld->radical.dim() == 0);
  CHECK(ld->levi.dim() == 3);

  auto ab = abelian(2);
  auto lda = levi_data(ab);
  REQUIRE(lda.has_value());
  CHECK(lda->radical.dim() == 2);
  CHECK(lda->nilradical.dim() == 2);
  CHECK(lda->levi.dim() == 0);
}

TEST_CASE("levi correction handles a tilted complement") {
  // semidirect product sl2 ⋉ Q^2 (natural action), then change basis so the
  // naive complement is not a subalgebra
  auto unit2 = [](int i, int j) {
    Mat<Rat> m(2, 2);
    m(i, j) = 1;
    return m;
  };
  // 5-dim: e,h,f acting on span(u,v); realization as 3x3 block matrices
  auto block = [&](const Mat<Rat>& a2, const Vec<Rat>& w) {
    Mat<Rat> m(3, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = a2(i, j);
    m(0, 2) = w[0];
    m(1, 2) = w[1];
    return m;
  };
  Mat<Rat> z2(2, 2);
  std::vector<Mat<Rat>> basis = {
      block(unit2(0, 1), {rat(0), rat(0)}),                 // e
      block(unit2(0, 0) - unit2(1, 1), {rat(0), rat(0)}),   // h
      block(unit2(1, 0), {rat(0), rat(0)}),                 // f
      block(z2, {rat(1), rat(0)}),                          // u
      block(z2, {rat(0), rat(1)}),                          // v
  };
  // tilt: replace e by e + u so coordinates of the complement are mixed
  basis[0] = basis[0] + basis[3];
  auto l = LieAlgebra<Rat>::from_realization(basis);
  auto ld = levi_data(l);
  REQUIRE(ld.has_value());
  CHECK(ld->radical.dim() == 2);
  CHECK(ld->levi.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(ld->levi.contains(l.bracket(ld->levi.basis_vector(i), ld->levi.basis_vector(j))));
  // semisimple part truly complements
  CHECK(ld->levi.sum(ld->radical).dim() == 5);
}

TEST_CASE("normalizer") {
  auto l = blowup_algebra();
  CHECK(normalizer(l, Subspace<Rat>::full(6)) == Subspace<Rat>::full(6));
  CHECK(normalizer(l, Subspace<Rat>(6)) == Subspace<Rat>::full(6));

  auto ld = levi_data(l);
  REQUIRE(ld.has_value());
  Subspace<Rat> s = normalizer(l, ld->levi);
  CHECK(s.dim() == 4);
  // contains the levi and the adir direction
  CHECK(s.contains(unit_vec(6, 0)));
  CHECK(s.contains(unit_vec(6, 3)));
}

TEST_CASE("realization round trip preserves structure constants") {
  auto l = blowup_algebra();
  REQUIRE(l.has_realization());
  // rebuild from realization and compare structure constants
  auto l2 = LieAlgebra<Rat>::from_realization(l.realization());
  CHECK(l2.sc() == l.sc());
}
