#include "dp8/canonical.hpp"

#include <map>

#include "doctest.h"
#include "dp8/modrep.hpp"

using namespace dp8;

TEST_CASE("symmetric coordinate round trip") {
  Mat<Rat> m(4, 4);
  int c = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = c++;
  CHECK(vec_to_sym(sym_to_vec(m), 4) == m);
  CHECK(int(sym_to_vec(m).size()) == 10);
}

TEST_CASE("canonical P1xP1 model") {
  const auto& m = canonical_p1xp1();
  CHECK(m.ideal.dim() == 20);
  CHECK(m.lie.dim() == 6);
  CHECK(is_semisimple(m.lie));
  // tangent matrices are traceless
  for (const auto& r : m.lie.realization()) CHECK(r.trace() == 0);
  // Theorem-3 closure: x^t A + A x stays in the quadric space
  for (const auto& x : m.lie.realization())
    for (const auto& a : m.ideal.basis_matrices())
      CHECK(m.ideal.contains(x.transpose() * a + a * x));
  // the parametrization satisfies every quadric
  for (const auto& a : m.ideal.basis_matrices()) {
    Poly total(4);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        if (a(i, j) != 0) total = total + a(i, j) * (m.param.components[i] * m.param.components[j]);
    CHECK(total.is_zero());
  }
}

TEST_CASE("canonical P1xP1 module has highest weight (2,2)") {
  const auto& m = canonical_p1xp1();
  ModuleAction act(m.lie, m.lie.realization());
  Sl2Triple<Rat> t1, t2;
  auto unit = [](int i) {
    Vec<Rat> v(6, Rat(0));
    v[i] = 1;
    return v;
  };
  t1 = {unit(0), unit(1), unit(2)};
  t2 = {unit(3), unit(4), unit(5)};
  auto wd = weight_decompose(act, {t1, t2});
  CHECK(wd.spaces.size() == 9);
  for (const auto& [w, s] : wd.spaces) {
    CHECK(s.dim() == 1);
    for (const Rat& x : w) CHECK((x == 2 || x == 0 || x == -2));
  }
}

TEST_CASE("canonical blowup model") {
  const auto& m = canonical_blowup();
  CHECK(m.ideal.dim() == 20);
  CHECK(m.lie.dim() == 6);
  CHECK(!is_semisimple(m.lie));
  for (const auto& x : m.lie.realization())
    for (const auto& a : m.ideal.basis_matrices())
      CHECK(m.ideal.contains(x.transpose() * a + a * x));
  // Levi restriction decomposes the module into summands of dims 2, 3, 4
  ModuleAction act(m.lie, m.lie.realization());
  auto unit = [](int i) {
    Vec<Rat> v(6, Rat(0));
    v[i] = 1;
    return v;
  };
  Sl2Triple<Rat> levi{unit(4), unit(3), unit(5)};  // e=c2, h=c1, f=c3
  auto wd = weight_decompose(act, {levi});
  // weights 3,2,1,0,-1,-2,-3 with multiplicities 1,1,2,1,2,1,1
  int total = 0;
  for (const auto& [w, s] : wd.spaces) total += s.dim();
  CHECK(total == 9);
  std::map<Rat, int> mult;
  for (const auto& [w, s] : wd.spaces) mult[w[0]] += s.dim();
  CHECK(mult[Rat(3)] == 1);
  CHECK(mult[Rat(2)] == 1);
  CHECK(mult[Rat(1)] == 2);
  CHECK(mult[Rat(0)] == 1);
  CHECK(mult[Rat(-3)] == 1);
}

TEST_CASE("canonical sphere model for several discriminants") {
  for (long a : {3L, -1L, 2L}) {
    const auto& m = canonical_sphere(Int(a));
    CHECK(m.sphere_a == a);
    CHECK(m.ideal.dim() == 20);
    CHECK(m.lie.dim() == 6);
    CHECK(is_semisimple(m.lie));
    for (const auto& x : m.lie.realization())
      for (const auto& q : m.ideal.basis_matrices())
        CHECK(m.ideal.contains(x.transpose() * q + q * x));
    // parametrization satisfies the quadrics
    for (const auto& q : m.ideal.basis_matrices()) {
      Poly total(2);
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
          if (q(i, j) != 0)
            total = total + q(i, j) * (m.param.components[i] * m.param.components[j]);
      CHECK(total.is_zero());
    }
    // simple over Q, centroid contains c with c^2 = a Id
    auto cent = centroid(m.lie);
    REQUIRE(cent.size() == 2);
    auto split = decompose_two_ideals(m.lie);
    CHECK(!split.has_value());
    // c' = c - (tr c / 6) Id has square a * Id after normalization
    Mat<Rat> c = cent[1];
    Rat tr = c.trace() / 6;
    for (int i = 0; i < 6; ++i) c(i, i) -= tr;
    Mat<Rat> c2 = c * c;
    Rat lambda = c2(0, 0);
    CHECK(c2 == lambda * Mat<Rat>::identity(6));
    CHECK(squarefree_part(Int(Rat(lambda).get_num() * Rat(lambda).get_den())) == a);
  }
}

TEST_CASE("sphere algebra decomposes over its own extension") {
  const auto& m = canonical_sphere(Int(3));
  auto le = m.lie.extend_scalars();
  auto split = decompose_two_ideals(le, FTag<QuadExt>(QuadField(Int(3))));
  REQUIRE(split.has_value());
  CHECK(split->first.dim() == 3);
  CHECK(split->second.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(vec_is_zero(le.bracket(split->first.basis_vector(i), split->second.basis_vector(j))));
}

TEST_CASE("quadric surface anticanonical ideal has the 14+6 shape") {
  // monomial order of the embedding: z0z1, z0z2, z0z3, z1^2, z1z2, z1z3,
  // z2^2, z2z3, z3^2
  auto mono_index = [](int i, int j) {  // z_i z_j, i <= j, (0,0) excluded
    static const std::map<std::pair<int, int>, int> table{
        {{0, 1}, 0}, {{0, 2}, 1}, {{0, 3}, 2}, {{1, 1}, 3}, {{1, 2}, 4},
        {{1, 3}, 5}, {{2, 2}, 6}, {{2, 3}, 7}, {{3, 3}, 8}};
    return table.at({i, j});
  };
  for (long d : {-1L, 3L, 8L}) {
    QuadricIdeal ideal = anticanonical_quadric_surface_ideal(Int(d));
    CHECK(ideal.dim() == 20);

    // binomial members of the ideal: pairs of symmetric coordinates whose
    // residues are dependent
    const auto& S = ideal.space;
    const int amb = S.ambient_dim();
    std::vector<Vec<Rat>> red(amb);
    for (int c = 0; c < amb; ++c) {
      Vec<Rat> e(amb, Rat(0));
      e[c] = 1;
      red[c] = S.reduce(e);
    }
    std::vector<Vec<Rat>> binomials;
    for (int c1 = 0; c1 < amb; ++c1) {
      if (vec_is_zero(red[c1])) {
        Vec<Rat> v(amb, Rat(0));
        v[c1] = 1;
        binomials.push_back(v);
        continue;
      }
      for (int c2 = c1 + 1; c2 < amb; ++c2) {
        if (vec_is_zero(red[c2])) continue;
        Mat<Rat> sys(amb, 1);
        for (int i = 0; i < amb; ++i) sys(i, 0) = red[c1][i];
        auto sol = solve(sys, red[c2]);
        if (sol) {
          Vec<Rat> v(amb, Rat(0));
          v[c1] = -(*sol)[0];
          v[c2] = 1;
          binomials.push_back(v);
        }
      }
    }
    Subspace<Rat> bspan = Subspace<Rat>::span(amb, binomials);
    CHECK(bspan.dim() == 14);

    // six 4-term members: (z0 zi)(z0 zj) = (z1^2 + z2^2 - d z3^2) zi zj
    std::vector<Vec<Rat>> gens = binomials;
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        Mat<Rat> q(9, 9);
        auto add_pair = [&](int a, int b, const Rat& c) {
          if (a == b)
            q(a, a) += c;
          else {
            q(a, b) += c / 2;
            q(b, a) += c / 2;
          }
        };
        add_pair(mono_index(0, i), mono_index(0, j), rat(1));
        add_pair(mono_index(1, 1), mono_index(i, j), rat(-1));
        add_pair(mono_index(2, 2), mono_index(i, j), rat(-1));
        add_pair(mono_index(3, 3), mono_index(i, j), Rat(Int(d)));
        CHECK(ideal.contains(q));
        int terms = 0;
        for (int a = 0; a < 9; ++a)
          for (int b = a; b < 9; ++b)
            if (q(a, b) != 0) ++terms;
        CHECK(terms == 4);
        gens.push_back(sym_to_vec(q));
      }
    CHECK(Subspace<Rat>::span(amb, gens).dim() == 20);
  }
}

TEST_CASE("product of definite conics ideal") {
  QuadricIdeal ideal = product_of_conics_ideal({rat(1), rat(1), rat(1)}, {rat(1), rat(1), rat(1)});
  CHECK(ideal.dim() == 20);
}
