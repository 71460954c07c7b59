#include "dp8/modrep.hpp"

#include "doctest.h"
#include "dp8/canonical.hpp"
#include "dp8/rng.hpp"

using namespace dp8;

namespace {

Vec<Rat> unit6(int i) {
  Vec<Rat> v(6, Rat(0));
  v[i] = 1;
  return v;
}

Mat<Rat> random_invertible9(Rng& rng, long bound) {
  for (;;) {
    Mat<Rat> g(9, 9);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) g(i, j) = Rat(rng.integer(bound));
    if (det(g) != 0) return g;
  }
}

ModuleAction conjugated(const ModuleAction& a, const Mat<Rat>& g) {
  Mat<Rat> gi = *inverse(g);
  std::vector<Mat<Rat>> act;
  for (const auto& m : a.matrices()) act.push_back(g * m * gi);
  return ModuleAction(a.algebra(), act);
}

bool intertwines(const Mat<Rat>& m, const ModuleAction& a, const ModuleAction& b) {
  for (int i = 0; i < a.algebra().dim(); ++i)
    if (!(m * a.matrices()[i] == b.matrices()[i] * m)) return false;
  return true;
}

}  // namespace

TEST_CASE("ModuleAction validates the bracket") {
  const auto& cm = canonical_p1xp1();
  CHECK_NOTHROW(ModuleAction(cm.lie, cm.lie.realization()));
  auto broken = cm.lie.realization();
  broken[0](0, 0) += 1;
  CHECK_THROWS_AS(ModuleAction(cm.lie, broken), std::invalid_argument);
}

TEST_CASE("weight_decompose of the trivial action") {
  auto abelian = LieAlgebra<Rat>::from_structure_constants(
      std::vector<std::vector<Vec<Rat>>>(3, std::vector<Vec<Rat>>(3, Vec<Rat>(3, Rat(0)))));
  std::vector<Mat<Rat>> zero(3, Mat<Rat>(4, 4));
  ModuleAction act(abelian, zero);
  Sl2Triple<Rat> t{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  auto wd = weight_decompose(act, {t});
  REQUIRE(wd.spaces.size() == 1);
  CHECK(wd.spaces[0].first == std::vector<Rat>{Rat(0)});
  CHECK(wd.spaces[0].second.dim() == 4);
}

TEST_CASE("module_iso_linear on identical and conjugated actions") {
  const auto& cm = canonical_p1xp1();
  ModuleAction a(cm.lie, cm.lie.realization());
  auto m = module_iso_linear(a, a);
  REQUIRE(m.has_value());
  CHECK(intertwines(*m, a, a));
  CHECK(det(*m) != 0);

  Rng rng(5);
  Mat<Rat> g = random_invertible9(rng, 2);
  ModuleAction b = conjugated(a, g);
  auto m2 = module_iso_linear(a, b);
  REQUIRE(m2.has_value());
  CHECK(intertwines(*m2, a, b));
}

TEST_CASE("module_iso_linear rejects modules of different shape") {
  const auto& cm = canonical_p1xp1();
  ModuleAction a(cm.lie, cm.lie.realization());
  // direct sum of a 5-dim and a 4-dim piece cannot be isomorphic to the
  // irreducible 9-dim module; build it from weights by zeroing a block
  std::vector<Mat<Rat>> blocks;
  for (int t = 0; t < 6; ++t) {
    Mat<Rat> m(9, 9);
    // block action: first factor acts on coordinates 0..2 as sym^2, second
    // on 3..8 doubled; gives a (2,0) + (0,2)-type decomposable module
    const auto& cm2 = canonical_p1xp1();
    (void)cm2;
    blocks.push_back(m);
  }
  // trivial action of the full algebra is a valid module of the wrong shape
  ModuleAction b(cm.lie, blocks);
  CHECK(!module_iso_linear(a, b).has_value());
}

TEST_CASE("highest_weight_iso on the canonical (2,2) module") {
  const auto& cm = canonical_p1xp1();
  ModuleAction a(cm.lie, cm.lie.realization());
  std::vector<Sl2Triple<Rat>> triples{{unit6(0), unit6(1), unit6(2)},
                                      {unit6(3), unit6(4), unit6(5)}};
  auto m = highest_weight_iso(a, a, triples);
  REQUIRE(m.has_value());
  // scalar multiple of the identity
  Rat lambda = (*m)(0, 0);
  CHECK(*m == lambda * Mat<Rat>::identity(9));
  CHECK(lambda != 0);

  Rng rng(13);
  Mat<Rat> g = random_invertible9(rng, 2);
  ModuleAction b = conjugated(a, g);
  auto m2 = highest_weight_iso(a, b, triples);
  REQUIRE(m2.has_value());
  CHECK(intertwines(*m2, a, b));
  CHECK(det(*m2) != 0);
}

TEST_CASE("highest_weight_iso uniqueness up to scalar") {
  const auto& cm = canonical_p1xp1();
  ModuleAction a(cm.lie, cm.lie.realization());
  std::vector<Sl2Triple<Rat>> triples{{unit6(0), unit6(1), unit6(2)},
                                      {unit6(3), unit6(4), unit6(5)}};
  Rng rng(29);
  Mat<Rat> g = random_invertible9(rng, 2);
  ModuleAction b = conjugated(a, g);
  auto m1 = highest_weight_iso(a, b, triples);
  auto m2 = module_iso_linear(a, b);
  REQUIRE(m1.has_value());
  REQUIRE(m2.has_value());
  // m2 = lambda m1 for a scalar lambda: compare via first nonzero entry
  Rat lambda;
  bool found = false;
  for (int i = 0; i < 9 && !found; ++i)
    for (int j = 0; j < 9 && !found; ++j)
      if ((*m1)(i, j) != 0) {
        lambda = (*m2)(i, j) / (*m1)(i, j);
        found = true;
      }
  REQUIRE(found);
  CHECK(*m2 == lambda * *m1);
}

TEST_CASE("blowup_module_iso on canonical and conjugated actions") {
  const auto& cm = canonical_blowup();
  ModuleAction a(cm.lie, cm.lie.realization());
  Sl2Triple<Rat> levi{unit6(4), unit6(3), unit6(5)};
  std::vector<Vec<Rat>> nil{unit6(1), unit6(2)};

  auto m = blowup_module_iso(a, a, levi, nil);
  REQUIRE(m.has_value());
  Rat lambda = (*m)(0, 0);
  CHECK(*m == lambda * Mat<Rat>::identity(9));

  Rng rng(31);
  Mat<Rat> g = random_invertible9(rng, 2);
  ModuleAction b = conjugated(a, g);
  auto m2 = blowup_module_iso(a, b, levi, nil);
  REQUIRE(m2.has_value());
  CHECK(intertwines(*m2, a, b));
  CHECK(det(*m2) != 0);
}

TEST_CASE("blowup_module_iso rejects a wrong decomposition type") {
  // the P1xP1 module under one of its sl2 factors splits as 3+3+3, so the
  // blowup chain construction must fail
  const auto& pm = canonical_p1xp1();
  const auto& bm = canonical_blowup();
  ModuleAction a(bm.lie, bm.lie.realization());
  // build a fake action of the blowup algebra: zero on the radical, P1xP1
  // first factor on the Levi; the bracket check forbids most fakes, so
  // instead feed mismatched triple indices into the real P1xP1 action
  ModuleAction p(pm.lie, pm.lie.realization());
  Sl2Triple<Rat> levi{unit6(0), unit6(1), unit6(2)};
  std::vector<Vec<Rat>> nil{unit6(3)};
  CHECK(!blowup_module_iso(p, p, levi, nil).has_value());
  (void)a;
}
