#pragma once

#include "dp8/lie.hpp"
#include "dp8/mpoly.hpp"
#include "dp8/subspace.hpp"

namespace dp8 {

// --------------------------------------------------------------------------
// Symmetric-matrix coordinates: quadrics on P^n live in the N(N+1)/2
// dimensional space of symmetric NxN matrices, N = n+1, with pair (i<=j)
// coordinates in lexicographic order.
// --------------------------------------------------------------------------

inline int sym_dim(int size) { return size * (size + 1) / 2; }

inline int sym_index(int i, int j, int size) {
  if (i > j) std::swap(i, j);
  return i * size - i * (i - 1) / 2 + (j - i);
}

Vec<Rat> sym_to_vec(const Mat<Rat>& m);
Mat<Rat> vec_to_sym(const Vec<Rat>& v, int size);

// A linear space of symmetric matrices cutting out an embedded variety.
struct QuadricIdeal {
  int n = 8;             // ambient projective dimension
  Subspace<Rat> space;   // canonical subspace of the symmetric coordinates

  int matrix_size() const { return n + 1; }
  int dim() const { return space.dim(); }
  std::vector<Mat<Rat>> basis_matrices() const;
  static QuadricIdeal from_matrices(int n, const std::vector<Mat<Rat>>& quadrics);
  bool contains(const Mat<Rat>& quadric) const { return space.contains(sym_to_vec(quadric)); }
};

// --------------------------------------------------------------------------
// Parametrizations
// --------------------------------------------------------------------------

enum class SurfaceKind { P1xP1, BlowupY, Sphere };

struct ParamMap {
  enum class ParamSpec { Bihomogeneous, Plane, Affine } spec;
  std::vector<Poly> components;  // 9 polynomials over Q

  const std::vector<std::string>& var_names() const;
  static const std::vector<std::string>& var_names_for(ParamSpec spec);
  static std::optional<ParamSpec> spec_from_string(const std::string& s);
  std::string spec_string() const;
};

// Applies a projective transformation to the component vector.
ParamMap transform_map(const Mat<Rat>& m, const ParamMap& map);

// The exact space of quadrics vanishing identically on the image of the map.
QuadricIdeal quadrics_of_parametrization(const ParamMap& map);

// --------------------------------------------------------------------------
// Canonical models
// --------------------------------------------------------------------------

struct CanonicalModel {
  SurfaceKind kind;
  Int sphere_a = 0;        // squarefree non-square, Sphere only
  QuadricIdeal ideal;      // 20-dimensional quadric space
  ParamMap param;
  LieAlgebra<Rat> lie;     // 6-dimensional, with 9x9 realization

  // index of the Levi/Chevalley data inside the abstract basis:
  // P1xP1: basis (e1,h1,f1,e2,h2,f2)
  // BlowupY: basis (a, b1, b2, h, e, f)
  // Sphere: basis ((e,e),(h,h),(f,f),(ae,-ae),(ah,-ah),(af,-af))
};

// Tangent matrix of the linear action x on the coordinate functions given by
// `monomials` (exponent vectors over x's variables). Entries of monomials not
// listed are discarded when `discard` names them (the blowup projection) and
// are an error otherwise.
Mat<Rat> tangent_matrix(const Mat<Rat>& x, const std::vector<Poly::Expo>& monomials,
                        bool allow_discard = false);

const CanonicalModel& canonical_p1xp1();
const CanonicalModel& canonical_blowup();
const CanonicalModel& canonical_sphere(const Int& a);  // cached per squarefree a

// --------------------------------------------------------------------------
// Independent fixtures
// --------------------------------------------------------------------------

// Anticanonical model of the quadric surface z0^2 - z1^2 = z2^2 - d*z3^2 in
// P^3: embed by the 9 degree-2 monomials other than z0^2 and collect all
// quadrics that pull back into the ideal of the surface.
QuadricIdeal anticanonical_quadric_surface_ideal(const Int& d);

// Ideal of C1 x C2 under the Segre embedding of P^2 x P^2, for plane conics
// given by diagonal coefficient triples.
QuadricIdeal product_of_conics_ideal(const std::array<Rat, 3>& c1, const std::array<Rat, 3>& c2);

}  // namespace dp8
