#include "dp8/canonical.hpp"

#include <array>
#include <map>

namespace dp8 {

Vec<Rat> sym_to_vec(const Mat<Rat>& m) {
  const int size = m.rows();
  if (!m.is_square() || !(m == m.transpose()))
    throw std::invalid_argument("sym_to_vec: symmetric matrix required");
  Vec<Rat> v(sym_dim(size));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) v[sym_index(i, j, size)] = m(i, j);
  return v;
}

Mat<Rat> vec_to_sym(const Vec<Rat>& v, int size) {
  if (int(v.size()) != sym_dim(size)) throw std::invalid_argument("vec_to_sym: wrong length");
  Mat<Rat> m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) m(i, j) = m(j, i) = v[sym_index(i, j, size)];
  return m;
}

std::vector<Mat<Rat>> QuadricIdeal::basis_matrices() const {
  std::vector<Mat<Rat>> out;
  for (int i = 0; i < space.dim(); ++i) out.push_back(vec_to_sym(space.basis_vector(i), n + 1));
  return out;
}

QuadricIdeal QuadricIdeal::from_matrices(int n, const std::vector<Mat<Rat>>& quadrics) {
  std::vector<Vec<Rat>> rows;
  for (const auto& q : quadrics) {
    if (q.rows() != n + 1) throw std::invalid_argument("QuadricIdeal: size mismatch");
    rows.push_back(sym_to_vec(q));
  }
  return {n, Subspace<Rat>::span(sym_dim(n + 1), rows)};
}

// --------------------------------------------------------------------------
// ParamMap
// --------------------------------------------------------------------------

const std::vector<std::string>& ParamMap::var_names_for(ParamSpec spec) {
  static const std::vector<std::string> bihom{"s0", "s1", "t0", "t1"};
  static const std::vector<std::string> plane{"v0", "v1", "v2"};
  static const std::vector<std::string> affine{"u", "v"};
  switch (spec) {
    case ParamSpec::Bihomogeneous: return bihom;
    case ParamSpec::Plane: return plane;
    case ParamSpec::Affine: return affine;
  }
  throw std::logic_error("var_names_for: bad spec");
}

const std::vector<std::string>& ParamMap::var_names() const { return var_names_for(spec); }

std::optional<ParamMap::ParamSpec> ParamMap::spec_from_string(const std::string& s) {
  if (s == "s0,s1;t0,t1") return ParamSpec::Bihomogeneous;
  if (s == "v0,v1,v2") return ParamSpec::Plane;
  if (s == "u,v") return ParamSpec::Affine;
  return std::nullopt;
}

std::string ParamMap::spec_string() const {
  switch (spec) {
    case ParamSpec::Bihomogeneous: return "s0,s1;t0,t1";
    case ParamSpec::Plane: return "v0,v1,v2";
    case ParamSpec::Affine: return "u,v";
  }
  throw std::logic_error("spec_string: bad spec");
}

ParamMap transform_map(const Mat<Rat>& m, const ParamMap& map) {
  if (m.rows() != 9 || m.cols() != 9) throw std::invalid_argument("transform_map: 9x9 required");
  ParamMap out;
  out.spec = map.spec;
  out.components.assign(9, Poly(map.components[0].nvars()));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (m(i, j) != 0) out.components[i] = out.components[i] + m(i, j) * map.components[j];
  return out;
}

QuadricIdeal quadrics_of_parametrization(const ParamMap& map) {
  const auto& p = map.components;
  if (p.size() != 9) throw std::invalid_argument("quadrics_of_parametrization: 9 components");
  // columns: products p_i p_j (doubled off the diagonal), rows: monomials
  std::map<Poly::Expo, int> row_of;
  std::vector<Poly> products(sym_dim(9), Poly(p[0].nvars()));
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      Poly prod = p[i] * p[j];
      if (i != j) prod = Rat(2) * prod;
      for (const auto& [e, c] : prod.terms())
        if (!row_of.count(e)) {
          int next = int(row_of.size());
          row_of[e] = next;
        }
      products[sym_index(i, j, 9)] = std::move(prod);
    }
  Mat<Rat> sys(int(row_of.size()), sym_dim(9));
  for (int col = 0; col < sym_dim(9); ++col)
    for (const auto& [e, c] : products[col].terms()) sys(row_of[e], col) = c;
  QuadricIdeal ideal;
  ideal.n = 8;
  ideal.space = Subspace<Rat>::row_space(kernel(sys));
  return ideal;
}

// --------------------------------------------------------------------------
// Tangent actions
// --------------------------------------------------------------------------

Mat<Rat> tangent_matrix(const Mat<Rat>& x, const std::vector<Poly::Expo>& monomials,
                        bool allow_discard) {
  const int nv = x.rows();
  std::map<Poly::Expo, int> index;
  for (size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = int(i);
  Mat<Rat> out(int(monomials.size()), int(monomials.size()));
  for (size_t r = 0; r < monomials.size(); ++r) {
    Poly m = Poly::monomial(monomials[r], Rat(1));
    Poly d(nv);
    for (int v = 0; v < nv; ++v) {
      Poly dv = m.derivative(v);
      if (dv.is_zero()) continue;
      // image of variable v under x: sum_u x(v,u) var_u
      for (int u = 0; u < nv; ++u)
        if (x(v, u) != 0) d = d + x(v, u) * (Poly::variable(nv, u) * dv);
    }
    for (const auto& [e, c] : d.terms()) {
      auto it = index.find(e);
      if (it == index.end()) {
        if (allow_discard) continue;
        throw std::invalid_argument("tangent_matrix: action leaves the span");
      }
      out(int(r), it->second) = c;
    }
  }
  return out;
}

namespace {

// chevalley sl2 on two variables
Mat<Rat> sl2_e() { return Mat<Rat>{{rat(0), rat(1)}, {rat(0), rat(0)}}; }
Mat<Rat> sl2_h() { return Mat<Rat>{{rat(1), rat(0)}, {rat(0), rat(-1)}}; }
Mat<Rat> sl2_f() { return Mat<Rat>{{rat(0), rat(0)}, {rat(1), rat(0)}}; }

Mat<Rat> block4(const Mat<Rat>& s_part, const Mat<Rat>& t_part) {
  Mat<Rat> b(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b(i, j) = s_part(i, j);
      b(2 + i, 2 + j) = t_part(i, j);
    }
  return b;
}

// x_{ij} = s0^{2-i} s1^i t0^{2-j} t1^j, coordinate k = 3i + j
std::vector<Poly::Expo> p1xp1_monomials() {
  std::vector<Poly::Expo> ms;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) ms.push_back({2 - i, i, 2 - j, j});
  return ms;
}

// cubic monomials in v0,v1,v2 except v0^3, in the fixed model order
std::vector<Poly::Expo> blowup_monomials() {
  return {{2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2},
          {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
}

CanonicalModel build_p1xp1() {
  CanonicalModel m;
  m.kind = SurfaceKind::P1xP1;
  auto ms = p1xp1_monomials();
  Mat<Rat> z2(2, 2);
  std::vector<Mat<Rat>> basis{
      tangent_matrix(block4(sl2_e(), z2), ms), tangent_matrix(block4(sl2_h(), z2), ms),
      tangent_matrix(block4(sl2_f(), z2), ms), tangent_matrix(block4(z2, sl2_e()), ms),
      tangent_matrix(block4(z2, sl2_h()), ms), tangent_matrix(block4(z2, sl2_f()), ms)};
  m.lie = LieAlgebra<Rat>::from_realization(basis);
  m.param.spec = ParamMap::ParamSpec::Bihomogeneous;
  for (const auto& e : ms) m.param.components.push_back(Poly::monomial(e, Rat(1)));
  m.ideal = quadrics_of_parametrization(m.param);
  return m;
}

CanonicalModel build_blowup() {
  CanonicalModel m;
  m.kind = SurfaceKind::BlowupY;
  auto ms = blowup_monomials();
  auto unit = [](int i, int j) {
    Mat<Rat> u(3, 3);
    u(i, j) = 1;
    return u;
  };
  Mat<Rat> adir(3, 3);
  adir(0, 0) = 2;
  adir(1, 1) = -1;
  adir(2, 2) = -1;
  Mat<Rat> h(3, 3);
  h(1, 1) = 1;
  h(2, 2) = -1;
  std::vector<Mat<Rat>> basis;
  for (const auto& x : {adir, unit(0, 1), unit(0, 2), h, unit(1, 2), unit(2, 1)})
    basis.push_back(tangent_matrix(x, ms, /*allow_discard=*/true));
  m.lie = LieAlgebra<Rat>::from_realization(basis);
  m.param.spec = ParamMap::ParamSpec::Plane;
  for (const auto& e : ms) m.param.components.push_back(Poly::monomial(e, Rat(1)));
  m.ideal = quadrics_of_parametrization(m.param);
  return m;
}

CanonicalModel build_sphere(const Int& a) {
  QuadField field(a);
  CanonicalModel m;
  m.kind = SurfaceKind::Sphere;
  m.sphere_a = field.a;

  auto ms = p1xp1_monomials();
  Mat<Rat> z2(2, 2);
  // actions of the two sl2(E) factors on the e_{ij} coordinates, as rational
  // matrices (scalar extension happens through the QuadExt coefficients)
  Mat<Rat> r1e = tangent_matrix(block4(sl2_e(), z2), ms);
  Mat<Rat> r1h = tangent_matrix(block4(sl2_h(), z2), ms);
  Mat<Rat> r1f = tangent_matrix(block4(sl2_f(), z2), ms);
  Mat<Rat> r2e = tangent_matrix(block4(z2, sl2_e()), ms);
  Mat<Rat> r2h = tangent_matrix(block4(z2, sl2_h()), ms);
  Mat<Rat> r2f = tangent_matrix(block4(z2, sl2_f()), ms);

  // basis B of the fixed space of c e_{ij} -> conj(c) e_{ji}
  QuadExt alpha = alpha_of(field);
  QuadExt inv_alpha = QuadExt(1) / alpha;
  Mat<QuadExt> tb(9, 9);
  auto set_col = [&](int col, int k1, const QuadExt& c1, int k2, const QuadExt& c2) {
    tb(k1, col) = tb(k1, col) + c1;
    if (k2 >= 0) tb(k2, col) = tb(k2, col) + c2;
  };
  auto idx = [](int i, int j) { return 3 * i + j; };
  set_col(0, idx(0, 0), QuadExt(1), -1, QuadExt(0));
  set_col(1, idx(1, 1), QuadExt(1), -1, QuadExt(0));
  set_col(2, idx(2, 2), QuadExt(1), -1, QuadExt(0));
  set_col(3, idx(0, 1), QuadExt(1), idx(1, 0), QuadExt(1));
  set_col(4, idx(1, 2), QuadExt(1), idx(2, 1), QuadExt(1));
  set_col(5, idx(0, 2), QuadExt(1), idx(2, 0), QuadExt(1));
  set_col(6, idx(1, 0), inv_alpha, idx(0, 1), -inv_alpha);
  set_col(7, idx(2, 1), inv_alpha, idx(1, 2), -inv_alpha);
  set_col(8, idx(2, 0), inv_alpha, idx(0, 2), -inv_alpha);
  auto tb_inv = inverse(tb);
  if (!tb_inv) throw std::logic_error("canonical_sphere: basis B is singular");

  // abstract basis (w, conj(w)) for w in {e,h,f, alpha e, alpha h, alpha f}:
  // realization T_B^{-1} (rho1(w) + rho2(conj w)) T_B, rational by symmetry
  auto embed = [](const Mat<Rat>& r) {
    Mat<QuadExt> q(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) q(i, j) = QuadExt(r(i, j));
    return q;
  };
  std::vector<Mat<Rat>> basis;
  std::array<Mat<Rat>, 3> gens1{r1e, r1h, r1f}, gens2{r2e, r2h, r2f};
  for (int scaled = 0; scaled < 2; ++scaled)
    for (int g = 0; g < 3; ++g) {
      Mat<QuadExt> w1 = embed(gens1[g]);
      Mat<QuadExt> w2 = embed(gens2[g]);
      Mat<QuadExt> total =
          scaled ? Mat<QuadExt>(alpha * w1 + (-alpha) * w2) : Mat<QuadExt>(w1 + w2);
      Mat<QuadExt> conj = *tb_inv * total * tb;
      Mat<Rat> real(9, 9);
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
          if (conj(i, j).y() != 0)
            throw std::logic_error("canonical_sphere: realization is not rational");
          real(i, j) = conj(i, j).x();
        }
      basis.push_back(std::move(real));
    }
  m.lie = LieAlgebra<Rat>::from_realization(basis);

  // parametrization in basis-B coordinates: (1, P, P^2, u, Pu, 2u^2-P, v, Pv,
  // 2uv) with P = u^2 - v^2/a
  Poly u = Poly::variable(2, 0), v = Poly::variable(2, 1);
  Poly one = Poly::constant(2, Rat(1));
  Poly p = u * u - rat(1) / Rat(field.a) * (v * v);
  m.param.spec = ParamMap::ParamSpec::Affine;
  m.param.components = {one,          p, p * p, u, p * u, Rat(2) * (u * u) - p,
                        v,            p * v,    Rat(2) * (u * v)};
  m.ideal = quadrics_of_parametrization(m.param);
  return m;
}

}  // namespace

const CanonicalModel& canonical_p1xp1() {
  static const CanonicalModel m = build_p1xp1();
  return m;
}

const CanonicalModel& canonical_blowup() {
  static const CanonicalModel m = build_blowup();
  return m;
}

const CanonicalModel& canonical_sphere(const Int& a) {
  static std::map<Int, CanonicalModel> cache;
  Int key = squarefree_part(a);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_sphere(key)).first;
  return it->second;
}

// --------------------------------------------------------------------------
// Fixtures
// --------------------------------------------------------------------------

namespace {

// reduce all powers var^k, k >= 2 of variable `var` by var^2 -> rhs
Poly reduce_square(Poly p, int var, const Poly& rhs) {
  for (;;) {
    const auto& terms = p.terms();
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const auto& t) { return t.first[var] >= 2; });
    if (it == terms.end()) return p;
    Poly::Expo rest = it->first;
    rest[var] -= 2;
    Rat c = it->second;
    p = p - c * (Poly::monomial(it->first, Rat(1)));
    p = p + c * (Poly::monomial(rest, Rat(1)) * rhs);
  }
}

}  // namespace

QuadricIdeal anticanonical_quadric_surface_ideal(const Int& d) {
  // q: z0^2 = z1^2 + z2^2 - d z3^2
  const int nv = 4;
  Poly rhs(nv);
  rhs = Poly::monomial({0, 2, 0, 0}, Rat(1)) + Poly::monomial({0, 0, 2, 0}, Rat(1)) -
        Poly::monomial({0, 0, 0, 2}, Rat(d));
  std::vector<Poly::Expo> monomials = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                       {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
                                       {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}};
  std::vector<Poly> images;
  for (const auto& e : monomials) images.push_back(Poly::monomial(e, Rat(1)));

  std::map<Poly::Expo, int> row_of;
  std::vector<Poly> products(sym_dim(9));
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      Poly prod = reduce_square(images[i] * images[j], 0, rhs);
      if (i != j) prod = Rat(2) * prod;
      for (const auto& [e, c] : prod.terms())
        if (!row_of.count(e)) {
          int next = int(row_of.size());
          row_of[e] = next;
        }
      products[sym_index(i, j, 9)] = std::move(prod);
    }
  Mat<Rat> sys(int(row_of.size()), sym_dim(9));
  for (int col = 0; col < sym_dim(9); ++col)
    for (const auto& [e, c] : products[col].terms()) sys(row_of[e], col) = c;
  QuadricIdeal ideal;
  ideal.n = 8;
  ideal.space = Subspace<Rat>::row_space(kernel(sys));
  return ideal;
}

QuadricIdeal product_of_conics_ideal(const std::array<Rat, 3>& c1, const std::array<Rat, 3>& c2) {
  // variables x0,x1,x2,y0,y1,y2; z_{3i+j} = x_i y_j; reduce modulo the two
  // diagonal conics by x2^2 -> -(c1_0 x0^2 + c1_1 x1^2)/c1_2 and likewise y
  const int nv = 6;
  if (c1[2] == 0 || c2[2] == 0)
    throw std::invalid_argument("product_of_conics_ideal: diagonal coefficients must be nonzero");
  auto expo = [&](int var, int deg) {
    Poly::Expo e(nv, 0);
    e[var] = deg;
    return e;
  };
  Poly rhs_x = Rat(-1) / c1[2] *
               (Poly::monomial(expo(0, 2), c1[0]) + Poly::monomial(expo(1, 2), c1[1]));
  Poly rhs_y = Rat(-1) / c2[2] *
               (Poly::monomial(expo(3, 2), c2[0]) + Poly::monomial(expo(4, 2), c2[1]));
  std::vector<Poly> images;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly::Expo e(nv, 0);
      e[i] = 1;
      e[3 + j] = 1;
      images.push_back(Poly::monomial(e, Rat(1)));
    }
  std::map<Poly::Expo, int> row_of;
  std::vector<Poly> products(sym_dim(9));
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j) {
      Poly prod = images[i] * images[j];
      prod = reduce_square(prod, 2, rhs_x);
      prod = reduce_square(prod, 5, rhs_y);
      if (i != j) prod = Rat(2) * prod;
      for (const auto& [e, c] : prod.terms())
        if (!row_of.count(e)) {
          int next = int(row_of.size());
          row_of[e] = next;
        }
      products[sym_index(i, j, 9)] = std::move(prod);
    }
  Mat<Rat> sys(int(row_of.size()), sym_dim(9));
  for (int col = 0; col < sym_dim(9); ++col)
    for (const auto& [e, c] : products[col].terms()) sys(row_of[e], col) = c;
  QuadricIdeal ideal;
  ideal.n = 8;
  ideal.space = Subspace<Rat>::row_space(kernel(sys));
  return ideal;
}

}  // namespace dp8
