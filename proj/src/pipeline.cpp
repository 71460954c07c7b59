#include "dp8/pipeline.hpp"

#include <chrono>

#include "dp8/rng.hpp"

namespace dp8 {

namespace {

Vec<Rat> unit6(int i) {
  Vec<Rat> v(6, Rat(0));
  v[i] = 1;
  return v;
}

size_t sc_digits(const LieAlgebra<Rat>& l) {
  size_t d = 1;
  for (const auto& plane : l.sc())
    for (const auto& row : plane)
      for (const auto& c : row) d = std::max(d, rat_digits(c));
  return d;
}

size_t map_digits(const ParamMap& m) {
  size_t d = 1;
  for (const auto& p : m.components) d = std::max(d, p.max_coeff_digits());
  return d;
}

Mat<QuadExt> embed_qext(const Mat<Rat>& m) {
  Mat<QuadExt> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
  return out;
}

// normalizes an intertwiner to a primitive integer matrix with positive
// leading entry, so pipeline output is deterministic and small
Mat<Rat> primitivize_matrix(Mat<Rat> m) {
  Int l = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Int d = m(i, j).get_den(), g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
  Int g = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      m(i, j) *= Rat(l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_num().get_mpz_t());
    }
  if (g > 1)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) /= Rat(g);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) {
        if (m(i, j) < 0)
          for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
        return m;
      }
  return m;
}

// final gate: the canonical quadric space transported by M equals the input
// space, A -> M^{-t} A M^{-1}
bool transports_ideal(const Mat<Rat>& m, const QuadricIdeal& canonical, const QuadricIdeal& input) {
  auto mi = inverse(m);
  if (!mi) return false;
  Mat<Rat> mit = mi->transpose();
  std::vector<Vec<Rat>> rows;
  for (const auto& a : canonical.basis_matrices()) rows.push_back(sym_to_vec(mit * a * *mi));
  return Subspace<Rat>::span(sym_dim(canonical.matrix_size()), rows) == input.space;
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem-3 computation
// ---------------------------------------------------------------------------

LieAlgebra<Rat> lie_algebra_of_variety(const QuadricIdeal& ideal) {
  if (ideal.dim() == 0) throw std::invalid_argument("lie_algebra_of_variety: empty ideal");
  const int size = ideal.matrix_size();
  std::vector<Mat<Rat>> quadrics = ideal.basis_matrices();

  // current candidate space, cut down one quadric at a time
  std::vector<Mat<Rat>> current;
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v) {
      Mat<Rat> e(size, size);
      e(u, v) = 1;
      current.push_back(std::move(e));
    }
  for (const auto& a : quadrics) {
    if (current.empty()) break;
    const int cols = int(current.size());
    Mat<Rat> sys(sym_dim(size), cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel_elimination())
#endif
    for (int r = 0; r < cols; ++r) {
      Vec<Rat> residue =
          ideal.space.reduce(sym_to_vec(current[r].transpose() * a + a * current[r]));
      for (int i = 0; i < sym_dim(size); ++i) sys(i, r) = residue[i];
    }
    Mat<Rat> ker = kernel(sys);
    std::vector<Mat<Rat>> next;
    for (int r = 0; r < ker.rows(); ++r) {
      Mat<Rat> combo(size, size);
      for (int c = 0; c < cols; ++c)
        if (ker(r, c) != 0) combo = combo + ker(r, c) * current[c];
      next.push_back(std::move(combo));
    }
    current = std::move(next);
  }
  // canonical basis for determinism and equivariance-by-subspace semantics
  std::vector<Vec<Rat>> vecs;
  for (const auto& m : current) {
    Vec<Rat> v(size * size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) v[i * size + j] = m(i, j);
    vecs.push_back(std::move(v));
  }
  Subspace<Rat> span = Subspace<Rat>::span(size * size, vecs);
  std::vector<Mat<Rat>> basis;
  for (int r = 0; r < span.dim(); ++r) {
    Vec<Rat> v = span.basis_vector(r);
    Mat<Rat> m(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = v[i * size + j];
    basis.push_back(std::move(m));
  }
  return LieAlgebra<Rat>::from_realization(basis);
}

std::optional<ScalarSplit> split_scalar(const LieAlgebra<Rat>& l) {
  if (!l.has_realization()) throw std::invalid_argument("split_scalar: realization required");
  const auto& basis = l.realization();
  if (basis.empty()) return std::nullopt;
  const int size = basis[0].rows();
  Mat<Rat> cols(size * size, l.dim());
  for (int k = 0; k < l.dim(); ++k)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) cols(i * size + j, k) = basis[k](i, j);
  Vec<Rat> id(size * size, Rat(0));
  for (int i = 0; i < size; ++i) id[i * size + i] = 1;
  auto scalar_coords = solve(cols, id);
  if (!scalar_coords) return std::nullopt;

  std::vector<Vec<Rat>> traceless;
  for (const auto& m : basis) {
    Mat<Rat> t = m;
    Rat tr = m.trace() / size;
    for (int i = 0; i < size; ++i) t(i, i) -= tr;
    Vec<Rat> v(size * size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) v[i * size + j] = t(i, j);
    traceless.push_back(std::move(v));
  }
  Subspace<Rat> span = Subspace<Rat>::span(size * size, traceless);
  if (span.dim() != l.dim() - 1) return std::nullopt;
  std::vector<Mat<Rat>> l0_basis;
  for (int r = 0; r < span.dim(); ++r) {
    Vec<Rat> v = span.basis_vector(r);
    Mat<Rat> m(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = v[i * size + j];
    l0_basis.push_back(std::move(m));
  }
  ScalarSplit out{LieAlgebra<Rat>::from_realization(l0_basis), *scalar_coords};
  return out;
}

// ---------------------------------------------------------------------------
// Branches
// ---------------------------------------------------------------------------

namespace {

struct BranchContext {
  const QuadricIdeal& input;
  const PipelineConfig& config;
  LieAlgebra<Rat> l0;
  PipelineResult out;  // stats prefilled
};

PipelineResult invalid(BranchContext& ctx, const std::string& reason) {
  ctx.out.tag = ResultTag::InvalidInput;
  ctx.out.reason = reason;
  return std::move(ctx.out);
}

// shared tail: final transport gate, map construction, exact verification
PipelineResult finish(BranchContext& ctx, const CanonicalModel& model, const Mat<Rat>& iso) {
  Mat<Rat> m = primitivize_matrix(iso);
  if (!transports_ideal(m, model.ideal, ctx.input))
    return invalid(ctx, "final check: transported canonical ideal differs");
  ParamMap map = transform_map(m, model.param);
  if (!verify_parametrization(ctx.input, map))
    return invalid(ctx, "final check: parametrization failed verification");
  ctx.out.tag = ResultTag::Parametrization;
  ctx.out.kind = model.kind;
  ctx.out.sphere_a = model.sphere_a;
  ctx.out.map = std::move(map);
  ctx.out.transform = std::move(m);
  ctx.out.stats.param_coeff_digits = map_digits(*ctx.out.map);
  return std::move(ctx.out);
}

PipelineResult p1xp1_branch(BranchContext& ctx, const Subspace<Rat>& i1, const Subspace<Rat>& i2) {
  std::vector<Sl2Triple<Rat>> triples;
  const Subspace<Rat>* ideals[2] = {&i1, &i2};
  for (int k = 0; k < 2; ++k) {
    auto sub = restrict_to_subalgebra(ctx.l0, *ideals[k]);
    if (!sub) return invalid(ctx, "ideal is not a subalgebra");
    Sl2Result<Rat> res = identify_sl2(sub->algebra, ctx.config.conic_height);
    if (!res.triple) {
      if (res.certificate.status == ConicStatus::Unsolvable) {
        NotRationalCertificate cert;
        cert.stage = k == 0 ? "p1xp1 factor 1" : "p1xp1 factor 2";
        cert.conic_q = killing_form(sub->algebra);
        cert.cert_q = res.certificate;
        ctx.out.tag = ResultTag::NotRational;
        ctx.out.certificate = std::move(cert);
        return std::move(ctx.out);
      }
      return invalid(ctx, "sl2 identification failed structurally");
    }
    triples.push_back(Sl2Triple<Rat>{sub->embed * res.triple->e, sub->embed * res.triple->h,
                                     sub->embed * res.triple->f});
  }
  const CanonicalModel& model = canonical_p1xp1();
  // nu maps the abstract basis (e1,h1,f1,e2,h2,f2) to the identified triples
  std::vector<Mat<Rat>> input_action;
  for (const auto& t : triples)
    for (const Vec<Rat>* v : {&t.e, &t.h, &t.f}) input_action.push_back(ctx.l0.realize(*v));
  std::optional<ModuleAction> a, b;
  try {
    a.emplace(model.lie, model.lie.realization());
    b.emplace(model.lie, input_action);
  } catch (const std::invalid_argument&) {
    return invalid(ctx, "identified triples do not satisfy the sl2+sl2 bracket");
  }
  std::vector<Sl2Triple<Rat>> abstract_triples{{unit6(0), unit6(1), unit6(2)},
                                               {unit6(3), unit6(4), unit6(5)}};
  auto m = highest_weight_iso(*a, *b, abstract_triples);
  if (!m) return invalid(ctx, "module is not irreducible of highest weight (2,2)");
  return finish(ctx, model, *m);
}

PipelineResult blowup_branch(BranchContext& ctx) {
  auto ld = levi_data(ctx.l0);
  if (!ld) return invalid(ctx, "Levi decomposition failed");
  const Subspace<Rat>& nil = ld->nilradical;
  if (nil.dim() != 2) return invalid(ctx, "nilradical is not 2-dimensional");
  if (!vec_is_zero(ctx.l0.bracket(nil.basis_vector(0), nil.basis_vector(1))))
    return invalid(ctx, "nilradical is not abelian");
  if (ld->levi.dim() != 3) return invalid(ctx, "Levi subalgebra is not 3-dimensional");
  Subspace<Rat> s = normalizer(ctx.l0, ld->levi);
  if (s.dim() != 4) return invalid(ctx, "normalizer of the Levi is not 4-dimensional");

  // mu: S -> End(I) in the canonical basis of I; must be bijective (faithful)
  auto mu_of = [](const LieAlgebra<Rat>& l, const Subspace<Rat>& sspace,
                  const Subspace<Rat>& ispace, int j) {
    Vec<Rat> sj = sspace.basis_vector(j);
    Mat<Rat> m(2, 2);
    for (int i = 0; i < 2; ++i) {
      auto c = ispace.coordinates(l.bracket(sj, ispace.basis_vector(i)));
      if (!c) return std::optional<Mat<Rat>>{};
      for (int k = 0; k < 2; ++k) m(k, i) = (*c)[k];
    }
    return std::optional<Mat<Rat>>{m};
  };
  Mat<Rat> mu_x(4, 4);  // columns: vec of mu(s_j)
  for (int j = 0; j < 4; ++j) {
    auto m = mu_of(ctx.l0, s, nil, j);
    if (!m) return invalid(ctx, "normalizer does not act on the nilradical");
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) mu_x(r * 2 + c, j) = (*m)(r, c);
  }
  if (det(mu_x) == 0) return invalid(ctx, "adjoint action of S on the nilradical is not faithful");

  const CanonicalModel& model = canonical_blowup();
  // same construction on the canonical side, with I = span(b1,b2), S computed
  // from its own Levi data (deterministic, no hand-written constants)
  Subspace<Rat> nil_can = Subspace<Rat>::span(6, {unit6(1), unit6(2)});
  Subspace<Rat> s_can = Subspace<Rat>::span(6, {unit6(0), unit6(3), unit6(4), unit6(5)});
  Mat<Rat> mu_can(4, 4);
  for (int j = 0; j < 4; ++j) {
    auto m = mu_of(model.lie, s_can, nil_can, j);
    if (!m) return invalid(ctx, "canonical model construction failed");
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) mu_can(r * 2 + c, j) = (*m)(r, c);
  }
  // nu on S: mu_x^{-1} mu_can, then spread to the full basis
  auto mu_inv = inverse(mu_x);
  if (!mu_inv) return invalid(ctx, "faithful action inversion failed");
  Mat<Rat> s_coeff = *mu_inv * mu_can;  // 4x4: columns = nu(s^can_j) in S-basis
  Mat<Rat> nu(6, 6);
  // abstract basis order: adir, b1, b2, h, e, f; canonical S-basis order in
  // s_can is (adir, h, e, f) = columns 0..3 of mu_can
  auto put_col = [&](int dst, const Vec<Rat>& v) {
    for (int i = 0; i < 6; ++i) nu(i, dst) = v[i];
  };
  auto s_combo = [&](int col) {
    Vec<Rat> v(6, Rat(0));
    for (int j = 0; j < 4; ++j) v = vec_add(v, vec_scale(s_coeff(j, col), s.basis_vector(j)));
    return v;
  };
  put_col(0, s_combo(0));
  put_col(1, nil.basis_vector(0));
  put_col(2, nil.basis_vector(1));
  put_col(3, s_combo(1));
  put_col(4, s_combo(2));
  put_col(5, s_combo(3));
  // verify nu is a Lie isomorphism
  if (det(nu) == 0) return invalid(ctx, "blowup identification is singular");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Vec<Rat> lhs = ctx.l0.bracket(nu.col(i), nu.col(j));
      Vec<Rat> rhs(6, Rat(0));
      for (int k = 0; k < 6; ++k)
        if (model.lie.sc()[i][j][k] != 0) rhs = vec_add(rhs, vec_scale(model.lie.sc()[i][j][k], nu.col(k)));
      if (lhs != rhs) return invalid(ctx, "blowup identification is not a homomorphism");
    }

  std::vector<Mat<Rat>> input_action;
  for (int k = 0; k < 6; ++k) input_action.push_back(ctx.l0.realize(nu.col(k)));
  std::optional<ModuleAction> a, b;
  try {
    a.emplace(model.lie, model.lie.realization());
    b.emplace(model.lie, input_action);
  } catch (const std::invalid_argument&) {
    return invalid(ctx, "blowup action does not respect the bracket");
  }
  Sl2Triple<Rat> levi{unit6(4), unit6(3), unit6(5)};
  auto m = blowup_module_iso(*a, *b, levi, {unit6(1), unit6(2)});
  if (!m) return invalid(ctx, "module is not of blowup type (2,3,4 summands)");
  return finish(ctx, model, *m);
}

PipelineResult sphere_branch(BranchContext& ctx) {
  auto cents = centroid(ctx.l0);
  if (cents.size() != 2) return invalid(ctx, "centroid is not 2-dimensional");
  Mat<Rat> c = cents[1];
  UPoly<Rat> mp = minimal_polynomial(c);
  if (mp.degree() != 2) return invalid(ctx, "centroid element is not quadratic");
  Rat p = mp.coeff(1);
  Mat<Rat> c0 = c;
  for (int i = 0; i < 6; ++i) c0(i, i) += p / 2;
  Rat delta = p * p / 4 - mp.coeff(0);
  if (delta == 0 || is_rational_square(delta))
    return invalid(ctx, "centroid is not a quadratic field");
  Int a = squarefree_part(Int(delta.get_num() * delta.get_den()));
  auto mscale = rat_sqrt(delta / Rat(a));
  if (!mscale) return invalid(ctx, "centroid discriminant normalization failed");
  Mat<Rat> gamma = Rat(Rat(1) / *mscale) * c0;  // gamma^2 = a * Id
  ctx.out.sphere_a = a;

  QuadField field{a};
  FTag<QuadExt> tag{field};
  auto le = ctx.l0.extend_scalars();
  QuadExt alpha = alpha_of(field);
  Mat<QuadExt> shifted = embed_qext(gamma);
  for (int i = 0; i < 6; ++i) shifted(i, i) -= alpha;
  Subspace<QuadExt> l1 = Subspace<QuadExt>::row_space(kernel(shifted));
  if (l1.dim() != 3) return invalid(ctx, "centroid eigenspace is not 3-dimensional");
  auto sub1 = restrict_to_subalgebra(le, l1);
  if (!sub1) return invalid(ctx, "centroid eigenspace is not a subalgebra");

  Sl2Result<QuadExt> res = identify_sl2(sub1->algebra, ctx.config.conic_height, tag);
  if (!res.triple) {
    if (res.certificate.status == ConicStatus::Unsolvable) {
      NotRationalCertificate cert;
      cert.stage = "sphere";
      cert.centroid_a = a;
      cert.conic_e = killing_form(sub1->algebra);
      cert.cert_e = res.certificate;
      ctx.out.tag = ResultTag::NotRational;
      ctx.out.certificate = std::move(cert);
      return std::move(ctx.out);
    }
    if (res.certificate.status == ConicStatus::Inconclusive) {
      ctx.out.tag = ResultTag::Inconclusive;
      ctx.out.reason = "conic search over Q(sqrt(" + a.get_str() + ")) exhausted at height " +
                       std::to_string(res.certificate.height_bound);
      return std::move(ctx.out);
    }
    return invalid(ctx, "sl2 identification over the extension failed structurally");
  }
  // Chevalley triple of L1 in the coordinates of L0 x E
  Vec<QuadExt> e1 = sub1->embed * res.triple->e;
  Vec<QuadExt> h1 = sub1->embed * res.triple->h;
  Vec<QuadExt> f1 = sub1->embed * res.triple->f;
  Mat<QuadExt> basis_cols(6, 3);
  for (int i = 0; i < 6; ++i) {
    basis_cols(i, 0) = e1[i];
    basis_cols(i, 1) = h1[i];
    basis_cols(i, 2) = f1[i];
  }
  // phi(b_i): project b_i to L1 along L2, write in the triple's coordinates,
  // and split into rational and alpha parts
  QuadExt half(rat(1, 2));
  QuadExt inv_alpha = QuadExt(1) / alpha;
  Mat<Rat> phi(6, 6);
  for (int i = 0; i < 6; ++i) {
    Vec<QuadExt> bi(6, QuadExt(0));
    bi[i] = QuadExt(1);
    Vec<QuadExt> gb = embed_qext(gamma) * bi;
    Vec<QuadExt> x1(6);
    for (int r = 0; r < 6; ++r) x1[r] = half * (bi[r] + inv_alpha * gb[r]);
    auto w = solve(basis_cols, x1);
    if (!w) return invalid(ctx, "projection does not land in the identified factor");
    for (int g = 0; g < 3; ++g) {
      phi(g, i) = (*w)[g].x();
      phi(3 + g, i) = (*w)[g].y();
    }
  }
  auto phi_inv = inverse(phi);
  if (!phi_inv) return invalid(ctx, "descent isomorphism is singular");

  const CanonicalModel& model = canonical_sphere(a);
  // verify phi transports brackets onto the abstract sphere algebra
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Vec<Rat> lhs = phi * ctx.l0.bracket(phi_inv->col(i), phi_inv->col(j));
      Vec<Rat> rhs(6, Rat(0));
      for (int k = 0; k < 6; ++k) {
        const Rat& cst = model.lie.sc()[i][j][k];
        if (cst != 0) {
          Vec<Rat> ek(6, Rat(0));
          ek[k] = cst;
          rhs = vec_add(rhs, ek);
        }
      }
      if (lhs != rhs) return invalid(ctx, "descent map is not a Lie isomorphism");
    }

  std::vector<Mat<Rat>> input_action;
  for (int k = 0; k < 6; ++k) input_action.push_back(ctx.l0.realize(phi_inv->col(k)));
  std::optional<ModuleAction> am, bm;
  try {
    am.emplace(model.lie, model.lie.realization());
    bm.emplace(model.lie, input_action);
  } catch (const std::invalid_argument&) {
    return invalid(ctx, "sphere action does not respect the bracket");
  }
  auto m = module_iso_linear(*am, *bm);
  if (!m) return invalid(ctx, "sphere modules are not isomorphic");
  return finish(ctx, model, *m);
}

}  // namespace

PipelineResult classify_and_parametrize(const QuadricIdeal& ideal, const PipelineConfig& config) {
  auto start = std::chrono::steady_clock::now();
  auto stamp = [&](PipelineResult r) {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  PipelineResult pre;
  if (ideal.n != 8) {
    pre.reason = "ambient dimension must be 8";
    return stamp(std::move(pre));
  }
  if (ideal.dim() != 20) {
    pre.reason = "quadric space dimension is " + std::to_string(ideal.dim()) + ", expected 20";
    return stamp(std::move(pre));
  }
  LieAlgebra<Rat> l = lie_algebra_of_variety(ideal);
  pre.stats.lie_dim = l.dim();
  pre.stats.lie_coeff_digits = sc_digits(l);
  auto ss = split_scalar(l);
  if (!ss) {
    pre.reason = "identity is not in the Lie algebra";
    return stamp(std::move(pre));
  }
  if (ss->l0.dim() != 6) {
    pre.reason = "traceless Lie algebra has dimension " + std::to_string(ss->l0.dim()) +
                 ", expected 6";
    return stamp(std::move(pre));
  }
  BranchContext ctx{ideal, config, std::move(ss->l0), std::move(pre)};
  if (is_semisimple(ctx.l0)) {
    auto split = decompose_two_ideals(ctx.l0);
    if (split) return stamp(p1xp1_branch(ctx, split->first, split->second));
    return stamp(sphere_branch(ctx));
  }
  return stamp(blowup_branch(ctx));
}

SurfaceInfo classify_structure(const QuadricIdeal& ideal) {
  SurfaceInfo info;
  if (ideal.n != 8 || ideal.dim() != 20) {
    info.reason = "not a 20-dimensional quadric system in P^8";
    return info;
  }
  LieAlgebra<Rat> l = lie_algebra_of_variety(ideal);
  info.lie_dim = l.dim();
  auto ss = split_scalar(l);
  if (!ss || ss->l0.dim() != 6) {
    info.reason = "Lie algebra does not split as scalars + 6-dimensional part";
    return info;
  }
  info.semisimple = is_semisimple(ss->l0);
  if (!info.semisimple) {
    auto ld = levi_data(ss->l0);
    if (ld && ld->nilradical.dim() == 2 && ld->levi.dim() == 3) {
      info.classification = "blowup";
    } else {
      info.reason = "non-semisimple but not of blowup type";
    }
    return info;
  }
  if (decompose_two_ideals(ss->l0)) {
    info.classification = "pair_of_conic_twists";
    return info;
  }
  auto cents = centroid(ss->l0);
  if (cents.size() == 2) {
    UPoly<Rat> mp = minimal_polynomial(cents[1]);
    if (mp.degree() == 2) {
      Rat delta = mp.coeff(1) * mp.coeff(1) / 4 - mp.coeff(0);
      if (delta != 0 && !is_rational_square(delta)) {
        info.classification = "sphere_twist";
        info.centroid_a = squarefree_part(Int(delta.get_num() * delta.get_den()));
        return info;
      }
    }
  }
  info.reason = "semisimple but centroid is not a quadratic field";
  return info;
}

bool verify_parametrization(const QuadricIdeal& ideal, const ParamMap& map) {
  if (map.components.size() != 9) return false;
  const int nv = map.components[0].nvars();
  bool any_nonzero = false;
  for (const auto& p : map.components)
    if (!p.is_zero()) any_nonzero = true;
  if (!any_nonzero) return false;
  for (const auto& q : ideal.basis_matrices()) {
    Poly total(nv);
    for (int i = 0; i < 9; ++i) {
      if (q(i, i) != 0) total = total + q(i, i) * (map.components[i] * map.components[i]);
      for (int j = i + 1; j < 9; ++j)
        if (q(i, j) != 0)
          total = total + Rat(2 * q(i, j)) * (map.components[i] * map.components[j]);
    }
    if (!total.is_zero()) return false;
  }
  // surface check: columns (p, dp/dx_1, ..., dp/dx_nv) have rank 3 at a
  // generic parameter point
  Rng rng(0x5eedf00d);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Rat> pt(nv);
    for (auto& x : pt) x = rat(rng.integer(50), rng.below(9) + 1);
    Mat<Rat> jac(9, nv + 1);
    for (int i = 0; i < 9; ++i) {
      jac(i, 0) = map.components[i].eval(pt);
      for (int v = 0; v < nv; ++v) jac(i, v + 1) = map.components[i].derivative(v).eval(pt);
    }
    if (rank(jac) == 3) return true;
  }
  return false;
}

GeneratedInstance generate_instance(SurfaceKind kind, const Int& a, long perturb, uint64_t seed,
                                    int sphere_row_nonzeros) {
  const CanonicalModel& model = kind == SurfaceKind::P1xP1    ? canonical_p1xp1()
                                : kind == SurfaceKind::BlowupY ? canonical_blowup()
                                                               : canonical_sphere(a);
  if (perturb <= 0) return {model.ideal, Mat<Rat>::identity(9)};
  Rng rng(seed);
  Mat<Rat> t(9, 9);
  for (int tries = 0; tries < 1000; ++tries) {
    t = Mat<Rat>(9, 9);
    if (kind == SurfaceKind::Sphere) {
      // sparse pattern: diagonal plus up to (row_nonzeros - 1) extra entries
      for (int i = 0; i < 9; ++i) {
        t(i, i) = Rat(rng.nonzero_integer(perturb));
        for (int k = 0; k < sphere_row_nonzeros - 1; ++k) {
          int j = int(rng.below(9));
          long val = rng.integer(perturb);
          if (j != i) t(i, j) = Rat(val);
        }
      }
    } else {
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) t(i, j) = Rat(rng.integer(perturb));
    }
    if (det(t) != 0) break;
    if (tries == 999) throw std::runtime_error("generate_instance: no invertible sample");
  }
  std::vector<Mat<Rat>> transported;
  for (const auto& q : model.ideal.basis_matrices())
    transported.push_back(t.transpose() * q * t);
  return {QuadricIdeal::from_matrices(8, transported), t};
}

bool NotRationalCertificate::recheck() const {
  if (conic_q && cert_q) {
    if (cert_q->status != ConicStatus::Unsolvable) return false;
    return conic_certificate_recheck(TernaryForm<Rat>(*conic_q), *cert_q);
  }
  if (conic_e && cert_e) {
    if (cert_e->status != ConicStatus::Unsolvable) return false;
    return conic_certificate_recheck(TernaryForm<QuadExt>(*conic_e), *cert_e);
  }
  return false;
}

}  // namespace dp8
