#include "dp8/modrep.hpp"

#include <algorithm>

namespace dp8 {

namespace {

// columns of `vectors` restricted to a subspace: basis vectors of the
// lambda-eigenspace of op inside `space`
std::vector<Vec<Rat>> eigen_restrict(const Mat<Rat>& op, const Rat& lambda,
                                     const Subspace<Rat>& space) {
  const int m = op.rows(), k = space.dim();
  Mat<Rat> shifted = op;
  for (int i = 0; i < m; ++i) shifted(i, i) -= lambda;
  Mat<Rat> sys(m, k);
  for (int j = 0; j < k; ++j) {
    Vec<Rat> img = shifted * space.basis_vector(j);
    for (int i = 0; i < m; ++i) sys(i, j) = img[i];
  }
  Mat<Rat> ker = kernel(sys);
  std::vector<Vec<Rat>> out;
  for (int r = 0; r < ker.rows(); ++r) {
    Vec<Rat> v(m, Rat(0));
    for (int j = 0; j < k; ++j) v = vec_add(v, vec_scale(ker(r, j), space.basis_vector(j)));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rat> semisimple_eigenvalues(const Mat<Rat>& h) {
  UPoly<Rat> mp = minimal_polynomial(h);
  RationalRoots rr = rational_roots(mp);
  if (!rr.splits)
    throw std::domain_error("weight_decompose: h does not act with rational eigenvalues");
  // semisimplicity: the minimal polynomial must be squarefree, i.e. equal to
  // the product of the distinct linear factors
  UPoly<Rat> prod({Rat(1)});
  for (const Rat& r : rr.roots) prod = prod * UPoly<Rat>({-r, Rat(1)});
  if (!(prod == mp.monic()))
    throw std::domain_error("weight_decompose: h does not act semisimply");
  for (const Rat& r : rr.roots)
    if (!is_integer(r)) throw std::domain_error("weight_decompose: non-integral weight");
  return rr.roots;
}

Mat<Rat> columns(const std::vector<Vec<Rat>>& vs) {
  Mat<Rat> m(vs.empty() ? 0 : int(vs[0].size()), int(vs.size()));
  for (int j = 0; j < int(vs.size()); ++j)
    for (int i = 0; i < m.rows(); ++i) m(i, j) = vs[j][i];
  return m;
}

}  // namespace

WeightDecomposition weight_decompose(const ModuleAction& action,
                                     const std::vector<Sl2Triple<Rat>>& triples) {
  WeightDecomposition out;
  std::vector<std::pair<std::vector<Rat>, Subspace<Rat>>> current{
      {{}, Subspace<Rat>::full(action.module_dim())}};
  for (const auto& t : triples) {
    out.cartan_elements.push_back(t.h);
    Mat<Rat> h = action.apply(t.h);
    std::vector<Rat> eigs = semisimple_eigenvalues(h);
    std::vector<std::pair<std::vector<Rat>, Subspace<Rat>>> next;
    for (const auto& [w, space] : current)
      for (const Rat& lambda : eigs) {
        auto vecs = eigen_restrict(h, lambda, space);
        if (vecs.empty()) continue;
        std::vector<Rat> w2 = w;
        w2.push_back(lambda);
        next.emplace_back(std::move(w2), Subspace<Rat>::span(action.module_dim(), vecs));
      }
    current = std::move(next);
  }
  int total = 0;
  for (const auto& [w, s] : current) total += s.dim();
  if (total != action.module_dim())
    throw std::domain_error("weight_decompose: eigenspaces do not fill the module");
  std::sort(current.begin(), current.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  out.spaces = std::move(current);
  return out;
}

std::optional<Mat<Rat>> module_iso_linear(const ModuleAction& a, const ModuleAction& b) {
  if (!a.same_algebra(b)) throw std::invalid_argument("module_iso_linear: different algebras");
  if (a.module_dim() != b.module_dim())
    throw std::invalid_argument("module_iso_linear: dimension mismatch");
  const int m = a.module_dim(), d = a.algebra().dim();
  // unknown M, equations M a_i - b_i M = 0
  Mat<Rat> sys(d * m * m, m * m);
  for (int t = 0; t < d; ++t) {
    const Mat<Rat>& ai = a.matrices()[t];
    const Mat<Rat>& bi = b.matrices()[t];
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        int row = (t * m + r) * m + s;
        for (int v = 0; v < m; ++v) sys(row, r * m + v) += ai(v, s);
        for (int u = 0; u < m; ++u) sys(row, u * m + s) -= bi(r, u);
      }
  }
  Mat<Rat> ker = kernel(sys);
  const int k = ker.rows();
  if (k == 0) return std::nullopt;
  auto as_matrix = [&](const Vec<Rat>& coeff) {
    Mat<Rat> mm(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        Rat v = 0;
        for (int j = 0; j < k; ++j) v += coeff[j] * ker(j, r * m + c);
        mm(r, c) = v;
      }
    return mm;
  };
  // random small-integer combinations with widening range, then exhaustive
  // search for small solution spaces
  Rng rng(0x1e7e57);
  for (int attempt = 0; attempt < 20; ++attempt) {
    long range = attempt < 7 ? 1 : attempt < 14 ? 2 : 4;
    Vec<Rat> coeff(k);
    for (auto& c : coeff) c = Rat(rng.integer(range));
    Mat<Rat> cand = as_matrix(coeff);
    if (det(cand) != 0) return cand;
  }
  if (k <= 3) {
    std::vector<long> c(k, -3);
    for (;;) {
      Vec<Rat> coeff(k);
      for (int i = 0; i < k; ++i) coeff[i] = Rat(c[i]);
      Mat<Rat> cand = as_matrix(coeff);
      if (det(cand) != 0) return cand;
      int i = 0;
      while (i < k && c[i] == 3) c[i++] = -3;
      if (i == k) break;
      ++c[i];
    }
  }
  return std::nullopt;
}

namespace {

// highest weight vector: canonical basis vector of the lex-greatest weight
// space, which must be one-dimensional and annihilated by the raising
// operators
std::optional<Vec<Rat>> find_hwv(const ModuleAction& act, const WeightDecomposition& wd,
                                 const std::vector<Sl2Triple<Rat>>& triples,
                                 std::vector<Rat>* hw_out) {
  if (wd.spaces.empty()) return std::nullopt;
  const auto& top = wd.spaces.back();  // sorted ascending by weight tuple
  if (top.second.dim() != 1) return std::nullopt;
  Vec<Rat> w = top.second.basis_vector(0);
  for (const auto& t : triples)
    if (!vec_is_zero(act.apply(t.e) * w)) return std::nullopt;
  *hw_out = top.first;
  return w;
}

// chain basis F1^i (F2^j) w in lexicographic (i, j) order
std::vector<Vec<Rat>> lowering_basis(const ModuleAction& act,
                                     const std::vector<Sl2Triple<Rat>>& triples,
                                     const Vec<Rat>& hwv, const std::vector<Rat>& hw) {
  std::vector<Mat<Rat>> lowering;
  std::vector<long> bound;
  for (size_t t = 0; t < triples.size(); ++t) {
    lowering.push_back(act.apply(triples[t].f));
    bound.push_back(hw[t].get_num().get_si());
  }
  std::vector<Vec<Rat>> basis;
  if (triples.size() == 1) {
    Vec<Rat> v = hwv;
    for (long i = 0; i <= bound[0]; ++i) {
      basis.push_back(v);
      v = lowering[0] * v;
    }
  } else {
    for (long i = 0; i <= bound[0]; ++i) {
      Vec<Rat> vi = hwv;
      for (long k = 0; k < i; ++k) vi = lowering[0] * vi;
      for (long j = 0; j <= bound[1]; ++j) {
        Vec<Rat> v = vi;
        for (long k = 0; k < j; ++k) v = lowering[1] * v;
        basis.push_back(v);
      }
    }
  }
  return basis;
}

bool intertwines(const Mat<Rat>& m, const ModuleAction& a, const ModuleAction& b) {
  for (int i = 0; i < a.algebra().dim(); ++i)
    if (!(m * a.matrices()[i] == b.matrices()[i] * m)) return false;
  return true;
}

}  // namespace

std::optional<Mat<Rat>> highest_weight_iso(const ModuleAction& a, const ModuleAction& b,
                                           const std::vector<Sl2Triple<Rat>>& triples) {
  if (!a.same_algebra(b)) throw std::invalid_argument("highest_weight_iso: different algebras");
  if (a.module_dim() != b.module_dim()) return std::nullopt;
  if (triples.empty() || triples.size() > 2)
    throw std::invalid_argument("highest_weight_iso: one or two triples supported");
  WeightDecomposition wa, wb;
  try {
    wa = weight_decompose(a, triples);
    wb = weight_decompose(b, triples);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  std::vector<Rat> hwa, hwb;
  auto va = find_hwv(a, wa, triples, &hwa);
  auto vb = find_hwv(b, wb, triples, &hwb);
  if (!va || !vb || hwa != hwb) return std::nullopt;
  // irreducibility: the lowering chains must span the whole module
  long expect = 1;
  for (const Rat& h : hwa) expect *= h.get_num().get_si() + 1;
  if (expect != a.module_dim()) return std::nullopt;
  Mat<Rat> wa_cols = columns(lowering_basis(a, triples, *va, hwa));
  Mat<Rat> wb_cols = columns(lowering_basis(b, triples, *vb, hwb));
  auto wa_inv = inverse(wa_cols);
  if (!wa_inv) return std::nullopt;
  if (det(wb_cols) == 0) return std::nullopt;
  Mat<Rat> m = wb_cols * *wa_inv;
  if (!intertwines(m, a, b)) return std::nullopt;
  return m;
}

std::optional<Mat<Rat>> blowup_module_iso(const ModuleAction& a, const ModuleAction& b,
                                          const Sl2Triple<Rat>& levi_triple,
                                          const std::vector<Vec<Rat>>& nilradical_basis) {
  if (!a.same_algebra(b)) throw std::invalid_argument("blowup_module_iso: different algebras");
  if (a.module_dim() != 9 || b.module_dim() != 9) return std::nullopt;
  if (nilradical_basis.empty())
    throw std::invalid_argument("blowup_module_iso: nilradical basis required");

  // per-module data: chain bases of the three Levi summands W4, W3, W2
  struct Chains {
    std::vector<Vec<Rat>> w4, w3, w2;
  };
  auto build = [&](const ModuleAction& act) -> std::optional<Chains> {
    Mat<Rat> h = act.apply(levi_triple.h);
    Mat<Rat> e = act.apply(levi_triple.e);
    Mat<Rat> f = act.apply(levi_triple.f);
    auto top = [&](const Rat& lambda) -> std::vector<Vec<Rat>> {
      // ker(e) intersected with the lambda-eigenspace of h
      Mat<Rat> space = eigenspace(h, lambda);
      if (space.rows() == 0) return {};
      Mat<Rat> sys(9, space.rows());
      for (int j = 0; j < space.rows(); ++j) {
        Vec<Rat> img = e * space.row(j);
        for (int i = 0; i < 9; ++i) sys(i, j) = img[i];
      }
      Mat<Rat> ker = kernel(sys);
      std::vector<Vec<Rat>> out;
      for (int r = 0; r < ker.rows(); ++r) {
        Vec<Rat> v(9, Rat(0));
        for (int j = 0; j < space.rows(); ++j)
          v = vec_add(v, vec_scale(ker(r, j), space.row(j)));
        out.push_back(std::move(v));
      }
      return out;
    };
    auto t4 = top(Rat(3)), t3 = top(Rat(2)), t2 = top(Rat(1));
    if (t4.size() != 1 || t3.size() != 1 || t2.size() != 1) return std::nullopt;
    Chains c;
    Vec<Rat> v = t4[0];
    for (int i = 0; i < 4; ++i) {
      c.w4.push_back(v);
      v = f * v;
    }
    v = t3[0];
    for (int i = 0; i < 3; ++i) {
      c.w3.push_back(v);
      v = f * v;
    }
    v = t2[0];
    for (int i = 0; i < 2; ++i) {
      c.w2.push_back(v);
      v = f * v;
    }
    return c;
  };

  auto ca = build(a), cb = build(b);
  if (!ca || !cb) return std::nullopt;

  // coordinates of a vector in a chain
  auto coords_in = [&](const std::vector<Vec<Rat>>& chain, const Vec<Rat>& v) {
    return solve(columns(chain), v);
  };
  // relative scalar: lambda with target = lambda * source (as coordinate
  // vectors); both must be nonzero and proportional
  auto ratio = [&](const Vec<Rat>& source, const Vec<Rat>& target) -> std::optional<Rat> {
    Rat lambda = 0;
    bool set = false;
    for (size_t i = 0; i < source.size(); ++i) {
      if (source[i] == 0 && target[i] == 0) continue;
      if (source[i] == 0 || target[i] == 0) return std::nullopt;
      Rat r = target[i] / source[i];
      if (set && r != lambda) return std::nullopt;
      lambda = r;
      set = true;
    }
    if (!set || lambda == 0) return std::nullopt;
    return lambda;
  };

  // the nilradical carries W4 into W3 and W3 into W2; use the first element
  // that acts nontrivially to align the scalars. With M = 1 on the W4 chain
  // and lambda3 on W3, intertwining over b forces lambda3*sa = sb on the
  // images of w4 and lambda2*ta = lambda3*tb on the images of w3.
  std::optional<Rat> l3;
  for (const auto& nb : nilradical_basis) {
    if (l3) break;
    auto sa = coords_in(ca->w3, a.apply(nb) * ca->w4[0]);
    auto sb = coords_in(cb->w3, b.apply(nb) * cb->w4[0]);
    if (sa && sb) l3 = ratio(*sa, *sb);
  }
  if (!l3) return std::nullopt;
  std::optional<Rat> l2;
  for (const auto& nb : nilradical_basis) {
    if (l2) break;
    auto ta = coords_in(ca->w2, a.apply(nb) * ca->w3[0]);
    auto tb = coords_in(cb->w2, b.apply(nb) * cb->w3[0]);
    if (ta && tb) {
      auto r = ratio(*ta, *tb);
      if (r) l2 = *l3 * *r;
    }
  }
  if (!l2) return std::nullopt;

  std::vector<Vec<Rat>> from, to;
  for (const auto& v : ca->w4) from.push_back(v);
  for (const auto& v : ca->w3) from.push_back(v);
  for (const auto& v : ca->w2) from.push_back(v);
  for (const auto& v : cb->w4) to.push_back(v);
  for (const auto& v : cb->w3) to.push_back(vec_scale(*l3, v));
  for (const auto& v : cb->w2) to.push_back(vec_scale(*l2, v));
  Mat<Rat> from_cols = columns(from), to_cols = columns(to);
  auto from_inv = inverse(from_cols);
  if (!from_inv) return std::nullopt;
  if (det(to_cols) == 0) return std::nullopt;
  Mat<Rat> m = to_cols * *from_inv;
  if (!intertwines(m, a, b)) return std::nullopt;
  return m;
}

}  // namespace dp8
