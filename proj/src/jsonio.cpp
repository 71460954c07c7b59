#include "dp8/jsonio.hpp"

namespace dp8 {

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return rat_from_string(j.get<std::string>());
}

Json qext_to_json(const QuadExt& z) {
  return Json{{"x", rat_to_string(z.x())}, {"y", rat_to_string(z.y())}, {"a", z.ext().get_str()}};
}

QuadExt qext_from_json(const Json& j) {
  Rat x = rat_from_json(j.at("x"));
  Rat y = j.contains("y") ? rat_from_json(j.at("y")) : Rat(0);
  Int a = j.contains("a") ? Int(j.at("a").is_string() ? j.at("a").get<std::string>()
                                                      : std::to_string(j.at("a").get<long>()))
                          : Int(0);
  if (y == 0 || a == 0) return QuadExt(x);
  return QuadExt(QuadField(a), x, y);
}

Json mat_to_json(const Mat<Rat>& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat<Rat> mat_from_json(const Json& j) {
  if (j.is_array()) {
    // bare entry array
    int rows = int(j.size());
    int cols = rows ? int(j.at(0).size()) : 0;
    Mat<Rat> m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rat_from_json(j.at(r).at(c));
    return m;
  }
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  Mat<Rat> m(rows, cols);
  const Json& e = j.at("entries");
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rat_from_json(e.at(r).at(c));
  return m;
}

Json mat_to_json(const Mat<QuadExt>& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(qext_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat<QuadExt> qext_mat_from_json(const Json& j) {
  const Json& body = j.is_array() ? j : j.at("entries");
  int rows = int(body.size());
  int cols = rows ? int(body.at(0).size()) : 0;
  Mat<QuadExt> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const Json& cell = body.at(r).at(c);
      m(r, c) = cell.is_object() ? qext_from_json(cell) : QuadExt(rat_from_json(cell));
    }
  return m;
}

Json lie_to_json(const LieAlgebra<Rat>& l) {
  Json sc = Json::array();
  for (int i = 0; i < l.dim(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < l.dim(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < l.dim(); ++k) row.push_back(rat_to_string(l.sc()[i][j][k]));
      plane.push_back(std::move(row));
    }
    sc.push_back(std::move(plane));
  }
  Json out{{"dim", l.dim()}, {"field", Json{{"kind", "Q"}}}, {"sc", std::move(sc)}};
  if (l.has_realization()) {
    Json real = Json::array();
    for (const auto& m : l.realization()) real.push_back(mat_to_json(m));
    out["realization"] = std::move(real);
  }
  return out;
}

Mat<Rat> quadric_from_poly_string(const std::string& text, int n) {
  std::vector<std::string> vars;
  for (int i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  Poly p = parse_poly(text, vars);
  Mat<Rat> m(n + 1, n + 1);
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg != 2) throw std::invalid_argument("quadric expected, found a term of degree " +
                                              std::to_string(deg) + " in '" + text + "'");
    int vi = -1, vj = -1;
    for (int v = 0; v <= n; ++v) {
      if (e[v] == 2) vi = vj = v;
      if (e[v] == 1) (vi < 0 ? vi : vj) = v;
    }
    if (vi == vj)
      m(vi, vi) += c;
    else {
      m(vi, vj) += c / 2;
      m(vj, vi) += c / 2;
    }
  }
  return m;
}

QuadricIdeal quadric_ideal_from_json(const Json& j) {
  int n = j.contains("n") ? j.at("n").get<int>() : 8;
  std::vector<Mat<Rat>> quadrics;
  if (j.contains("quadrics")) {
    for (const Json& q : j.at("quadrics")) quadrics.push_back(mat_from_json(q));
  } else if (j.contains("polys")) {
    for (const Json& q : j.at("polys"))
      quadrics.push_back(quadric_from_poly_string(q.get<std::string>(), n));
  } else {
    throw std::invalid_argument("input must contain \"quadrics\" or \"polys\"");
  }
  return QuadricIdeal::from_matrices(n, quadrics);
}

Json quadric_ideal_to_json(const QuadricIdeal& ideal) {
  Json quadrics = Json::array();
  for (const auto& m : ideal.basis_matrices()) quadrics.push_back(mat_to_json(m));
  return Json{{"n", ideal.n}, {"quadrics", std::move(quadrics)}};
}

Json param_map_to_json(const ParamMap& m) {
  Json comps = Json::array();
  for (const auto& p : m.components) comps.push_back(poly_to_string(p, m.var_names()));
  return Json{{"params", m.spec_string()}, {"components", std::move(comps)}};
}

ParamMap param_map_from_json(const Json& j) {
  auto spec = ParamMap::spec_from_string(j.at("params").get<std::string>());
  if (!spec) throw std::invalid_argument("unknown parameter spec");
  ParamMap m;
  m.spec = *spec;
  for (const Json& c : j.at("components"))
    m.components.push_back(parse_poly(c.get<std::string>(), m.var_names()));
  if (m.components.size() != 9) throw std::invalid_argument("expected 9 components");
  return m;
}

namespace {

Json place_to_json(const Place& p) {
  if (p.is_real()) return Json{{"place", "real"}};
  return Json{{"place", "prime"}, {"p", p.prime.get_str()}};
}

template <class K>
Json cert_to_json_impl(const ConicCertificate<K>& c) {
  Json out;
  switch (c.status) {
    case ConicStatus::Solvable: out["verdict"] = "solvable"; break;
    case ConicStatus::Unsolvable: out["verdict"] = "unsolvable"; break;
    case ConicStatus::Inconclusive:
      out["verdict"] = "inconclusive";
      out["height"] = c.height_bound;
      break;
  }
  if (c.point) {
    Json pt = Json::array();
    for (const auto& x : *c.point) {
      if constexpr (std::same_as<K, Rat>)
        pt.push_back(rat_to_string(x));
      else
        pt.push_back(qext_to_json(x));
    }
    out["point"] = std::move(pt);
  }
  if (c.obstruction) out["obstruction"] = place_to_json(*c.obstruction);
  return out;
}

}  // namespace

Json conic_certificate_to_json(const ConicCertificate<Rat>& c) { return cert_to_json_impl(c); }
Json conic_certificate_to_json(const ConicCertificate<QuadExt>& c) { return cert_to_json_impl(c); }

ConicInput conic_input_from_json(const Json& j) {
  ConicInput out;
  std::string kind = "Q";
  if (j.contains("field")) kind = j.at("field").at("kind").get<std::string>();
  if (kind == "Q") {
    out.rational.emplace(mat_from_json(j.at("matrix")));
  } else if (kind == "QuadExt") {
    Int a(j.at("field").at("a").is_string() ? j.at("field").at("a").get<std::string>()
                                            : std::to_string(j.at("field").at("a").get<long>()));
    out.field = QuadField(a);
    out.extension.emplace(qext_mat_from_json(j.at("matrix")));
  } else {
    throw std::invalid_argument("field kind must be Q or QuadExt");
  }
  return out;
}

Json pipeline_result_to_json(const PipelineResult& r) {
  Json out;
  switch (r.tag) {
    case ResultTag::Parametrization: out["result"] = "parametrization"; break;
    case ResultTag::NotRational: out["result"] = "not_rational"; break;
    case ResultTag::Inconclusive: out["result"] = "inconclusive"; break;
    case ResultTag::InvalidInput: out["result"] = "invalid"; break;
  }
  if (r.kind) {
    switch (*r.kind) {
      case SurfaceKind::P1xP1: out["kind"] = "p1xp1"; break;
      case SurfaceKind::BlowupY: out["kind"] = "blowup"; break;
      case SurfaceKind::Sphere:
        out["kind"] = "sphere";
        out["a"] = r.sphere_a.get_str();
        break;
    }
  }
  if (r.map) out["map"] = param_map_to_json(*r.map);
  if (r.transform) out["transform"] = mat_to_json(*r.transform);
  if (r.certificate) {
    Json cert{{"stage", r.certificate->stage}};
    if (r.certificate->centroid_a != 0) cert["a"] = r.certificate->centroid_a.get_str();
    if (r.certificate->conic_q) cert["conic"] = mat_to_json(*r.certificate->conic_q);
    if (r.certificate->cert_q) cert["conic_certificate"] = conic_certificate_to_json(*r.certificate->cert_q);
    if (r.certificate->conic_e) cert["conic"] = mat_to_json(*r.certificate->conic_e);
    if (r.certificate->cert_e) cert["conic_certificate"] = conic_certificate_to_json(*r.certificate->cert_e);
    out["certificate"] = std::move(cert);
  }
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["stats"] = Json{{"lie_dim", r.stats.lie_dim},
                      {"max_coeff_digits", r.stats.lie_coeff_digits},
                      {"param_coeff_digits", r.stats.param_coeff_digits},
                      {"seconds", r.stats.seconds}};
  return out;
}

Json surface_info_to_json(const SurfaceInfo& info) {
  Json out{{"lie_dim", info.lie_dim},
           {"semisimple", info.semisimple},
           {"classification", info.classification}};
  if (info.centroid_a != 0) out["a"] = info.centroid_a.get_str();
  if (!info.reason.empty()) out["reason"] = info.reason;
  return out;
}

}  // namespace dp8
