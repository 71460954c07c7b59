#pragma once

#include <string>

#include "json.hpp"
#include "dp8/pipeline.hpp"

namespace dp8 {

using Json = nlohmann::json;

Json rat_to_json(const Rat& q);          // "p/q" string
Rat rat_from_json(const Json& j);
Json qext_to_json(const QuadExt& z);     // {"x": "p/q", "y": "r/s", "a": n}
QuadExt qext_from_json(const Json& j);

Json mat_to_json(const Mat<Rat>& m);     // {"rows", "cols", "entries"}
Mat<Rat> mat_from_json(const Json& j);
Json mat_to_json(const Mat<QuadExt>& m);
Mat<QuadExt> qext_mat_from_json(const Json& j);

Json lie_to_json(const LieAlgebra<Rat>& l);

// {"n": 8, "quadrics": [matrix...]} or {"polys": ["x0*x2 - x1^2", ...]}
QuadricIdeal quadric_ideal_from_json(const Json& j);
Json quadric_ideal_to_json(const QuadricIdeal& ideal);

// polynomial text in x0..x8 -> symmetric matrix (off-diagonals split evenly)
Mat<Rat> quadric_from_poly_string(const std::string& text, int n);

Json param_map_to_json(const ParamMap& m);
ParamMap param_map_from_json(const Json& j);

Json conic_certificate_to_json(const ConicCertificate<Rat>& c);
Json conic_certificate_to_json(const ConicCertificate<QuadExt>& c);

// {"field": {"kind": "Q"} | {"kind": "QuadExt", "a": d}, "matrix": [[...]]}
// dispatches on the field tag; exactly one of the two outputs is set
struct ConicInput {
  std::optional<TernaryForm<Rat>> rational;
  std::optional<TernaryForm<QuadExt>> extension;
  QuadField field;  // set for extension forms
};
ConicInput conic_input_from_json(const Json& j);

Json pipeline_result_to_json(const PipelineResult& r);
Json surface_info_to_json(const SurfaceInfo& info);

}  // namespace dp8
