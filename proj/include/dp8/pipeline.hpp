#pragma once

#include "dp8/canonical.hpp"
#include "dp8/modrep.hpp"

namespace dp8 {

struct PipelineConfig {
  long conic_height = kDefaultConicHeight;
  int sphere_row_nonzeros = 3;  // sparsity of generated sphere perturbations
};

enum class ResultTag { Parametrization, NotRational, Inconclusive, InvalidInput };

// Re-checkable witness of non-rationality: the Killing-form conic that failed,
// with its local obstruction, and the classification stage that produced it.
struct NotRationalCertificate {
  std::string stage;
  Int centroid_a = 0;  // sphere stage only: discriminant of the centroid field
  std::optional<Mat<Rat>> conic_q;
  std::optional<ConicCertificate<Rat>> cert_q;
  std::optional<Mat<QuadExt>> conic_e;
  std::optional<ConicCertificate<QuadExt>> cert_e;

  bool recheck() const;
};

struct PipelineStats {
  int lie_dim = 0;
  size_t lie_coeff_digits = 1;    // max digits in the structure constants
  size_t param_coeff_digits = 1;  // max digits in the parametrization
  double seconds = 0;
};

struct PipelineResult {
  ResultTag tag = ResultTag::InvalidInput;
  std::optional<SurfaceKind> kind;
  Int sphere_a = 0;
  std::optional<ParamMap> map;
  std::optional<Mat<Rat>> transform;
  std::optional<NotRationalCertificate> certificate;
  std::string reason;  // stage tag for InvalidInput / Inconclusive
  PipelineStats stats;
};

// The Lie algebra of an embedded variety cut out by quadrics:
// {x : x^t A + A x in I for all A in I}, with matrix realization and
// structure constants derived from it. Works for any ambient dimension.
LieAlgebra<Rat> lie_algebra_of_variety(const QuadricIdeal& ideal);

// Splits off the scalar line: L = L0 + Q*Id with L0 the traceless part.
struct ScalarSplit {
  LieAlgebra<Rat> l0;
  Vec<Rat> scalar_direction;  // coordinates of the identity in L's basis
};
std::optional<ScalarSplit> split_scalar(const LieAlgebra<Rat>& l);

PipelineResult classify_and_parametrize(const QuadricIdeal& ideal,
                                        const PipelineConfig& config = {});

// Structure-only classification: no conic solving, used by the `info`
// subcommand. classification is one of "pair_of_conic_twists", "sphere_twist",
// "blowup", "invalid".
struct SurfaceInfo {
  int lie_dim = 0;
  bool semisimple = false;
  std::string classification = "invalid";
  Int centroid_a = 0;
  std::string reason;
};
SurfaceInfo classify_structure(const QuadricIdeal& ideal);

// True iff every quadric vanishes identically under the map and the image is
// honestly a surface (generic Jacobian rank 3 including the Euler column).
bool verify_parametrization(const QuadricIdeal& ideal, const ParamMap& map);

struct GeneratedInstance {
  QuadricIdeal ideal;
  Mat<Rat> transform;  // the hidden perturbation matrix
};

// Canonical ideal transported by a random invertible integer matrix with
// entries bounded by `perturb` (sparse rows for spheres). perturb <= 0 gives
// the canonical ideal itself. Deterministic in the seed.
GeneratedInstance generate_instance(SurfaceKind kind, const Int& a, long perturb, uint64_t seed,
                                    int sphere_row_nonzeros = 3);

}  // namespace dp8
