#include "dp8/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dp8/jsonio.hpp"

namespace dp8 {

namespace {

Json read_json(const std::string& path) {
  if (path.empty()) return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return Json::parse(in);
}

void write_output(const std::string& path, const Json& j, std::ostream& fallback) {
  if (path.empty()) {
    fallback << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << j.dump(2) << "\n";
}

int exit_code(ResultTag tag) {
  switch (tag) {
    case ResultTag::Parametrization: return 0;
    case ResultTag::NotRational: return 2;
    case ResultTag::Inconclusive: return 3;
    case ResultTag::InvalidInput: return 1;
  }
  return 1;
}

int run_parametrize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  QuadricIdeal ideal = quadric_ideal_from_json(read_json(config.in_path));
  err << "dp8: quadric space dimension " << ideal.dim() << "\n";
  PipelineConfig pc;
  pc.conic_height = config.height;
  PipelineResult result = classify_and_parametrize(ideal, pc);
  err << "dp8: result computed in " << result.stats.seconds << "s\n";
  write_output(config.out_path, pipeline_result_to_json(result), out);
  return exit_code(result.tag);
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  QuadricIdeal ideal = quadric_ideal_from_json(read_json(config.in_path));
  if (config.map_path.empty()) throw std::runtime_error("verify requires --map");
  ParamMap map = param_map_from_json(read_json(config.map_path));
  bool ok = verify_parametrization(ideal, map);
  write_output(config.out_path, Json{{"verified", ok}}, out);
  return ok ? 0 : 2;
}

int run_generate(const RunConfig& config, std::ostream& out, std::ostream&) {
  SurfaceKind kind;
  if (config.kind == "p1xp1")
    kind = SurfaceKind::P1xP1;
  else if (config.kind == "blowup")
    kind = SurfaceKind::BlowupY;
  else if (config.kind == "sphere")
    kind = SurfaceKind::Sphere;
  else
    throw std::runtime_error("--kind must be p1xp1, blowup, or sphere");
  GeneratedInstance inst =
      generate_instance(kind, Int(config.a), config.perturb, config.seed);
  Json j = quadric_ideal_to_json(inst.ideal);
  j["transform"] = mat_to_json(inst.transform);
  write_output(config.out_path, j, out);
  return 0;
}

int run_conic(const RunConfig& config, std::ostream& out, std::ostream&) {
  ConicInput input = conic_input_from_json(read_json(config.in_path));
  Json j;
  ConicStatus status;
  if (input.rational) {
    auto cert = solve_conic_q(*input.rational);
    j = conic_certificate_to_json(cert);
    status = cert.status;
  } else {
    auto cert = solve_conic_qext(*input.extension, input.field, config.height);
    j = conic_certificate_to_json(cert);
    status = cert.status;
  }
  write_output(config.out_path, j, out);
  switch (status) {
    case ConicStatus::Solvable: return 0;
    case ConicStatus::Unsolvable: return 2;
    case ConicStatus::Inconclusive: return 3;
  }
  return 1;
}

int run_info(const RunConfig& config, std::ostream& out, std::ostream&) {
  QuadricIdeal ideal = quadric_ideal_from_json(read_json(config.in_path));
  SurfaceInfo info = classify_structure(ideal);
  write_output(config.out_path, surface_info_to_json(info), out);
  return info.classification == "invalid" ? 1 : 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "parametrize") return run_parametrize(config, out, err);
    if (config.subcommand == "verify") return run_verify(config, out, err);
    if (config.subcommand == "generate") return run_generate(config, out, err);
    if (config.subcommand == "conic") return run_conic(config, out, err);
    if (config.subcommand == "info") return run_info(config, out, err);
    err << "unknown subcommand '" << config.subcommand << "'\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dp8
