// Command line front end: decide rationality of a degree-8 Del Pezzo surface
// given by its ideal of quadrics, and construct a parametrization or a
// non-rationality certificate.

#include <iostream>

#include "CLI11.hpp"
#include "dp8/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rational parametrization of degree-8 Del Pezzo surfaces"};
  app.require_subcommand(1);
  dp8::RunConfig config;

  auto* parametrize = app.add_subcommand("parametrize", "classify and parametrize an ideal");
  parametrize->add_option("--in", config.in_path, "input JSON (default: stdin)");
  parametrize->add_option("--out", config.out_path, "output JSON (default: stdout)");
  parametrize->add_option("--height", config.height, "search height for extension conics");

  auto* verify = app.add_subcommand("verify", "verify a parametrization against an ideal");
  verify->add_option("--in", config.in_path, "ideal JSON")->required();
  verify->add_option("--map", config.map_path, "parametrization JSON")->required();
  verify->add_option("--out", config.out_path, "output JSON (default: stdout)");

  auto* generate = app.add_subcommand("generate", "generate a perturbed test instance");
  generate->add_option("--kind", config.kind, "p1xp1 | blowup | sphere")->required();
  generate->add_option("--a", config.a, "sphere discriminant (squarefree non-square)");
  generate->add_option("--perturb", config.perturb, "entry bound of the perturbation matrix")
      ->required();
  generate->add_option("--seed", config.seed, "random seed")->required();
  generate->add_option("--out", config.out_path, "output JSON (default: stdout)");

  auto* conic = app.add_subcommand("conic", "find a point on a ternary conic or certify none");
  conic->add_option("--in", config.in_path, "form JSON");
  conic->add_option("--height", config.height, "search height over Q(sqrt(a))");
  conic->add_option("--out", config.out_path, "output JSON (default: stdout)");

  auto* info = app.add_subcommand("info", "structural classification without parametrizing");
  info->add_option("--in", config.in_path, "ideal JSON");
  info->add_option("--out", config.out_path, "output JSON (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : {parametrize, verify, generate, conic, info})
    if (sub->parsed()) config.subcommand = sub->get_name();
  return dp8::run(config, std::cout, std::cerr);
}
