#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dp8/conic.hpp"

namespace dp8 {

// Parsed command line. Exit codes: 0 success/parametrization, 1 invalid input
// or I/O failure, 2 not rational / unsolvable, 3 inconclusive.
struct RunConfig {
  std::string subcommand;  // parametrize | verify | generate | conic | info
  std::string in_path;     // empty = stdin
  std::string out_path;    // empty = stdout
  std::string map_path;    // verify
  long height = kDefaultConicHeight;
  std::string kind;        // generate: p1xp1 | blowup | sphere
  long a = 3;              // generate sphere discriminant
  long perturb = 0;
  unsigned long long seed = 0;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dp8
