#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace howson::cli {

  enum ExitCode : int {
    ok                 = 0,
    verification_failed = 1,
    input_error        = 2,
    not_applicable     = 3,
    construction_failed = 4,
    depth_limit        = 5,
  };

  // Runs one command line (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace howson::cli
