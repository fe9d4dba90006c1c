#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rbvision/error.hpp"

namespace rbvision::app {

/// 1 = I/O, config or parameter problems; 2 = detection failure;
/// 3 = model/image mismatch.
int exit_code_for(ErrorKind kind);

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// estimate, calibrate, render, generate or eval. Data goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbvision::app
