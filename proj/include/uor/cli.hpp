#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uor::cli {

/// Runs the command-line front end. Exit protocol:
///   0  decided / found / all verifications passed
///   1  decided negative (no witness, equilibrium check failed, suite failed)
///   2  usage, parse, or I/O error
///   3  undecided within budget
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uor::cli
