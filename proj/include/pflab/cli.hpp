#ifndef PFLAB_CLI_HPP
#define PFLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pflab {

// Runs the command-line interface; returns the process exit code.
// 0 = success, 1 = verification/computation failure, 2 = usage or parse error.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif
