#pragma once

// Command-line front end.  Subcommands: dfunc, inner, expect, cg, rms,
// gfactor, react, quasiprob, verify.  Returns the process exit code:
// 0 success, 1 input/domain error, 2 internal accuracy failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace gwd {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwd
