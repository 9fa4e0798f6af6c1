#ifndef RAAG_CLI_HPP_
#define RAAG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace raag {

// Exit codes: 0 success, 1 semantic failure, 2 parse error, 3 I/O error.
enum ExitCode : int { kOk = 0, kFail = 1, kParse = 2, kIo = 3 };

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag

#endif  // RAAG_CLI_HPP_
