#ifndef POWERFAM_CLI_HPP
#define POWERFAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace powerfam {
namespace cli {

// Runs the command line tool. Exit codes: 0 success (including --help),
// 1 usage error, 2 domain/data error. Output is deterministic given
// (args, input files, seed); the POWERFAM_SEED environment variable
// supplies a default seed where --seed is not given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace powerfam

#endif
