#ifndef LEXCHAIN_CLI_H_
#define LEXCHAIN_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lexchain {

// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotFound = 1,  // lookup miss, or relate found no relation
  kExitBadThesaurus = 2,
  kExitUnreadable = 3,
  kExitBadFlags = 4,
};

// Runs `lexchain <args...>`; args excludes the program name. "-" as an input
// path reads `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace lexchain

#endif  // LEXCHAIN_CLI_H_
