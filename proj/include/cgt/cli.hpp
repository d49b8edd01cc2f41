// The `cgt` command-line tool as a library entry point, so tests can drive
// it without spawning processes.
//
// Exit status: 0 on success, PASS or a true verdict; 1 on FAIL, a false or
// inconclusive verdict; 2 on usage, parse or precondition errors.

#ifndef CGT_CLI_HPP_
#define CGT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt::cli {

  struct SubcommandInfo {
    std::string name;
    std::string operation;  // library function the subcommand exposes
    std::string summary;
  };

  std::vector<SubcommandInfo> const& subcommands();

  // args[0] is the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace cgt::cli

#endif  // CGT_CLI_HPP_
