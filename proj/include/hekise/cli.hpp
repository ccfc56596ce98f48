#ifndef HEKISE_CLI_HPP_
#define HEKISE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hekise::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // domain error, or a negative answer (eq, validate, selfcheck)
inline constexpr int kExitUsage = 2;

//! Runs one `hekise` invocation. `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace hekise::cli

#endif  // HEKISE_CLI_HPP_
