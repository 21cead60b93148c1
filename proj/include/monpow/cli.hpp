#ifndef MONPOW_CLI_HPP
#define MONPOW_CLI_HPP

#include <ostream>

namespace monpow
{

// Exit codes.
enum : int { exit_ok = 0, exit_usage = 1, exit_precondition = 2, exit_overflow = 3, exit_check_failed = 4 };

// The monpow command line. argv[0] is the program name.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace monpow

#endif
