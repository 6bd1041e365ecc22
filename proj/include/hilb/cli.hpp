#ifndef HILB_CLI_HPP
#define HILB_CLI_HPP

namespace hilb {

// Entry point behind the hpoints binary; returns the process exit code
// (0 success, 2 numerically inconclusive verdict, 1 error).
int run_cli(int argc, const char* const* argv);

} // namespace hilb

#endif
