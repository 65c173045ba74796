#ifndef PERMBLOCKS_TOOLS_CLI_HPP
#define PERMBLOCKS_TOOLS_CLI_HPP

#include "permblocks/errors.hpp"

#include <functional>

namespace permblocks::cli {

/** Exit codes: 0 ok, 2 inadmissible data, 3 schema or validation failure,
 * 4 incomplete assignment, 5 combinatorial blowup, 6 bad sew pair,
 * 70 internal-consistency failure. */
int exit_code_for(ErrorKind kind);

/** Run a command body, mapping library errors (and anything unexpected,
 * treated as internal) to exit codes with a message on stderr. */
int run_guarded(const std::function<int()> &body);

/** Full argument parsing and dispatch for the permblocks binary. */
int run(int argc, const char *const *argv);

} // namespace permblocks::cli

#endif
