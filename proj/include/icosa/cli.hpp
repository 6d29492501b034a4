#pragma once

namespace icosa {

// Parses argv, dispatches to the library, and returns the process exit code:
// 0 on success (and for `identities` / `verify-all`, only when every check
// passes), 1 on a verification or domain failure, 2 on a usage error
// (bad flags, malformed expression text, unknown identity id).
int run_cli(int argc, char** argv);

}  // namespace icosa
