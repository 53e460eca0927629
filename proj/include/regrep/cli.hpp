#pragma once

namespace regrep {

// Entry point of the `regrep` tool. Exit codes: 0 ok, 1 check failure,
// 2 usage or parse error, 3 cap exceeded.
int run_cli(int argc, char** argv);

}  // namespace regrep
