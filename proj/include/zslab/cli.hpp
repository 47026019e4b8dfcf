#pragma once

namespace zslab {

// Command line entry point behind the zslab binary. Returns the process exit
// code: 0 on success, 1 for usage/config/io problems, 2 when a verification
// suite reports a failure.
int run_cli(int argc, const char* const* argv);

}  // namespace zslab
