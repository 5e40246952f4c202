#pragma once

namespace bellsta::cli {

/// Full command-line entry point. Returns the process exit code:
/// 0 on success (including --help and --dump-config),
/// 2 on usage or configuration errors,
/// 3 on numerical failures.
int run(int argc, const char* const* argv);

}  // namespace bellsta::cli
