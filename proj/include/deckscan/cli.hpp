#pragma once

namespace deckscan::cli {

/// Entry point for the deckscan tool. Returns the process exit code:
/// 0 on success, 2 for configuration/validation faults, 3 for runtime
/// or analysis failures.
int run(int argc, char** argv);

}  // namespace deckscan::cli
