#pragma once

namespace ordproj {

/// Exit codes: 0 pass, 1 predicate or relation fails, 2 parse error,
/// 3 shape or model error, 4 usage.
int run_cli(int argc, char** argv);

}  // namespace ordproj
