#pragma once

#include <string>
#include <vector>

namespace ert {

// Entry point behind the `ert` binary; exposed for tests.
// Returns 0 on success, 1 on validation failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace ert
