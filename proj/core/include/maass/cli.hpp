#pragma once

namespace maass {

// Exit codes: 0 success, 1 a check failed (or a computation error), 2 usage or input error.
int run_cli(int argc, const char* const* argv);

}  // namespace maass
