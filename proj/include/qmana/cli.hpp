#pragma once

#include <ostream>

namespace qmana {

// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmana
