#pragma once

#include <ostream>

namespace holozeta {

// Whole command-line front end. Exit codes: 0 ok, 1 domain error or failed
// suite, 2 usage or parse error. Errors go to `err` as JSON objects.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holozeta
