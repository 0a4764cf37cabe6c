#pragma once

#include <iosfwd>

namespace sl21::cli {

/// Parses argv, runs the command and writes the report. Returns the process exit code.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl21::cli
