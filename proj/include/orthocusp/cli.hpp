#pragma once

// Command-line front end. Exit status: 0 every check passed, 1 a check
// failed, 2 usage error, 3 I/O or input-format error.

#include <iosfwd>
#include <string>
#include <vector>

#include "orthocusp/polyhedron.hpp"

namespace orthocusp::cli {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_io = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// $ORTHOCUSP_CACHE, or ".orthocusp-cache" in the working directory.
std::string cache_root();

/// FNV-1a 64 of the code bytes, as 16 hex digits.
std::string code_hash(const core::CanonicalCode& code);

/// "t_<hash>.poly3"
std::string type_file_name(const core::CanonicalCode& code);

}  // namespace orthocusp::cli
