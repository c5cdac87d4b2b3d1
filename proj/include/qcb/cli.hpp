#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcb::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one command. `args` excludes the program name. JSON reports go to
// `out`, diagnostics to `err`. Returns 0 on success, 2 on invalid input and
// 3 when the requested quantity is undefined for the given states.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

// %.12g
std::string format_number(double x);

}  // namespace qcb::cli
