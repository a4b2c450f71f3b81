#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cotlsa::cli {

inline constexpr const char* kToolName = "cotlsa";
inline constexpr const char* kToolVersion = "0.1.0";

// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitAdmissibility = 2,
    kExitParse = 64,
    kExitDimension = 65,
    kExitInternal = 70,
};

struct Environment {
    bool color = false;
};

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace cotlsa::cli
