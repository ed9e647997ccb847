#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace multituran::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_internal = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_negative = 3;
    inline constexpr int exit_limit = 4;

    /// Runs one command line (args excludes the program name). Reports go to
    /// out, diagnostics to err; the return value is the process exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    /// FNV-1a, 64 bit, as 16 lowercase hex digits.
    auto fnv1a_hex(std::string_view bytes) -> std::string;
}
