#pragma once

#include <chrono>
#include <optional>

namespace multituran
{
    /// Process-wide cooperative deadline. Long searches call check_deadline()
    /// at node granularity; it throws ResourceLimitExceeded once expired.
    auto set_deadline(std::optional<std::chrono::steady_clock::time_point> when) -> void;
    auto set_deadline_after(double seconds) -> void;
    auto clear_deadline() -> void;
    auto check_deadline() -> void;
}
