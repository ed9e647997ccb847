#include <multituran/deadline.hpp>
#include <multituran/errors.hpp>

#include <atomic>
#include <cstdint>

using std::chrono::steady_clock;

namespace multituran
{
    namespace
    {
        // nanoseconds since steady_clock epoch; 0 means no deadline
        std::atomic<std::int64_t> deadline_ns{0};
        thread_local unsigned calls_since_check = 0;
    }

    auto set_deadline(std::optional<steady_clock::time_point> when) -> void
    {
        if (! when)
            deadline_ns.store(0);
        else
            deadline_ns.store(std::chrono::duration_cast<std::chrono::nanoseconds>(when->time_since_epoch()).count());
    }

    auto set_deadline_after(double seconds) -> void
    {
        set_deadline(steady_clock::now() + std::chrono::duration_cast<steady_clock::duration>(std::chrono::duration<double>(seconds)));
    }

    auto clear_deadline() -> void
    {
        set_deadline(std::nullopt);
    }

    auto check_deadline() -> void
    {
        auto d = deadline_ns.load(std::memory_order_relaxed);
        if (d == 0)
            return;
        // reading the clock on every node is measurable in the inner loops
        if (++calls_since_check < 1024)
            return;
        calls_since_check = 0;
        auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(steady_clock::now().time_since_epoch()).count();
        if (now >= d)
            throw ResourceLimitExceeded("time limit exceeded");
    }
}
