#pragma once

#include <chrono>
#include <deque>
#include <memory>
#include <mutex>

#include "priorlens/common/clock.hpp"

namespace priorlens {

// Sliding-window limiter shared by every live dispatch: at most
// max_requests acquisitions complete within any window of `interval`.
class RateLimiter {
public:
    RateLimiter(int max_requests, std::chrono::milliseconds interval, std::shared_ptr<Clock> clock);

    // Blocks (through the clock) until a slot is free, then claims it and
    // returns the acquisition time.
    std::chrono::milliseconds acquire();

private:
    int max_requests_;
    std::chrono::milliseconds interval_;
    std::shared_ptr<Clock> clock_;
    std::mutex mutex_;
    std::deque<std::chrono::milliseconds> recent_;
};

} // namespace priorlens
