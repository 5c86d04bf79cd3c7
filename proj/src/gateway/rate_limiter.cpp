#include "priorlens/gateway/rate_limiter.hpp"

#include "priorlens/common/errors.hpp"

namespace priorlens {

RateLimiter::RateLimiter(int max_requests, std::chrono::milliseconds interval,
                         std::shared_ptr<Clock> clock)
    : max_requests_(max_requests), interval_(interval), clock_(std::move(clock)) {
    if (max_requests_ < 1) raise(ErrorKind::ConfigError, "rate limit must allow >= 1 request");
}

std::chrono::milliseconds RateLimiter::acquire() {
    while (true) {
        std::chrono::milliseconds wait{0};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto now = clock_->now();
            while (!recent_.empty() && recent_.front() + interval_ <= now) recent_.pop_front();
            if (static_cast<int>(recent_.size()) < max_requests_) {
                recent_.push_back(now);
                return now;
            }
            wait = recent_.front() + interval_ - now;
        }
        clock_->sleep_for(wait);
    }
}

} // namespace priorlens
