#pragma once

#include <chrono>
#include <mutex>
#include <thread>

namespace priorlens {

// Injectable time source. Rate limiting and retry backoff go through this
// interface so tests can drive them with a virtual clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::milliseconds now() = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::milliseconds now() override {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now().time_since_epoch());
    }
    void sleep_for(std::chrono::milliseconds d) override { std::this_thread::sleep_for(d); }
};

// Deterministic clock for tests: sleep advances virtual time instantly.
class VirtualClock final : public Clock {
public:
    std::chrono::milliseconds now() override {
        std::lock_guard<std::mutex> lock(mutex_);
        return now_;
    }
    void sleep_for(std::chrono::milliseconds d) override {
        std::lock_guard<std::mutex> lock(mutex_);
        now_ += d;
    }
    void advance(std::chrono::milliseconds d) { sleep_for(d); }

private:
    std::mutex mutex_;
    std::chrono::milliseconds now_{0};
};

} // namespace priorlens
