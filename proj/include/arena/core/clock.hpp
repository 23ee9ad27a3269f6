#pragma once

#include <chrono>
#include <mutex>

namespace arena {

using TimePoint = std::chrono::sys_time<std::chrono::milliseconds>;

/// Injectable wall clock. The live loop and latency measurements go through
/// it so tests can run on simulated time.
class Clock {
public:
    virtual ~Clock() = default;
    virtual TimePoint now() const = 0;
    virtual void sleep_until(TimePoint t) = 0;
};

class SystemClock final : public Clock {
public:
    TimePoint now() const override;
    void sleep_until(TimePoint t) override;
};

/// Time moves only when told to; sleeping jumps straight to the deadline.
class ManualClock final : public Clock {
public:
    explicit ManualClock(TimePoint start = TimePoint{}) : now_(start) {}

    TimePoint now() const override;
    void sleep_until(TimePoint t) override;
    void advance(std::chrono::milliseconds d);

private:
    mutable std::mutex mutex_;
    TimePoint now_;
};

} // namespace arena
