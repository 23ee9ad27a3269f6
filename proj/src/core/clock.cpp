#include "arena/core/clock.hpp"

#include <thread>

namespace arena {

TimePoint SystemClock::now() const {
    return std::chrono::time_point_cast<std::chrono::milliseconds>(std::chrono::system_clock::now());
}

void SystemClock::sleep_until(TimePoint t) { std::this_thread::sleep_until(t); }

TimePoint ManualClock::now() const {
    std::lock_guard lock(mutex_);
    return now_;
}

void ManualClock::sleep_until(TimePoint t) {
    std::lock_guard lock(mutex_);
    if (t > now_) now_ = t;
}

void ManualClock::advance(std::chrono::milliseconds d) {
    std::lock_guard lock(mutex_);
    now_ += d;
}

} // namespace arena
