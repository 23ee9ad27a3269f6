#pragma once

#include <string_view>

namespace arena {

/// Daily position: fully long, flat, or fully short.
enum class Signal : int { Short = -1, Flat = 0, Long = 1 };

constexpr int as_int(Signal s) { return static_cast<int>(s); }
Signal signal_from_int(int v);

} // namespace arena
