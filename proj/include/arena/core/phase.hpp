#pragma once

#include <string_view>

namespace arena {

/// Warm-up decisions fill agent memory but never reach live metrics.
enum class Phase { WarmUp, Live };

std::string_view to_string(Phase p);
Phase phase_from_string(std::string_view s);

} // namespace arena
