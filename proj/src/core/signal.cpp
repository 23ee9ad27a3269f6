#include "arena/core/signal.hpp"

#include <string>

#include "arena/core/errors.hpp"

namespace arena {

Signal signal_from_int(int v) {
    if (v < -1 || v > 1) throw ValidationError("signal must be -1, 0 or +1, got " + std::to_string(v));
    return static_cast<Signal>(v);
}

} // namespace arena

#include "arena/core/phase.hpp"

namespace arena {

std::string_view to_string(Phase p) { return p == Phase::Live ? "Live" : "WarmUp"; }

Phase phase_from_string(std::string_view s) {
    if (s == "Live") return Phase::Live;
    if (s == "WarmUp") return Phase::WarmUp;
    throw ParseError("unknown phase '" + std::string(s) + "'");
}

} // namespace arena
