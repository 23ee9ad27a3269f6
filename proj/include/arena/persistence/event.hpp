#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "arena/core/date.hpp"

namespace arena::persistence {

enum class EventKind {
    PriceObserved,
    BriefPublished,
    DecisionRequested,
    DecisionMade,
    FillApplied,
    SnapshotEmitted,
    GapNoted,
    FailureNoted,
};

std::string_view to_string(EventKind k);
EventKind event_kind_from_string(std::string_view s);

/// Position of `k` in the within-date order
/// Price -> Brief -> DecisionRequested -> DecisionMade -> Fill -> Snapshot.
/// Gap and failure notes are not ordered and return nullopt.
std::optional<int> stage_of(EventKind k);

struct ArenaEvent {
    std::uint64_t seq = 0;
    std::string run_id;
    Date date;
    EventKind kind = EventKind::PriceObserved;
    nlohmann::json payload = nlohmann::json::object();

    friend bool operator==(const ArenaEvent&, const ArenaEvent&) = default;
};

nlohmann::json event_to_json(const ArenaEvent& e);
ArenaEvent event_from_json(const nlohmann::json& j);

/// One log line: `<byte length> <crc32 as 8 hex digits> <json>\n`, where the
/// length and checksum cover the JSON text only.
std::string encode_line(const ArenaEvent& e);

/// Decodes one line without its trailing newline. Throws ParseError when the
/// framing, checksum or JSON is invalid.
ArenaEvent decode_line(std::string_view line);

} // namespace arena::persistence
