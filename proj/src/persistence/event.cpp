#include "arena/persistence/event.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "arena/core/errors.hpp"
#include "arena/core/hash.hpp"

namespace arena::persistence {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 8> kKindNames = {{
    {EventKind::PriceObserved, "PriceObserved"},
    {EventKind::BriefPublished, "BriefPublished"},
    {EventKind::DecisionRequested, "DecisionRequested"},
    {EventKind::DecisionMade, "DecisionMade"},
    {EventKind::FillApplied, "FillApplied"},
    {EventKind::SnapshotEmitted, "SnapshotEmitted"},
    {EventKind::GapNoted, "GapNoted"},
    {EventKind::FailureNoted, "FailureNoted"},
}};

} // namespace

std::string_view to_string(EventKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "?";
}

EventKind event_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kKindNames)
        if (name == s) return kind;
    throw ParseError("unknown event kind '" + std::string(s) + "'");
}

std::optional<int> stage_of(EventKind k) {
    switch (k) {
    case EventKind::PriceObserved: return 0;
    case EventKind::BriefPublished: return 1;
    case EventKind::DecisionRequested: return 2;
    case EventKind::DecisionMade: return 3;
    case EventKind::FillApplied: return 4;
    case EventKind::SnapshotEmitted: return 5;
    case EventKind::GapNoted:
    case EventKind::FailureNoted: break;
    }
    return std::nullopt;
}

json event_to_json(const ArenaEvent& e) {
    return json{{"seq", e.seq},
                {"run_id", e.run_id},
                {"date", e.date.to_string()},
                {"kind", std::string(to_string(e.kind))},
                {"payload", e.payload}};
}

ArenaEvent event_from_json(const json& j) {
    try {
        ArenaEvent e;
        e.seq = j.at("seq").get<std::uint64_t>();
        e.run_id = j.at("run_id").get<std::string>();
        e.date = Date::parse(j.at("date").get<std::string>());
        e.kind = event_kind_from_string(j.at("kind").get<std::string>());
        e.payload = j.at("payload");
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed event: ") + ex.what());
    }
}

std::string encode_line(const ArenaEvent& e) {
    const std::string body = event_to_json(e).dump(-1, ' ', false, json::error_handler_t::replace);
    char head[32];
    std::snprintf(head, sizeof head, "%zu %08x ", body.size(), static_cast<unsigned>(crc32(body)));
    return head + body + '\n';
}

ArenaEvent decode_line(std::string_view line) {
    const auto sp1 = line.find(' ');
    if (sp1 == std::string_view::npos || sp1 == 0) throw ParseError("missing length prefix");
    std::size_t len = 0;
    if (auto r = std::from_chars(line.data(), line.data() + sp1, len); r.ec != std::errc{} || r.ptr != line.data() + sp1)
        throw ParseError("bad length prefix");
    if (line.size() < sp1 + 10 || line[sp1 + 9] != ' ') throw ParseError("missing checksum");
    std::uint32_t crc = 0;
    const char* cb = line.data() + sp1 + 1;
    if (auto r = std::from_chars(cb, cb + 8, crc, 16); r.ec != std::errc{} || r.ptr != cb + 8)
        throw ParseError("bad checksum field");
    const std::string_view body = line.substr(sp1 + 10);
    if (body.size() != len)
        throw ParseError("length mismatch: header says " + std::to_string(len) + ", record has " +
                         std::to_string(body.size()));
    if (crc32(body) != crc) throw ParseError("checksum mismatch");
    json j;
    try {
        j = json::parse(body);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    return event_from_json(j);
}

} // namespace arena::persistence
