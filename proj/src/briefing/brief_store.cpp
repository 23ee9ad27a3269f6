#include "arena/briefing/brief_store.hpp"

#include <filesystem>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::briefing {

namespace fs = std::filesystem;
using nlohmann::json;

json brief_to_json(const DailyBrief& b) {
    return json{{"symbol", b.asset.symbol},
                {"asset_class", marketdata::to_string(b.asset.asset_class)},
                {"date", b.date.to_string()},
                {"summary", b.summary},
                {"themes", b.themes},
                {"sentiment", to_string(b.sentiment)},
                {"source_item_ids", b.source_item_ids}};
}

DailyBrief brief_from_json(const json& j) {
    try {
        DailyBrief b;
        b.asset = marketdata::AssetId::make(j.at("symbol").get<std::string>(),
                                            marketdata::asset_class_from_string(j.at("asset_class").get<std::string>()));
        b.date = Date::parse(j.at("date").get<std::string>());
        b.summary = j.at("summary").get<std::string>();
        b.themes = j.value("themes", std::vector<std::string>{});
        b.sentiment = sentiment_from_string(j.value("sentiment", std::string("Neutral")));
        b.source_item_ids = j.value("source_item_ids", std::vector<std::string>{});
        if (!b.summary.empty() && b.source_item_ids.empty())
            throw ValidationError("brief for " + b.asset.symbol + " " + b.date.to_string() +
                                  " has a summary but cites no news items");
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed brief record: ") + e.what());
    }
}

std::string BriefStore::path_for(const std::string& symbol, Date date) const {
    return (fs::path(root_) / symbol / date.to_string()).string();
}

void BriefStore::put(const DailyBrief& brief) const {
    const fs::path p = path_for(brief.asset.symbol, brief.date);
    fs::create_directories(p.parent_path());
    text::write_file(p.string(), brief_to_json(brief).dump(2) + "\n");
}

std::optional<DailyBrief> BriefStore::get(const marketdata::AssetId& asset, Date date) const {
    const auto p = path_for(asset.symbol, date);
    if (!fs::exists(p)) return std::nullopt;
    json j;
    try {
        j = json::parse(text::read_file(p));
    } catch (const json::parse_error& e) {
        throw ParseError("brief " + p + ": " + e.what());
    }
    auto b = brief_from_json(j);
    if (b.asset.symbol != asset.symbol || b.date != date)
        throw ValidationError("brief " + p + " is keyed to a different asset or date");
    b.asset.asset_class = asset.asset_class;
    return b;
}

} // namespace arena::briefing
