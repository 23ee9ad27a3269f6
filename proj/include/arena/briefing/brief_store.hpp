#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "arena/briefing/brief.hpp"

namespace arena::briefing {

nlohmann::json brief_to_json(const DailyBrief& brief);
DailyBrief brief_from_json(const nlohmann::json& j);

/// One JSON record per (asset, date) at `<root>/<symbol>/<YYYY-MM-DD>`.
class BriefStore {
public:
    explicit BriefStore(std::string root) : root_(std::move(root)) {}

    void put(const DailyBrief& brief) const;
    std::optional<DailyBrief> get(const marketdata::AssetId& asset, Date date) const;
    std::string path_for(const std::string& symbol, Date date) const;

private:
    std::string root_;
};

} // namespace arena::briefing
