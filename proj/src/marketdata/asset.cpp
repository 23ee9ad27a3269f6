#include "arena/marketdata/asset.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::marketdata {

std::string_view to_string(AssetClass c) {
    return c == AssetClass::Equity ? "Equity" : "Crypto";
}

AssetClass asset_class_from_string(std::string_view s) {
    if (text::iequals(s, "equity")) return AssetClass::Equity;
    if (text::iequals(s, "crypto")) return AssetClass::Crypto;
    throw ValidationError("unknown asset class '" + std::string(s) + "'");
}

AssetId AssetId::make(std::string_view symbol, AssetClass cls) {
    auto canonical = text::to_upper(text::trim(symbol));
    if (canonical.empty()) throw ValidationError("empty asset symbol");
    return AssetId{std::move(canonical), cls};
}

void AssetUniverse::add(const AssetId& asset) {
    const auto canonical = AssetId::make(asset.symbol, asset.asset_class);
    auto [it, inserted] = classes_.emplace(canonical.symbol, canonical.asset_class);
    if (!inserted && it->second != canonical.asset_class)
        throw ValidationError("asset " + canonical.symbol + " registered with two classes");
}

AssetId AssetUniverse::resolve(std::string_view symbol) const {
    const auto canonical = text::to_upper(text::trim(symbol));
    const auto it = classes_.find(canonical);
    if (it == classes_.end()) throw ValidationError("unknown asset symbol '" + canonical + "'");
    return AssetId{it->first, it->second};
}

bool AssetUniverse::contains(std::string_view symbol) const {
    return classes_.count(text::to_upper(text::trim(symbol))) != 0;
}

} // namespace arena::marketdata
