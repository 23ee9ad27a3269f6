#include "arena/marketdata/price.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::marketdata {

std::optional<std::size_t> SourcePriority::rank(const std::string& source) const {
    const auto it = std::find(ranked_.begin(), ranked_.end(), source);
    if (it == ranked_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ranked_.begin());
}

bool SourcePriority::prefers(const std::string& a, const std::string& b) const {
    const auto ra = rank(a);
    const auto rb = rank(b);
    if (ra && rb) return *ra < *rb;
    if (ra) return true;
    if (rb) return false;
    return a < b;
}

PriceBar normalize_price(const RawPriceRecord& raw, const AssetUniverse& universe) {
    if (!std::isfinite(raw.close) || raw.close <= 0.0)
        throw ValidationError("source '" + raw.source + "': close for " + raw.symbol + " on " + raw.date +
                              " must be positive and finite, got " + text::format_double(raw.close));
    return PriceBar{universe.resolve(raw.symbol), Date::parse(text::trim(raw.date)), raw.close, raw.source};
}

std::vector<PriceBar> normalize_prices(std::span<const RawPriceRecord> raws, const AssetUniverse& universe,
                                       const SourcePriority& priority) {
    std::map<std::pair<std::string, Date>, PriceBar> best;
    for (const auto& raw : raws) {
        PriceBar bar = normalize_price(raw, universe);
        auto key = std::make_pair(bar.asset.symbol, bar.date);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(std::move(key), std::move(bar));
        } else if (priority.prefers(bar.source, it->second.source)) {
            it->second = std::move(bar);
        }
    }
    std::vector<PriceBar> out;
    out.reserve(best.size());
    for (auto& [key, bar] : best) out.push_back(std::move(bar));
    return out;
}

} // namespace arena::marketdata
