#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/marketdata/asset.hpp"

namespace arena::marketdata {

/// A price record as delivered by a connector, before validation.
struct RawPriceRecord {
    std::string symbol;
    std::string date;  // ISO-8601
    double close = 0.0;
    std::string source;
};

struct PriceBar {
    AssetId asset;
    Date date;
    double close = 0.0;
    std::string source;

    friend bool operator==(const PriceBar&, const PriceBar&) = default;
};

/// Source ranking for duplicate resolution; earlier entries win. Sources not
/// listed rank after every listed source, in lexicographic order.
class SourcePriority {
public:
    SourcePriority() = default;
    explicit SourcePriority(std::vector<std::string> ranked) : ranked_(std::move(ranked)) {}

    /// True when `a` should be kept over `b`.
    bool prefers(const std::string& a, const std::string& b) const;

private:
    std::optional<std::size_t> rank(const std::string& source) const;
    std::vector<std::string> ranked_;
};

/// Validates and canonicalizes one record. Throws ValidationError naming the
/// source for a non-positive or non-finite close, ParseError for a bad date.
PriceBar normalize_price(const RawPriceRecord& raw, const AssetUniverse& universe);

/// Normalizes a batch and keeps one bar per (asset, date), chosen by
/// `priority`. Output is ordered by (symbol, date).
std::vector<PriceBar> normalize_prices(std::span<const RawPriceRecord> raws, const AssetUniverse& universe,
                                       const SourcePriority& priority);

} // namespace arena::marketdata
