#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace arena::marketdata {

enum class AssetClass { Equity, Crypto };

std::string_view to_string(AssetClass c);
AssetClass asset_class_from_string(std::string_view s);

struct AssetId {
    std::string symbol;  // canonical upper-case
    AssetClass asset_class = AssetClass::Equity;

    /// Canonicalizes the symbol; throws ValidationError when it is empty.
    static AssetId make(std::string_view symbol, AssetClass cls);

    friend auto operator<=>(const AssetId&, const AssetId&) = default;
};

/// Symbol -> class mapping for one run. A symbol's class is fixed once added.
class AssetUniverse {
public:
    void add(const AssetId& asset);
    AssetId resolve(std::string_view symbol) const;
    bool contains(std::string_view symbol) const;
    const std::map<std::string, AssetClass>& entries() const { return classes_; }

private:
    std::map<std::string, AssetClass> classes_;
};

} // namespace arena::marketdata
