#pragma once

#include <span>
#include <string>
#include <string_view>

#include "arena/core/signal.hpp"

namespace arena::protocol {

enum class ActionKind { Buy, Sell, Hold };

/// BUY <-> +1, SELL <-> -1, HOLD <-> 0.
struct TradeAction {
    ActionKind kind = ActionKind::Hold;

    constexpr Signal signal() const {
        switch (kind) {
        case ActionKind::Buy: return Signal::Long;
        case ActionKind::Sell: return Signal::Short;
        case ActionKind::Hold: break;
        }
        return Signal::Flat;
    }

    static constexpr TradeAction from_signal(Signal s) {
        switch (s) {
        case Signal::Long: return {ActionKind::Buy};
        case Signal::Short: return {ActionKind::Sell};
        case Signal::Flat: break;
        }
        return {ActionKind::Hold};
    }

    friend constexpr bool operator==(TradeAction, TradeAction) = default;
};

inline constexpr TradeAction kBuy{ActionKind::Buy};
inline constexpr TradeAction kSell{ActionKind::Sell};
inline constexpr TradeAction kHold{ActionKind::Hold};

std::string_view to_string(TradeAction a);  // "BUY" / "SELL" / "HOLD"
/// Accepts buy/sell/hold in any case.
TradeAction action_from_string(std::string_view s);

/// Reads the decision from a model reply: the last line of the form
/// `[Decision]: <word>` (case-insensitive, markdown emphasis and trailing
/// punctuation tolerated) decides. Throws ParseError when no such line exists
/// or its word is not buy, sell or hold.
TradeAction parse_decision(std::string_view reply);

/// The kind with the strictly greatest count; any tie for the top count gives
/// HOLD. Throws ValidationError on an empty list.
TradeAction majority_vote(std::span<const TradeAction> actions);

} // namespace arena::protocol
