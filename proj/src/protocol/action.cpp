#include "arena/protocol/action.hpp"

#include <array>
#include <optional>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::protocol {

std::string_view to_string(TradeAction a) {
    switch (a.kind) {
    case ActionKind::Buy: return "BUY";
    case ActionKind::Sell: return "SELL";
    case ActionKind::Hold: break;
    }
    return "HOLD";
}

TradeAction action_from_string(std::string_view s) {
    s = text::trim(s);
    if (text::iequals(s, "buy")) return kBuy;
    if (text::iequals(s, "sell")) return kSell;
    if (text::iequals(s, "hold")) return kHold;
    throw ParseError("unknown action '" + std::string(s) + "'");
}

namespace {

bool is_decor(char c) { return c == '*' || c == '_' || c == '`' || c == '#' || c == '>' || c == ' ' || c == '\t'; }

bool is_trailing_punct(char c) {
    return is_decor(c) || c == '.' || c == '!' || c == ',' || c == ';' || c == ':' || c == '"' || c == '\'' ||
           c == ')' || c == ']';
}

// The word after a `[Decision]:` tag, or nullopt if the line is not a
// single-word decision line.
std::optional<std::string> decision_word(std::string_view line) {
    while (!line.empty() && (is_decor(line.front()) || line.front() == '-')) line.remove_prefix(1);
    constexpr std::string_view tag = "[decision]";
    if (line.size() < tag.size() || !text::iequals(line.substr(0, tag.size()), tag)) return std::nullopt;
    line.remove_prefix(tag.size());
    while (!line.empty() && is_decor(line.front())) line.remove_prefix(1);
    if (line.empty() || line.front() != ':') return std::nullopt;
    line.remove_prefix(1);
    while (!line.empty() && (is_decor(line.front()) || line.front() == '"' || line.front() == '\''))
        line.remove_prefix(1);
    while (!line.empty() && is_trailing_punct(line.back())) line.remove_suffix(1);
    if (line.empty() || line.find_first_of(" \t/") != std::string_view::npos) return std::nullopt;
    return std::string(line);
}

} // namespace

TradeAction parse_decision(std::string_view reply) {
    std::optional<std::string> last;
    for (const auto& line : text::split_lines(reply)) {
        if (auto w = decision_word(line)) last = std::move(w);
    }
    if (!last) throw ParseError("reply has no '[Decision]: <action>' line");
    return action_from_string(*last);
}

TradeAction majority_vote(std::span<const TradeAction> actions) {
    if (actions.empty()) throw ValidationError("majority_vote needs at least one action");
    std::array<int, 3> counts{};
    for (auto a : actions) ++counts[static_cast<std::size_t>(a.kind)];
    const std::array<ActionKind, 3> kinds = {ActionKind::Buy, ActionKind::Sell, ActionKind::Hold};
    int best = -1;
    std::optional<ActionKind> winner;
    for (std::size_t i = 0; i < 3; ++i) {
        if (counts[i] > best) {
            best = counts[i];
            winner = kinds[i];
        } else if (counts[i] == best) {
            winner.reset();
        }
    }
    return winner ? TradeAction{*winner} : kHold;
}

} // namespace arena::protocol
