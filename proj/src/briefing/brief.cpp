#include "arena/briefing/brief.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::briefing {

std::string_view to_string(Sentiment s) {
    switch (s) {
    case Sentiment::Bullish: return "Bullish";
    case Sentiment::Bearish: return "Bearish";
    case Sentiment::Neutral: break;
    }
    return "Neutral";
}

Sentiment sentiment_from_string(std::string_view s) {
    s = text::trim(s);
    if (text::iequals(s, "bullish")) return Sentiment::Bullish;
    if (text::iequals(s, "bearish")) return Sentiment::Bearish;
    if (text::iequals(s, "neutral")) return Sentiment::Neutral;
    throw ParseError("unknown sentiment label '" + std::string(s) + "'");
}

namespace {

// "**Sentiment:** Bullish." -> value after the label, markdown and trailing
// punctuation stripped. Empty when the line does not carry `label`.
std::string labelled_value(std::string_view line, std::string_view label) {
    auto is_decor = [](char c) { return c == '*' || c == '#' || c == '-' || c == '>' || c == '_' || c == ' '; };
    line = text::trim(line);
    while (!line.empty() && is_decor(line.front())) line.remove_prefix(1);
    if (line.size() < label.size() || !text::iequals(line.substr(0, label.size()), label)) return {};
    line.remove_prefix(label.size());
    while (!line.empty() && (line.front() == '*' || line.front() == ' ')) line.remove_prefix(1);
    if (line.empty() || line.front() != ':') return {};
    line.remove_prefix(1);
    while (!line.empty() && (line.front() == '*' || line.front() == ' ')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == '.' || line.back() == '*' || line.back() == ' ')) line.remove_suffix(1);
    return std::string(line);
}

} // namespace

ReplyLabels extract_labels(std::string_view reply) {
    ReplyLabels labels;
    for (const auto& line : text::split_lines(reply)) {
        if (auto v = labelled_value(line, "sentiment"); !v.empty()) {
            try {
                labels.sentiment = sentiment_from_string(v);
            } catch (const ParseError&) {
                labels.sentiment = Sentiment::Neutral;
            }
        } else if (auto t = labelled_value(line, "themes"); !t.empty()) {
            labels.themes.clear();
            for (const auto& part : text::split(t, ',')) {
                auto theme = text::trim(part);
                if (!theme.empty()) labels.themes.emplace_back(theme);
            }
        }
    }
    return labels;
}

} // namespace arena::briefing
