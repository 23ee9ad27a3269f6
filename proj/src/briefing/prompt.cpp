#include "arena/briefing/prompt.hpp"

namespace arena::briefing {

namespace {

constexpr std::string_view kInstructions =
    "Instructions:\n"
    "- Use only the provided articles for your analysis.\n"
    "- Do not retrieve or reference any external information.\n"
    "- Refrain from including current prices or speculative forecasts.\n"
    "- Focus strictly on the events, sentiment, and contextual details presented in the articles.\n"
    "- Do not mention or enumerate article IDs in the output.\n";

constexpr std::string_view kClosing =
    "Compose your response as a coherent and polished narrative that maintains logical flow and clarity "
    "throughout.\n";

constexpr std::string_view kLabelLines =
    "After the narrative, add one line `Themes: <comma-separated themes>` and a final line that is exactly one "
    "of `Sentiment: Bullish`, `Sentiment: Neutral` or `Sentiment: Bearish`.\n";

} // namespace

std::string build_summary_prompt(std::string_view symbol, Date date, std::span<const marketdata::NewsItem> articles) {
    const std::string date_str = date.to_string();
    const std::string sym(symbol);
    const auto unique = marketdata::dedupe_news(articles);

    std::string out;
    out += "Task: Analyze the provided " + sym + " news articles from " + date_str +
           " and produce a clear, comprehensive, and well-structured summary.\n\n";
    out += kInstructions;
    out += "\nArticles from " + date_str + ":\n\n";

    if (unique.empty()) {
        out += std::string(kNoNewsMarker) + " for " + sym + " on " + date_str + ".\n\n";
        out += "Output Requirements:\n";
        out += "1. State plainly that there is no material news for " + sym + " on " + date_str + ".\n";
        out += "2. Do not invent events, themes or sentiment.\n\n";
        out += "After that statement, add a final line `Sentiment: Neutral`.\n";
        return out;
    }

    for (const auto& a : unique) {
        out += "Title: " + a.title + "\n";
        out += a.body + "\n\n";
    }
    out += "Output Requirements:\n";
    out += "1. Provide a cohesive summary highlighting the key developments for " + sym + ".\n";
    out += "2. Identify major themes or emerging narratives within the content.\n";
    out += "3. Assess and articulate the overall market sentiment reflected in the articles.\n\n";
    out += kClosing;
    out += kLabelLines;
    return out;
}

} // namespace arena::briefing
