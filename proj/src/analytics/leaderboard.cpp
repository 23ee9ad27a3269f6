#include "arena/analytics/leaderboard.hpp"

#include <algorithm>

#include "arena/core/text.hpp"

namespace arena::analytics {

namespace {

bool allowed(const std::set<std::string>& axis, const std::string& value) {
    return axis.empty() || axis.count(value) != 0;
}

std::string pct(double v) { return text::format_fixed(v * 100.0, 2); }

std::string pct(const std::optional<double>& v) { return v ? pct(*v) : "-"; }

} // namespace

bool LeaderboardFilter::matches(const LeaderboardRow& row) const {
    const bool agent_ok = agents.empty() || agents.count(row.agent) || agents.count(row.label);
    return agent_ok && allowed(assets, row.asset) && allowed(models, row.backbone) &&
           allowed(strategies, row.strategy);
}

bool ranks_before(const LeaderboardRow& a, const LeaderboardRow& b) {
    if (a.metrics.cr != b.metrics.cr) return a.metrics.cr > b.metrics.cr;
    const auto& sa = a.metrics.sr;
    const auto& sb = b.metrics.sr;
    if (sa.has_value() != sb.has_value()) return sa.has_value();
    if (sa && *sa != *sb) return *sa > *sb;
    if (a.agent != b.agent) return a.agent < b.agent;
    if (a.asset != b.asset) return a.asset < b.asset;
    return a.run_id < b.run_id;
}

std::vector<LeaderboardRow> leaderboard(std::span<const LeaderboardRow> rows, const LeaderboardFilter& filter) {
    std::vector<LeaderboardRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const LeaderboardRow& r) { return filter.matches(r); });
    std::sort(out.begin(), out.end(), ranks_before);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
    return out;
}

std::string write_metrics_csv(std::span<const LeaderboardRow> rows) {
    std::string out = "agent,backbone,asset,strategy,as_of,CR,AR,AV,SR,MDD\n";
    for (const auto& r : rows) {
        const auto& m = r.metrics;
        out += text::csv_escape(r.label) + ',' + text::csv_escape(r.backbone.empty() ? "-" : r.backbone) + ',' +
               r.asset + ',' + text::csv_escape(r.strategy) + ',' + m.as_of.to_string() + ',' + pct(m.cr) + ',' +
               pct(m.ar) + ',' + pct(m.av) + ',' + (m.sr ? text::format_fixed(*m.sr, 2) : "-") + ',' +
               pct(m.mdd) + '\n';
    }
    return out;
}

} // namespace arena::analytics
