#include "arena/briefing/quality.hpp"

#include <algorithm>
#include <set>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::briefing {

std::string_view to_string(Criterion c) {
    switch (c) {
    case Criterion::DateAccuracy: return "date_accuracy";
    case Criterion::Coverage: return "coverage";
    case Criterion::BiasAwareness: return "bias_awareness";
    case Criterion::SourceDiversity: return "source_diversity";
    }
    return "?";
}

int QualityScore::level(Criterion c) const {
    switch (c) {
    case Criterion::DateAccuracy: return date_accuracy;
    case Criterion::Coverage: return coverage;
    case Criterion::BiasAwareness: return bias_awareness;
    case Criterion::SourceDiversity: return source_diversity;
    }
    return 0;
}

void QualityScore::validate() const {
    for (auto c : kAllCriteria) {
        const int v = level(c);
        if (v < 0 || v > 2)
            throw ValidationError(std::string(to_string(c)) + " level " + std::to_string(v) + " for " +
                                  brief.symbol + " " + brief.date.to_string() + " is outside {0,1,2}");
    }
}

CriterionMeans score_brief(std::span<const QualityScore> scores) {
    if (scores.empty()) throw InsufficientDataError("score_brief needs at least one annotation");
    CriterionMeans m;
    for (const auto& s : scores) {
        s.validate();
        m.date_accuracy += s.date_accuracy;
        m.coverage += s.coverage;
        m.bias_awareness += s.bias_awareness;
        m.source_diversity += s.source_diversity;
    }
    const auto n = static_cast<double>(scores.size());
    m.date_accuracy /= n;
    m.coverage /= n;
    m.bias_awareness /= n;
    m.source_diversity /= n;
    return m;
}

AgreementReport agreement(std::span<const QualityScore> a, std::span<const QualityScore> b) {
    if (a.size() != b.size())
        throw ValidationError("annotation lists differ in length: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    if (a.empty()) throw ValidationError("agreement needs at least one item");
    AgreementReport report;
    report.n_items = a.size();
    std::map<Criterion, std::size_t> matches;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].brief != b[i].brief)
            throw ValidationError("item " + std::to_string(i) + " refers to different briefs (" + a[i].brief.symbol +
                                  " " + a[i].brief.date.to_string() + " vs " + b[i].brief.symbol + " " +
                                  b[i].brief.date.to_string() + ")");
        a[i].validate();
        b[i].validate();
        for (auto c : kAllCriteria) matches[c] += a[i].level(c) == b[i].level(c) ? 1 : 0;
    }
    for (auto c : kAllCriteria)
        report.per_criterion[c] = static_cast<double>(matches[c]) / static_cast<double>(report.n_items);
    return report;
}

std::vector<QualityScore> parse_quality_csv(std::string_view csv) {
    const auto lines = text::split_lines(csv);
    if (lines.empty() ||
        text::trim(lines.front()) != "symbol,date,annotator,date_accuracy,coverage,bias_awareness,source_diversity")
        throw ParseError("QC CSV must start with header "
                         "'symbol,date,annotator,date_accuracy,coverage,bias_awareness,source_diversity'");
    std::vector<QualityScore> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (text::trim(lines[i]).empty()) continue;
        const auto f = text::parse_csv_row(lines[i]);
        if (f.size() != 7) throw ParseError("QC CSV line " + std::to_string(i + 1) + ": expected 7 fields");
        auto level = [&](const std::string& s) {
            const double v = text::parse_double(s);
            if (v != static_cast<int>(v)) throw ParseError("QC CSV line " + std::to_string(i + 1) + ": non-integer level");
            return static_cast<int>(v);
        };
        QualityScore s{BriefRef{text::to_upper(text::trim(f[0])), Date::parse(text::trim(f[1]))},
                       std::string(text::trim(f[2])),
                       level(f[3]),
                       level(f[4]),
                       level(f[5]),
                       level(f[6])};
        s.validate();
        out.push_back(std::move(s));
    }
    return out;
}

std::pair<std::vector<QualityScore>, std::vector<QualityScore>> pair_annotators(std::span<const QualityScore> scores) {
    std::set<std::string> annotators;
    for (const auto& s : scores) annotators.insert(s.annotator);
    if (annotators.size() != 2)
        throw ValidationError("expected exactly two annotators, found " + std::to_string(annotators.size()));
    const std::string first = *annotators.begin();

    std::map<BriefRef, std::pair<std::vector<QualityScore>, std::vector<QualityScore>>> by_brief;
    for (const auto& s : scores) {
        auto& slot = by_brief[s.brief];
        (s.annotator == first ? slot.first : slot.second).push_back(s);
    }
    std::pair<std::vector<QualityScore>, std::vector<QualityScore>> out;
    for (auto& [ref, pair] : by_brief) {
        if (pair.first.size() != 1 || pair.second.size() != 1)
            throw ValidationError("brief " + ref.symbol + " " + ref.date.to_string() +
                                  " is not scored exactly once by each annotator");
        out.first.push_back(pair.first.front());
        out.second.push_back(pair.second.front());
    }
    return out;
}

} // namespace arena::briefing
