#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/date.hpp"

namespace arena::briefing {

// Rubric criteria, each scored on {0, 1, 2}:
// 0 not satisfied, 1 partially satisfied, 2 fully satisfied.
enum class Criterion { DateAccuracy, Coverage, BiasAwareness, SourceDiversity };

inline constexpr std::array<Criterion, 4> kAllCriteria = {Criterion::DateAccuracy, Criterion::Coverage,
                                                          Criterion::BiasAwareness, Criterion::SourceDiversity};

std::string_view to_string(Criterion c);

struct BriefRef {
    std::string symbol;
    Date date;

    friend auto operator<=>(const BriefRef&, const BriefRef&) = default;
};

struct QualityScore {
    BriefRef brief;
    std::string annotator;
    int date_accuracy = 0;
    int coverage = 0;
    int bias_awareness = 0;
    int source_diversity = 0;

    int level(Criterion c) const;
    /// Throws ValidationError unless every criterion is in {0,1,2}.
    void validate() const;
};

struct CriterionMeans {
    double date_accuracy = 0.0;
    double coverage = 0.0;
    double bias_awareness = 0.0;
    double source_diversity = 0.0;
};

/// Per-criterion arithmetic mean over every annotation of one brief.
/// Throws InsufficientDataError on an empty list.
CriterionMeans score_brief(std::span<const QualityScore> scores);

struct AgreementReport {
    std::map<Criterion, double> per_criterion;  // exact-match fraction in [0,1]
    std::size_t n_items = 0;
};

/// Exact-match percent agreement between two annotators. Both lists must cover
/// the same briefs in the same order; throws ValidationError otherwise.
AgreementReport agreement(std::span<const QualityScore> a, std::span<const QualityScore> b);

/// Reads `symbol,date,annotator,date_accuracy,coverage,bias_awareness,source_diversity`.
std::vector<QualityScore> parse_quality_csv(std::string_view csv);

/// Splits a two-annotator annotation file into aligned lists ordered by
/// brief. Throws ValidationError unless exactly two annotators scored every
/// brief once each.
std::pair<std::vector<QualityScore>, std::vector<QualityScore>> pair_annotators(std::span<const QualityScore> scores);

} // namespace arena::briefing
