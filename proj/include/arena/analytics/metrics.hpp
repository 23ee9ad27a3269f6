#pragma once

#include <optional>
#include <span>

#include "arena/core/date.hpp"

namespace arena::analytics {

inline constexpr double kEquityPeriodsPerYear = 252.0;
inline constexpr double kCryptoPeriodsPerYear = 365.0;

/// Net daily returns over an evaluation window. T is returns.size().
struct MetricsWindow {
    std::span<const double> returns;
    double periods_per_year = kEquityPeriodsPerYear;
    double risk_free = 0.0;  // annual rate

    std::size_t periods() const { return returns.size(); }
    /// Throws ValidationError unless T >= 1, every return > -1 and ppy > 0.
    void validate() const;
};

/// prod(1 + r_i) - 1
double cumulative_return(const MetricsWindow& w);

/// (1 + cr)^(ppy / T) - 1. Throws ValidationError when cr <= -1 or T == 0.
double annualized_return(double cr, std::size_t periods, double periods_per_year);

/// sqrt(ppy) * sample standard deviation (T - 1 denominator).
/// With a single period the result is 0 for a zero return; a non-zero
/// single return throws InsufficientDataError.
double annualized_volatility(const MetricsWindow& w);

/// (ppy * mean - r_f) / AV. Zero volatility gives 0 when the excess return
/// is also zero and no value (displayed as a dash) otherwise.
std::optional<double> sharpe_ratio(const MetricsWindow& w);

/// Largest fractional fall of the equity curve prod(1 + r_i) below its running
/// peak, the starting equity 1.0 counting as the first peak.
double max_drawdown(const MetricsWindow& w);

struct MetricsSnapshot {
    double cr = 0.0;
    double ar = 0.0;
    std::optional<double> av;  // empty when there is too little data
    std::optional<double> sr;
    double mdd = 0.0;
    Date as_of;

    friend bool operator==(const MetricsSnapshot&, const MetricsSnapshot&) = default;
};

MetricsSnapshot compute_snapshot(const MetricsWindow& w, Date as_of);

} // namespace arena::analytics
