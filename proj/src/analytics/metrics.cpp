#include "arena/analytics/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::analytics {

void MetricsWindow::validate() const {
    if (returns.empty()) throw ValidationError("metrics window needs at least one period");
    if (!(periods_per_year > 0.0)) throw ValidationError("periods_per_year must be positive");
    for (double r : returns) {
        if (!(r > -1.0) || !std::isfinite(r))
            throw ValidationError("return " + text::format_double(r) + " is not greater than -1");
    }
}

double cumulative_return(const MetricsWindow& w) {
    w.validate();
    double equity = 1.0;
    for (double r : w.returns) equity *= 1.0 + r;
    return equity - 1.0;
}

double annualized_return(double cr, std::size_t periods, double periods_per_year) {
    if (!(cr > -1.0)) throw ValidationError("cumulative return must exceed -1 to annualize");
    if (periods == 0) throw ValidationError("cannot annualize over zero periods");
    if (cr == 0.0) return 0.0;
    return std::pow(1.0 + cr, periods_per_year / static_cast<double>(periods)) - 1.0;
}

namespace {

double mean(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end()) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

} // namespace

double annualized_volatility(const MetricsWindow& w) {
    w.validate();
    if (w.returns.size() == 1) {
        if (w.returns.front() == 0.0) return 0.0;
        throw InsufficientDataError("volatility needs at least two periods");
    }
    return std::sqrt(w.periods_per_year) * sample_std(w.returns);
}

std::optional<double> sharpe_ratio(const MetricsWindow& w) {
    double av = 0.0;
    try {
        av = annualized_volatility(w);
    } catch (const InsufficientDataError&) {
        return std::nullopt;
    }
    const double excess = w.periods_per_year * mean(w.returns) - w.risk_free;
    if (av == 0.0) {
        if (excess == 0.0) return 0.0;
        return std::nullopt;
    }
    return excess / av;
}

double max_drawdown(const MetricsWindow& w) {
    w.validate();
    double equity = 1.0;
    double peak = 1.0;
    double worst = 0.0;
    for (double r : w.returns) {
        equity *= 1.0 + r;
        peak = std::max(peak, equity);
        worst = std::max(worst, (peak - equity) / peak);
    }
    return worst;
}

MetricsSnapshot compute_snapshot(const MetricsWindow& w, Date as_of) {
    MetricsSnapshot s;
    s.as_of = as_of;
    s.cr = cumulative_return(w);
    s.ar = annualized_return(s.cr, w.periods(), w.periods_per_year);
    try {
        s.av = annualized_volatility(w);
    } catch (const InsufficientDataError&) {
        s.av.reset();
    }
    s.sr = sharpe_ratio(w);
    s.mdd = max_drawdown(w);
    return s;
}

} // namespace arena::analytics
