#include "arena/ledger/ledger.hpp"

#include <cmath>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::ledger {

double daily_return(Signal signal, double p_prev, double p_curr) {
    if (!(p_prev > 0.0) || !(p_curr > 0.0) || !std::isfinite(p_prev) || !std::isfinite(p_curr))
        throw ValidationError("prices must be positive, got " + text::format_double(p_prev) + " -> " +
                              text::format_double(p_curr));
    if (signal == Signal::Flat) return 0.0;
    return as_int(signal) * ((p_curr - p_prev) / p_prev);
}

double apply_fees(double gross, bool position_changed, const FeeModel& fees) {
    if (!position_changed || fees.fee_bps == 0.0) return gross;
    return (1.0 + gross) * (1.0 - fees.fee_fraction()) - 1.0;
}

EquityPoint update_equity(const EquityPoint& prev, double r, Date date) {
    if (!(r > -1.0)) throw ValidationError("return " + text::format_double(r) + " would wipe out equity");
    EquityPoint next;
    next.date = date;
    next.equity = prev.equity * (1.0 + r);
    next.cumulative_return = next.equity - 1.0;
    return next;
}

PositionLedger::PositionLedger(std::string agent, marketdata::AssetId asset, FeeModel fees)
    : agent_(std::move(agent)), asset_(std::move(asset)), fees_(fees) {
    if (fees_.fee_bps < 0.0) throw ValidationError("fee_bps must be >= 0");
}

const ReturnRecord& PositionLedger::fill(Date date, Signal signal, double p_prev, double p_curr) {
    const double gross = daily_return(signal, p_prev, p_curr);
    const double net = apply_fees(gross, signal != last_signal_, fees_);
    point_ = update_equity(point_, net, date);
    gross_equity_ *= 1.0 + gross;
    last_signal_ = signal;
    records_.push_back(ReturnRecord{agent_, asset_, date, signal, gross, net, point_.equity});
    return records_.back();
}

std::vector<double> PositionLedger::net_returns() const {
    std::vector<double> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.net_return);
    return out;
}

std::vector<double> PositionLedger::gross_returns() const {
    std::vector<double> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.gross_return);
    return out;
}

std::string write_returns_csv(std::span<const ReturnRecord> records) {
    std::string out = "agent,asset,date,signal,gross_return,net_return,equity\n";
    for (const auto& r : records) {
        out += text::csv_escape(r.agent) + ',' + r.asset.symbol + ',' + r.date.to_string() + ',' +
               std::to_string(as_int(r.signal)) + ',' + text::format_double(r.gross_return) + ',' +
               text::format_double(r.net_return) + ',' + text::format_double(r.equity) + '\n';
    }
    return out;
}

} // namespace arena::ledger
