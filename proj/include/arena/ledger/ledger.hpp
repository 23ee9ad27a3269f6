#pragma once

#include <span>
#include <string>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/core/signal.hpp"
#include "arena/marketdata/asset.hpp"

namespace arena::ledger {

/// signal * (p_curr - p_prev) / p_prev. Throws ValidationError on a
/// non-positive price.
double daily_return(Signal signal, double p_prev, double p_curr);

struct FeeModel {
    double fee_bps = 0.0;  // charged once per position change

    double fee_fraction() const { return fee_bps / 10000.0; }
};

/// (1 + gross)(1 - fee) - 1 when the position changed, otherwise gross.
double apply_fees(double gross, bool position_changed, const FeeModel& fees);

struct EquityPoint {
    Date date;
    double equity = 1.0;
    double cumulative_return = 0.0;  // always equity - 1
};

/// Compounds one net return. Throws ValidationError when r <= -1.
EquityPoint update_equity(const EquityPoint& prev, double r, Date date);

struct ReturnRecord {
    std::string agent;
    marketdata::AssetId asset;
    Date date;  // date of the closing price that realized the return
    Signal signal = Signal::Flat;
    double gross_return = 0.0;
    double net_return = 0.0;
    double equity = 1.0;

    friend bool operator==(const ReturnRecord&, const ReturnRecord&) = default;
};

/// Equity account of one agent on one asset. Starts flat at equity 1.0.
class PositionLedger {
public:
    PositionLedger(std::string agent, marketdata::AssetId asset, FeeModel fees = {});

    /// Realizes holding `signal` from `p_prev` to `p_curr`, closing on `date`.
    const ReturnRecord& fill(Date date, Signal signal, double p_prev, double p_curr);

    const std::vector<ReturnRecord>& records() const { return records_; }
    std::vector<double> net_returns() const;
    std::vector<double> gross_returns() const;
    double equity() const { return point_.equity; }
    double gross_equity() const { return gross_equity_; }
    Signal last_signal() const { return last_signal_; }

private:
    std::string agent_;
    marketdata::AssetId asset_;
    FeeModel fees_;
    EquityPoint point_;
    double gross_equity_ = 1.0;
    Signal last_signal_ = Signal::Flat;
    std::vector<ReturnRecord> records_;
};

/// CSV `agent,asset,date,signal,gross_return,net_return,equity`; numbers in
/// shortest round-trip form.
std::string write_returns_csv(std::span<const ReturnRecord> records);

} // namespace arena::ledger
