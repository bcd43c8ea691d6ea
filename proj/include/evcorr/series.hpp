#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evcorr/dates.hpp"

namespace evcorr {

/// Dated closing prices for one asset. Immutable after construction:
/// the constructor validates all invariants (strictly increasing dates,
/// positive prices, length >= 2).
class PriceSeries {
public:
    struct Observation {
        TradingDate date;
        double price = 0.0;
        bool operator==(const Observation&) const = default;
    };

    PriceSeries(std::string asset_id, std::vector<Observation> observations);

    const std::string& asset_id() const { return asset_id_; }
    const std::vector<Observation>& observations() const { return observations_; }
    std::size_t size() const { return observations_.size(); }

    bool operator==(const PriceSeries&) const = default;

private:
    std::string asset_id_;
    std::vector<Observation> observations_;
};

/// Dated excess returns for one asset; the value at date t is defined from
/// the prices at t and the previous observation.
class ReturnSeries {
public:
    struct Observation {
        TradingDate date;
        double value = 0.0;
    };

    ReturnSeries(std::string asset_id, std::vector<Observation> observations);

    const std::string& asset_id() const { return asset_id_; }
    const std::vector<Observation>& observations() const { return observations_; }
    std::size_t size() const { return observations_.size(); }

private:
    std::string asset_id_;
    std::vector<Observation> observations_;
};

/// Rectangular date-aligned return matrix: one column per asset, no gaps.
class ReturnPanel {
public:
    ReturnPanel(std::vector<TradingDate> dates,
                std::vector<std::string> asset_ids,
                std::vector<std::vector<double>> columns);

    const std::vector<TradingDate>& dates() const { return dates_; }
    const std::vector<std::string>& asset_ids() const { return asset_ids_; }
    std::size_t rows() const { return dates_.size(); }
    std::size_t cols() const { return asset_ids_.size(); }

    /// Column by asset id; throws InvalidInputError for unknown ids.
    const std::vector<double>& column(const std::string& asset_id) const;
    const std::vector<double>& column(std::size_t index) const { return columns_[index]; }
    bool has_column(const std::string& asset_id) const;

private:
    std::vector<TradingDate> dates_;
    std::vector<std::string> asset_ids_;
    std::vector<std::vector<double>> columns_; // columns_[j].size() == dates_.size()
};

/// Pre/post segmentation around a dated event. The event date belongs to
/// neither segment.
struct EventWindow {
    TradingDate event_date;
    TradingDate pre_start;
    TradingDate pre_end;
    TradingDate post_start;
    TradingDate post_end;

    /// Throws InvalidInputError unless pre_start < pre_end < event_date <= post_start < post_end.
    static EventWindow checked(TradingDate event_date,
                               TradingDate pre_start, TradingDate pre_end,
                               TradingDate post_start, TradingDate post_end);
};

/// Excess log return series: r_t = ln(P_t / P_{t-1}) - risk_free_daily.
ReturnSeries compute_returns(const PriceSeries& prices, double risk_free_daily);

/// Inner-join alignment: panel dates are the sorted intersection of all
/// input date sets. Throws InsufficientDataError naming the offending
/// assets when the intersection is empty.
ReturnPanel align_panel(const std::vector<ReturnSeries>& series);

struct SegmentedPanel {
    ReturnPanel pre;
    ReturnPanel post;
};

/// Splits panel rows into the window's pre and post ranges, dropping the
/// event date. Throws InsufficientDataError if either segment is empty.
SegmentedPanel segment(const ReturnPanel& panel, const EventWindow& window);

/// Restriction of a panel to rows with first <= date <= last.
ReturnPanel slice_panel(const ReturnPanel& panel, TradingDate first, TradingDate last);

struct DescriptiveRow {
    std::string asset_id;
    std::string segment; // "pre" | "post"
    double mean_price = 0.0;
    double std_price = 0.0; // sample (n-1)
    double mean_return = 0.0;
    double std_return = 0.0; // sample (n-1)
    std::size_t n_prices = 0;
    std::size_t n_returns = 0;
};

/// Per-asset, per-segment price and return statistics (Table-2 style).
/// Price statistics use each asset's own observations inside the segment
/// bounds; return statistics use the aligned panel rows.
std::vector<DescriptiveRow> descriptive_stats(const ReturnPanel& panel,
                                              const std::vector<PriceSeries>& prices,
                                              const EventWindow& window);

double mean_of(const std::vector<double>& v);
double sample_std(const std::vector<double>& v); // n-1 denominator

} // namespace evcorr
