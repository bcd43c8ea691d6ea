#include "evcorr/series.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "evcorr/errors.hpp"

namespace evcorr {

PriceSeries::PriceSeries(std::string asset_id, std::vector<Observation> observations)
    : asset_id_(std::move(asset_id)), observations_(std::move(observations)) {
    if (observations_.size() < 2) {
        throw InsufficientDataError("price series \"" + asset_id_ +
                                    "\" needs at least 2 observations");
    }
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (!(observations_[i].price > 0.0) || !std::isfinite(observations_[i].price)) {
            throw InvalidInputError("price series \"" + asset_id_ + "\": non-positive price at " +
                                    observations_[i].date.to_string());
        }
        if (i > 0 && !(observations_[i - 1].date < observations_[i].date)) {
            throw InvalidInputError("price series \"" + asset_id_ +
                                    "\": dates not strictly increasing at " +
                                    observations_[i].date.to_string());
        }
    }
}

ReturnSeries::ReturnSeries(std::string asset_id, std::vector<Observation> observations)
    : asset_id_(std::move(asset_id)), observations_(std::move(observations)) {
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (!std::isfinite(observations_[i].value)) {
            throw InvalidInputError("return series \"" + asset_id_ + "\": non-finite value at " +
                                    observations_[i].date.to_string());
        }
        if (i > 0 && !(observations_[i - 1].date < observations_[i].date)) {
            throw InvalidInputError("return series \"" + asset_id_ +
                                    "\": dates not strictly increasing at " +
                                    observations_[i].date.to_string());
        }
    }
}

ReturnPanel::ReturnPanel(std::vector<TradingDate> dates,
                         std::vector<std::string> asset_ids,
                         std::vector<std::vector<double>> columns)
    : dates_(std::move(dates)), asset_ids_(std::move(asset_ids)), columns_(std::move(columns)) {
    if (asset_ids_.size() != columns_.size()) {
        throw InvalidInputError("panel: one column required per asset id");
    }
    for (const auto& col : columns_) {
        if (col.size() != dates_.size()) {
            throw InvalidInputError("panel: ragged columns");
        }
    }
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        if (!(dates_[i - 1] < dates_[i])) {
            throw InvalidInputError("panel: dates not strictly increasing");
        }
    }
}

const std::vector<double>& ReturnPanel::column(const std::string& asset_id) const {
    for (std::size_t j = 0; j < asset_ids_.size(); ++j) {
        if (asset_ids_[j] == asset_id) return columns_[j];
    }
    throw InvalidInputError("panel has no column \"" + asset_id + "\"");
}

bool ReturnPanel::has_column(const std::string& asset_id) const {
    return std::find(asset_ids_.begin(), asset_ids_.end(), asset_id) != asset_ids_.end();
}

EventWindow EventWindow::checked(TradingDate event_date,
                                 TradingDate pre_start, TradingDate pre_end,
                                 TradingDate post_start, TradingDate post_end) {
    if (!(pre_start < pre_end && pre_end < event_date && event_date <= post_start &&
          post_start < post_end)) {
        throw InvalidInputError(
            "event window must satisfy pre_start < pre_end < event_date <= post_start < post_end");
    }
    return EventWindow{event_date, pre_start, pre_end, post_start, post_end};
}

ReturnSeries compute_returns(const PriceSeries& prices, double risk_free_daily) {
    if (risk_free_daily < 0.0) {
        throw InvalidInputError("risk_free_daily must be >= 0");
    }
    const auto& obs = prices.observations();
    std::vector<ReturnSeries::Observation> out;
    out.reserve(obs.size() - 1);
    for (std::size_t i = 1; i < obs.size(); ++i) {
        out.push_back({obs[i].date, std::log(obs[i].price / obs[i - 1].price) - risk_free_daily});
    }
    return ReturnSeries(prices.asset_id(), std::move(out));
}

ReturnPanel align_panel(const std::vector<ReturnSeries>& series) {
    if (series.size() < 2) {
        throw InvalidInputError("alignment needs at least 2 series");
    }
    for (const auto& s : series) {
        if (s.size() == 0) {
            throw InsufficientDataError("return series \"" + s.asset_id() + "\" is empty");
        }
    }

    std::set<std::int64_t> shared;
    for (const auto& o : series[0].observations()) shared.insert(o.date.serial());
    for (std::size_t k = 1; k < series.size(); ++k) {
        std::set<std::int64_t> next;
        for (const auto& o : series[k].observations()) {
            if (shared.count(o.date.serial())) next.insert(o.date.serial());
        }
        if (next.empty()) {
            std::string names = series[0].asset_id();
            for (std::size_t j = 1; j <= k; ++j) names += ", " + series[j].asset_id();
            throw InsufficientDataError("no overlapping dates after adding \"" +
                                        series[k].asset_id() + "\" (assets so far: " + names + ")");
        }
        shared.swap(next);
    }

    std::vector<TradingDate> dates;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> cols(series.size());
    dates.reserve(shared.size());
    for (const auto& s : series) ids.push_back(s.asset_id());

    bool first_col = true;
    for (std::size_t k = 0; k < series.size(); ++k) {
        cols[k].reserve(shared.size());
        for (const auto& o : series[k].observations()) {
            if (!shared.count(o.date.serial())) continue;
            cols[k].push_back(o.value);
            if (first_col) dates.push_back(o.date);
        }
        first_col = false;
    }
    return ReturnPanel(std::move(dates), std::move(ids), std::move(cols));
}

namespace {

ReturnPanel filter_rows(const ReturnPanel& panel, TradingDate first, TradingDate last,
                        const TradingDate* excluded) {
    std::vector<TradingDate> dates;
    std::vector<std::vector<double>> cols(panel.cols());
    for (std::size_t i = 0; i < panel.rows(); ++i) {
        const TradingDate& d = panel.dates()[i];
        if (d < first || last < d) continue;
        if (excluded && d == *excluded) continue;
        dates.push_back(d);
        for (std::size_t j = 0; j < panel.cols(); ++j) cols[j].push_back(panel.column(j)[i]);
    }
    return ReturnPanel(std::move(dates), panel.asset_ids(), std::move(cols));
}

} // namespace

SegmentedPanel segment(const ReturnPanel& panel, const EventWindow& window) {
    ReturnPanel pre = filter_rows(panel, window.pre_start, window.pre_end, &window.event_date);
    ReturnPanel post = filter_rows(panel, window.post_start, window.post_end, &window.event_date);
    if (pre.rows() == 0) {
        throw InsufficientDataError("pre-event segment is empty");
    }
    if (post.rows() == 0) {
        throw InsufficientDataError("post-event segment is empty");
    }
    return SegmentedPanel{std::move(pre), std::move(post)};
}

ReturnPanel slice_panel(const ReturnPanel& panel, TradingDate first, TradingDate last) {
    return filter_rows(panel, first, last, nullptr);
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) {
        throw InsufficientDataError("sample std needs at least 2 observations");
    }
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::vector<DescriptiveRow> descriptive_stats(const ReturnPanel& panel,
                                              const std::vector<PriceSeries>& prices,
                                              const EventWindow& window) {
    std::unordered_map<std::string, const PriceSeries*> by_id;
    for (const auto& p : prices) by_id[p.asset_id()] = &p;
    for (const auto& id : panel.asset_ids()) {
        if (!by_id.count(id)) {
            throw InvalidInputError("no price series supplied for panel asset \"" + id + "\"");
        }
    }

    SegmentedPanel segs = segment(panel, window);
    if (segs.pre.rows() < 2 || segs.post.rows() < 2) {
        throw InsufficientDataError("descriptive statistics need >= 2 rows per segment");
    }

    auto segment_prices = [&](const PriceSeries& ps, TradingDate first, TradingDate last) {
        std::vector<double> out;
        for (const auto& o : ps.observations()) {
            if (o.date < first || last < o.date || o.date == window.event_date) continue;
            out.push_back(o.price);
        }
        return out;
    };

    std::vector<DescriptiveRow> rows;
    for (const auto& id : panel.asset_ids()) {
        const PriceSeries& ps = *by_id.at(id);
        struct Seg {
            const char* name;
            TradingDate first, last;
            const ReturnPanel* part;
        };
        const Seg parts[2] = {{"pre", window.pre_start, window.pre_end, &segs.pre},
                              {"post", window.post_start, window.post_end, &segs.post}};
        for (const auto& part : parts) {
            std::vector<double> px = segment_prices(ps, part.first, part.last);
            const std::vector<double>& rets = part.part->column(id);
            if (px.size() < 2) {
                throw InsufficientDataError("fewer than 2 " + std::string(part.name) +
                                            " prices for \"" + id + "\"");
            }
            DescriptiveRow row;
            row.asset_id = id;
            row.segment = part.name;
            row.mean_price = mean_of(px);
            row.std_price = sample_std(px);
            row.mean_return = mean_of(rets);
            row.std_return = sample_std(rets);
            row.n_prices = px.size();
            row.n_returns = rets.size();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace evcorr
