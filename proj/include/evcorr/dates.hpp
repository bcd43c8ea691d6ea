#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace evcorr {

/// Calendar date of a daily observation. No time-of-day component.
class TradingDate {
public:
    TradingDate() = default;

    /// Throws InvalidInputError unless (y, m, d) is a valid Gregorian date.
    TradingDate(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD". Throws ParseError on malformed input.
    static TradingDate parse(const std::string& text);

    int year() const { return year_; }
    unsigned month() const { return month_; }
    unsigned day() const { return day_; }

    /// Days since the civil epoch 1970-01-01; defines the total order.
    std::int64_t serial() const { return serial_; }

    std::string to_string() const; // ISO-8601

    friend auto operator<=>(const TradingDate& a, const TradingDate& b) {
        return a.serial_ <=> b.serial_;
    }
    friend bool operator==(const TradingDate& a, const TradingDate& b) {
        return a.serial_ == b.serial_;
    }

private:
    int year_ = 1970;
    unsigned month_ = 1;
    unsigned day_ = 1;
    std::int64_t serial_ = 0;
};

} // namespace evcorr
