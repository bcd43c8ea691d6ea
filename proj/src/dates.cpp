#include "evcorr/dates.hpp"

#include <chrono>
#include <cstdio>

#include "evcorr/errors.hpp"

namespace evcorr {

TradingDate::TradingDate(int year, unsigned month, unsigned day)
    : year_(year), month_(month), day_(day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "invalid calendar date %04d-%02u-%02u", year, month, day);
        throw InvalidInputError(buf);
    }
    serial_ = std::chrono::sys_days{ymd}.time_since_epoch().count();
}

TradingDate TradingDate::parse(const std::string& text) {
    int y = 0;
    unsigned m = 0, d = 0;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &trailing) != 3 ||
        text.size() != 10) {
        throw ParseError("expected ISO date YYYY-MM-DD, got \"" + text + "\"");
    }
    try {
        return TradingDate(y, m, d);
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
}

std::string TradingDate::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year_, month_, day_);
    return buf;
}

} // namespace evcorr
