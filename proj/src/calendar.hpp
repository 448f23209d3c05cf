#pragma once

#include "errors.hpp"

#include <compare>
#include <cstdio>
#include <string>

namespace sarima {

// Calendar month, the index unit of every monthly series.
struct YearMonth {
    int year = 0;
    int month = 1; // 1..12

    auto operator<=>(const YearMonth&) const = default;

    // Months since year 0, convenient for arithmetic.
    int index() const { return year * 12 + (month - 1); }

    static YearMonth from_index(int idx) {
        int y = idx / 12;
        int m = idx % 12;
        if (m < 0) {
            m += 12;
            y -= 1;
        }
        return YearMonth{y, m + 1};
    }

    YearMonth plus(int months) const { return from_index(index() + months); }

    std::string str() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
        return buf;
    }
};

inline int months_between(YearMonth from, YearMonth to) { return to.index() - from.index(); }

// Parses "YYYY-MM". Throws UsageError on malformed input.
inline YearMonth parse_year_month(const std::string& text) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &y, &m, &extra) != 2 || m < 1 || m > 12)
        throw UsageError("invalid year-month '" + text + "' (expected YYYY-MM)");
    return YearMonth{y, m};
}

} // namespace sarima
