#pragma once

#include "series.hpp"

#include <string>
#include <vector>

namespace sarima {

// Splits one CSV record, honoring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);

// Reads a daily OHLC-style CSV. A header row is required; date and close
// columns are located by name. Dates may be ISO (2019-01-31) or NSE style
// (31-Jan-2019). Errors carry the 1-based line number.
DailyQuotes load_daily_csv(const std::string& path, const std::string& date_column = "Date",
                           const std::string& close_column = "Close");

// Normalized monthly format: header "period,value", periods as YYYY-MM.
TimeSeries load_monthly_csv(const std::string& path);
void save_monthly_csv(const TimeSeries& s, const std::string& path);

} // namespace sarima
