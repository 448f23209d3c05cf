#pragma once

#include "calendar.hpp"
#include "errors.hpp"

#include <utility>
#include <vector>

namespace sarima {

// A contiguous monthly real-valued series. Immutable after construction;
// construction rejects NaN/Inf values and empty input.
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, YearMonth start, int periods_per_year = 12);

    const std::vector<double>& values() const { return values_; }
    YearMonth start() const { return start_; }
    int periods_per_year() const { return periods_per_year_; }
    std::size_t size() const { return values_.size(); }

    YearMonth end() const { return start_.plus(static_cast<int>(values_.size()) - 1); }
    YearMonth period_at(std::size_t i) const { return start_.plus(static_cast<int>(i)); }
    bool contains(YearMonth p) const { return p >= start_ && p <= end(); }

    // Value lookup by calendar period; throws DataError when outside the span.
    double at(YearMonth p) const;

private:
    std::vector<double> values_;
    YearMonth start_;
    int periods_per_year_;
};

// Raw daily close quotes: strictly increasing dates, trading days only.
struct DailyQuote {
    int year;
    int month; // 1..12
    int day;   // 1..31
    double close;
};

class DailyQuotes {
public:
    explicit DailyQuotes(std::vector<DailyQuote> rows);

    const std::vector<DailyQuote>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<DailyQuote> rows_;
};

// Mean close per calendar month over the spanned range. A month inside the
// span with no quotes is a gap error: the result must be contiguous.
TimeSeries resample_monthly_mean(const DailyQuotes& quotes);

// Splits at the given boundary: left ends the month before it, right starts
// at it. Both sides non-empty; concatenation reproduces the input.
std::pair<TimeSeries, TimeSeries> split(const TimeSeries& s, YearMonth boundary);

// Coefficients delta_0..delta_r of (1-B)^d (1-B^m)^D, delta_0 = 1.
std::vector<double> differencing_operator(int d, int D, int m);

// Applies (1-B)^d (1-B^m)^D. Output length = input length - d - D*m.
std::vector<double> difference(const std::vector<double>& values, int d, int D, int m);
std::vector<double> difference(const TimeSeries& s, int d, int D, int m);

// Exact inverse of difference: head carries the d + D*m leading original
// values that the differencing consumed.
std::vector<double> integrate(const std::vector<double>& diff, int d, int D, int m,
                              const std::vector<double>& head);

} // namespace sarima
