#include "series.hpp"

#include <cmath>
#include <string>

namespace sarima {

TimeSeries::TimeSeries(std::vector<double> values, YearMonth start, int periods_per_year)
    : values_(std::move(values)), start_(start), periods_per_year_(periods_per_year) {
    if (values_.empty())
        throw DataError("time series must contain at least one value");
    if (periods_per_year_ < 1)
        throw UsageError("periods_per_year must be positive");
    if (start_.month < 1 || start_.month > 12)
        throw UsageError("series start month must be in 1..12");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw DataError("non-finite value at position " + std::to_string(i));
    }
}

double TimeSeries::at(YearMonth p) const {
    if (!contains(p))
        throw DataError("period " + p.str() + " outside series span " + start_.str() + ".." +
                        end().str());
    return values_[static_cast<std::size_t>(months_between(start_, p))];
}

DailyQuotes::DailyQuotes(std::vector<DailyQuote> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        throw DataError("daily quotes must contain at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const DailyQuote& r = rows_[i];
        if (r.month < 1 || r.month > 12 || r.day < 1 || r.day > 31)
            throw DataError("invalid date in quote row " + std::to_string(i));
        if (!std::isfinite(r.close) || r.close <= 0.0)
            throw DataError("close must be positive and finite in quote row " + std::to_string(i));
        if (i > 0) {
            const DailyQuote& prev = rows_[i - 1];
            bool increasing = (r.year > prev.year) ||
                              (r.year == prev.year && r.month > prev.month) ||
                              (r.year == prev.year && r.month == prev.month && r.day > prev.day);
            if (!increasing)
                throw DataError("quote dates must be strictly increasing (row " +
                                std::to_string(i) + ")");
        }
    }
}

TimeSeries resample_monthly_mean(const DailyQuotes& quotes) {
    const auto& rows = quotes.rows();
    const YearMonth first{rows.front().year, rows.front().month};
    const YearMonth last{rows.back().year, rows.back().month};
    const int n_months = months_between(first, last) + 1;

    std::vector<double> sums(static_cast<std::size_t>(n_months), 0.0);
    std::vector<int> counts(static_cast<std::size_t>(n_months), 0);
    for (const DailyQuote& r : rows) {
        const int idx = months_between(first, YearMonth{r.year, r.month});
        sums[static_cast<std::size_t>(idx)] += r.close;
        counts[static_cast<std::size_t>(idx)] += 1;
    }

    std::vector<double> means(static_cast<std::size_t>(n_months));
    for (int i = 0; i < n_months; ++i) {
        if (counts[static_cast<std::size_t>(i)] == 0)
            throw DataError("no quotes for month " + first.plus(i).str() +
                            " inside the spanned range");
        means[static_cast<std::size_t>(i)] =
            sums[static_cast<std::size_t>(i)] / counts[static_cast<std::size_t>(i)];
    }
    return TimeSeries(std::move(means), first);
}

std::pair<TimeSeries, TimeSeries> split(const TimeSeries& s, YearMonth boundary) {
    if (!s.contains(boundary))
        throw DataError("split boundary " + boundary.str() + " outside series span " +
                        s.start().str() + ".." + s.end().str());
    if (boundary == s.start())
        throw DataError("split boundary at series start leaves an empty left side");

    const auto cut = static_cast<std::size_t>(months_between(s.start(), boundary));
    std::vector<double> left(s.values().begin(), s.values().begin() + cut);
    std::vector<double> right(s.values().begin() + cut, s.values().end());
    return {TimeSeries(std::move(left), s.start(), s.periods_per_year()),
            TimeSeries(std::move(right), boundary, s.periods_per_year())};
}

std::vector<double> differencing_operator(int d, int D, int m) {
    if (d < 0 || D < 0)
        throw UsageError("differencing orders must be non-negative");
    if (D > 0 && m < 1)
        throw UsageError("season length must be >= 1 when D > 0");

    // Expand (1-B)^d (1-B^m)^D as a polynomial in B. The product form makes
    // the seasonal/non-seasonal application order immaterial.
    std::vector<double> poly{1.0};
    for (int i = 0; i < d; ++i) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j];
            next[j + 1] -= poly[j];
        }
        poly = std::move(next);
    }
    for (int i = 0; i < D; ++i) {
        std::vector<double> next(poly.size() + static_cast<std::size_t>(m), 0.0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j];
            next[j + static_cast<std::size_t>(m)] -= poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<double> difference(const std::vector<double>& values, int d, int D, int m) {
    const std::vector<double> delta = differencing_operator(d, D, m);
    const std::size_t r = delta.size() - 1;
    if (values.size() <= r)
        throw DataError("series of length " + std::to_string(values.size()) +
                        " too short to difference with d=" + std::to_string(d) +
                        ", D=" + std::to_string(D) + ", m=" + std::to_string(m));

    std::vector<double> out(values.size() - r);
    for (std::size_t t = r; t < values.size(); ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= r; ++j)
            acc += delta[j] * values[t - j];
        out[t - r] = acc;
    }
    return out;
}

std::vector<double> difference(const TimeSeries& s, int d, int D, int m) {
    return difference(s.values(), d, D, m);
}

std::vector<double> integrate(const std::vector<double>& diff, int d, int D, int m,
                              const std::vector<double>& head) {
    const std::vector<double> delta = differencing_operator(d, D, m);
    const std::size_t r = delta.size() - 1;
    if (head.size() != r)
        throw UsageError("integration head must have length d + D*m = " + std::to_string(r) +
                         ", got " + std::to_string(head.size()));

    std::vector<double> out;
    out.reserve(head.size() + diff.size());
    out.insert(out.end(), head.begin(), head.end());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        // y_t = w_t - sum_{j>=1} delta_j y_{t-j}, inverting the convolution.
        double acc = diff[i];
        const std::size_t t = r + i;
        for (std::size_t j = 1; j <= r; ++j)
            acc -= delta[j] * out[t - j];
        out.push_back(acc);
    }
    return out;
}

} // namespace sarima
