#include "decompose.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sarima {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

DecompositionResult classical_decompose(const TimeSeries& s, int period) {
    if (period < 2)
        throw UsageError("decomposition period must be >= 2");
    const std::size_t n = s.size();
    const std::size_t m = static_cast<std::size_t>(period);
    if (n < 2 * m)
        throw DataError("series of length " + std::to_string(n) +
                        " shorter than two full periods (need " + std::to_string(2 * m) + ")");

    const std::vector<double>& y = s.values();
    DecompositionResult res;
    res.observed = y;
    res.period = period;
    res.trend.assign(n, kNaN);
    res.seasonal.assign(n, 0.0);
    res.residual.assign(n, kNaN);

    // Centered moving average: for even m a 2xm window with half weights at
    // both ends, for odd m a plain m-point window.
    const std::size_t half = m / 2;
    if (m % 2 == 0) {
        for (std::size_t t = half; t + half < n; ++t) {
            double acc = 0.5 * y[t - half] + 0.5 * y[t + half];
            for (std::size_t j = t - half + 1; j < t + half; ++j)
                acc += y[j];
            res.trend[t] = acc / static_cast<double>(m);
        }
    } else {
        for (std::size_t t = half; t + half < n; ++t) {
            double acc = 0.0;
            for (std::size_t j = t - half; j <= t + half; ++j)
                acc += y[j];
            res.trend[t] = acc / static_cast<double>(m);
        }
    }

    // Seasonal index: mean detrended value per position within the period,
    // re-centered so one full period sums to zero.
    std::vector<double> sums(m, 0.0);
    std::vector<int> counts(m, 0);
    for (std::size_t t = 0; t < n; ++t) {
        if (std::isnan(res.trend[t]))
            continue;
        sums[t % m] += y[t] - res.trend[t];
        counts[t % m] += 1;
    }
    std::vector<double> idx(m, 0.0);
    double mean_idx = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        if (counts[k] == 0)
            throw DataError("no interior observations for seasonal position " + std::to_string(k));
        idx[k] = sums[k] / counts[k];
        mean_idx += idx[k];
    }
    mean_idx /= static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k)
        idx[k] -= mean_idx;

    for (std::size_t t = 0; t < n; ++t) {
        res.seasonal[t] = idx[t % m];
        if (!std::isnan(res.trend[t]))
            res.residual[t] = y[t] - res.trend[t] - res.seasonal[t];
    }
    return res;
}

} // namespace sarima
