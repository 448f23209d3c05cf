#pragma once

#include "series.hpp"

#include <vector>

namespace sarima {

// Additive decomposition observed = trend + seasonal + residual. Trend and
// residual are NaN-masked where the centered moving average is undefined
// (first and last m/2 points).
struct DecompositionResult {
    std::vector<double> observed;
    std::vector<double> trend;
    std::vector<double> seasonal;
    std::vector<double> residual;
    int period = 0;
};

// Classical decomposition: centered moving average trend (2xm for even m),
// per-position mean of detrended values re-centered to zero sum as the
// seasonal component, remainder as residual. Requires length >= 2m.
DecompositionResult classical_decompose(const TimeSeries& s, int period);

} // namespace sarima
