#pragma once

#include "errors.hpp"

#include <string>
#include <vector>

namespace sarima {

// Multiplicative seasonal order (p,d,q)x(P,D,Q,m).
struct ModelOrder {
    int p = 0, d = 0, q = 0;
    int P = 0, D = 0, Q = 0;
    int m = 1;

    // Total coefficient-order cap keeps the state dimension bounded.
    static constexpr int kDefaultOrderCap = 12;

    void validate(int order_cap = kDefaultOrderCap) const;

    int diff_consumed() const { return d + D * m; }
    bool estimates_constant() const { return d + D == 0; }
    // Estimated parameters: coefficients + constant (when present) + sigma2.
    int param_count() const { return p + q + P + Q + (estimates_constant() ? 1 : 0) + 1; }

    std::string str() const;
};

// Coefficients of the model. AR terms enter the recursion positively
// (y_t = ... + ar[0]*y_{t-1} + ...), MA terms weight lagged innovations
// positively (... + ma[0]*e_{t-1} + ...).
struct SarimaParams {
    std::vector<double> ar;  // p
    std::vector<double> ma;  // q
    std::vector<double> sar; // P, at seasonal lags m, 2m, ...
    std::vector<double> sma; // Q
    double constant = 0.0;
    double sigma2 = 1.0;

    void validate_shape(const ModelOrder& order) const;
};

// Product of seasonal and non-seasonal lag polynomials, as plain lag
// coefficient vectors: y_t = sum ar_full[j-1]*y_{t-j} + e_t + sum
// ma_full[j-1]*e_{t-j}. Lengths p + m*P and q + m*Q.
struct ExpandedPolynomials {
    std::vector<double> ar_full;
    std::vector<double> ma_full;
};

ExpandedPolynomials expand_polynomials(const ModelOrder& order, const SarimaParams& params);

// True when 1 - sum coeffs[j-1] z^j has every root strictly outside the unit
// circle (Schur-Cohn step-down test; no root extraction).
bool lag_polynomial_stable(const std::vector<double>& coeffs);

// Stationarity of the expanded AR polynomial and invertibility of the
// expanded MA polynomial.
bool stationary(const ModelOrder& order, const SarimaParams& params);
bool invertible(const ModelOrder& order, const SarimaParams& params);

// Flat estimated-parameter vector [ar, ma, sar, sma, (constant), sigma2],
// the layout used by the optimizer, the covariance matrix, and the
// coefficient table.
std::vector<double> pack_params(const ModelOrder& order, const SarimaParams& params);
SarimaParams unpack_params(const ModelOrder& order, const std::vector<double>& x);
std::vector<std::string> param_names(const ModelOrder& order);

// Akaike information criterion, 2k - 2 lnL.
double aic(double loglik, int param_count);

} // namespace sarima
