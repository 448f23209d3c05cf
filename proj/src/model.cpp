#include "model.hpp"

#include <cmath>
#include <cstdio>

namespace sarima {

void ModelOrder::validate(int order_cap) const {
    if (p < 0 || d < 0 || q < 0 || P < 0 || D < 0 || Q < 0)
        throw UsageError("model orders must be non-negative");
    if (m < 1)
        throw UsageError("season length m must be >= 1");
    if (m == 1 && (P != 0 || D != 0 || Q != 0))
        throw UsageError("seasonal orders require m > 1");
    if (p + q + P + Q > order_cap)
        throw UsageError("total coefficient order " + std::to_string(p + q + P + Q) +
                         " exceeds cap " + std::to_string(order_cap));
}

std::string ModelOrder::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%d,%d,%d)x(%d,%d,%d,%d)", p, d, q, P, D, Q, m);
    return buf;
}

void SarimaParams::validate_shape(const ModelOrder& order) const {
    if (static_cast<int>(ar.size()) != order.p || static_cast<int>(ma.size()) != order.q ||
        static_cast<int>(sar.size()) != order.P || static_cast<int>(sma.size()) != order.Q)
        throw UsageError("parameter dimensions do not match order " + order.str());
    if (!(sigma2 > 0.0))
        throw UsageError("sigma2 must be positive");
}

namespace {

// Multiplies (1 + sign*sum a_j B^j) by (1 + sign*sum b_j B^{m j}) and
// returns the combined lag coefficients with the same sign convention.
std::vector<double> multiply_seasonal(const std::vector<double>& nonseasonal,
                                      const std::vector<double>& seasonal, int m, double sign) {
    const std::size_t n1 = nonseasonal.size();
    const std::size_t n2 = seasonal.size();
    std::vector<double> poly(n1 + n2 * static_cast<std::size_t>(m) + 1, 0.0);
    poly[0] = 1.0;
    for (std::size_t j = 0; j < n1; ++j)
        poly[j + 1] = sign * nonseasonal[j];
    for (std::size_t i = 0; i < n2; ++i) {
        const std::size_t base = (i + 1) * static_cast<std::size_t>(m);
        poly[base] += sign * seasonal[i];
        for (std::size_t j = 0; j < n1; ++j)
            poly[base + j + 1] += sign * seasonal[i] * sign * nonseasonal[j];
    }
    std::vector<double> out(poly.size() - 1);
    for (std::size_t j = 1; j < poly.size(); ++j)
        out[j - 1] = sign * poly[j];
    return out;
}

} // namespace

ExpandedPolynomials expand_polynomials(const ModelOrder& order, const SarimaParams& params) {
    params.validate_shape(order);
    ExpandedPolynomials out;
    // AR: (1 - sum ar B)(1 - sum sar B^m); MA: (1 + sum ma B)(1 + sum sma B^m).
    out.ar_full = multiply_seasonal(params.ar, params.sar, order.m, -1.0);
    out.ma_full = multiply_seasonal(params.ma, params.sma, order.m, +1.0);
    return out;
}

bool lag_polynomial_stable(const std::vector<double>& coeffs) {
    // Step-down (Schur-Cohn) recursion: stable iff every reflection
    // coefficient has modulus < 1.
    std::vector<double> a = coeffs;
    while (!a.empty()) {
        const double k = a.back();
        if (!std::isfinite(k) || std::abs(k) >= 1.0)
            return false;
        const std::size_t n = a.size() - 1;
        std::vector<double> next(n);
        const double denom = 1.0 - k * k;
        for (std::size_t j = 0; j < n; ++j)
            next[j] = (a[j] - k * a[n - 1 - j]) / denom;
        a = std::move(next);
    }
    return true;
}

bool stationary(const ModelOrder& order, const SarimaParams& params) {
    return lag_polynomial_stable(expand_polynomials(order, params).ar_full);
}

bool invertible(const ModelOrder& order, const SarimaParams& params) {
    // MA polynomial is 1 + sum ma_full B^j; its step-down form uses -ma.
    std::vector<double> neg = expand_polynomials(order, params).ma_full;
    for (double& v : neg)
        v = -v;
    return lag_polynomial_stable(neg);
}

std::vector<double> pack_params(const ModelOrder& order, const SarimaParams& params) {
    params.validate_shape(order);
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(order.param_count()));
    x.insert(x.end(), params.ar.begin(), params.ar.end());
    x.insert(x.end(), params.ma.begin(), params.ma.end());
    x.insert(x.end(), params.sar.begin(), params.sar.end());
    x.insert(x.end(), params.sma.begin(), params.sma.end());
    if (order.estimates_constant())
        x.push_back(params.constant);
    x.push_back(params.sigma2);
    return x;
}

SarimaParams unpack_params(const ModelOrder& order, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != order.param_count())
        throw UsageError("parameter vector length " + std::to_string(x.size()) +
                         " does not match order " + order.str());
    SarimaParams params;
    auto it = x.begin();
    params.ar.assign(it, it + order.p);
    it += order.p;
    params.ma.assign(it, it + order.q);
    it += order.q;
    params.sar.assign(it, it + order.P);
    it += order.P;
    params.sma.assign(it, it + order.Q);
    it += order.Q;
    params.constant = order.estimates_constant() ? *it++ : 0.0;
    params.sigma2 = *it;
    return params;
}

std::vector<std::string> param_names(const ModelOrder& order) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(order.param_count()));
    for (int i = 1; i <= order.p; ++i)
        names.push_back("ar.L" + std::to_string(i));
    for (int i = 1; i <= order.q; ++i)
        names.push_back("ma.L" + std::to_string(i));
    for (int i = 1; i <= order.P; ++i)
        names.push_back("ar.S.L" + std::to_string(i * order.m));
    for (int i = 1; i <= order.Q; ++i)
        names.push_back("ma.S.L" + std::to_string(i * order.m));
    if (order.estimates_constant())
        names.push_back("const");
    names.push_back("sigma2");
    return names;
}

double aic(double loglik, int param_count) {
    if (param_count < 1)
        throw UsageError("parameter count must be >= 1");
    return 2.0 * param_count - 2.0 * loglik;
}

} // namespace sarima
