#include "pluriloc/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pluriloc {

double cauchy_bound(double C, double sigma, double rho, int k) {
    if (C <= 0.0 || sigma <= 0.0 || rho <= 0.0)
        throw std::invalid_argument("cauchy_bound: C, sigma, rho must be positive");
    if (k < 0) throw std::invalid_argument("cauchy_bound: k >= 0");
    if (k == 0) return C;
    return C * std::exp((k / rho) * std::log(M_E * sigma * rho / k));
}

namespace {

int last_nonzero_index(const CVec& c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (std::abs(c[k]) != 0.0) return k;
    return -1;
}

std::vector<int> window_indices(const CVec& c, const WindowPolicy& policy, int k_last) {
    const int lo = std::max(2, static_cast<int>(std::ceil(k_last * (1.0 - policy.top_fraction))));
    std::vector<int> idx;
    for (int k = lo; k <= k_last; ++k)
        if (std::abs(c[k]) != 0.0) idx.push_back(k);
    return idx;
}

// 3x3 symmetric solve by Cramer; the systems here are tiny and well scaled.
bool solve3(const double m[3][3], const double rhs[3], double out[3]) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-300) return false;
    for (int i = 0; i < 3; ++i) {
        double t[3][3];
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) t[r][cc] = m[r][cc];
        for (int r = 0; r < 3; ++r) t[r][i] = rhs[r];
        const double di = t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
                          t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
                          t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
        out[i] = di / det;
    }
    return true;
}

}  // namespace

OrderEstimate estimate_order(const CoefficientSequence& c, const WindowPolicy& policy) {
    OrderEstimate est;
    est.method = "fit -log|c_k| ~ A k log k + B k + C log k; rho = 1/A";
    const int k_last = last_nonzero_index(c.coefficients);
    if (k_last <= 0) {
        est.order_zero = true;  // constant or identically zero
        return est;
    }
    const int k_max = c.max_index();
    if (k_last <= k_max / 2) {
        est.order_zero = true;  // the entire top half vanishes: polynomial data
        return est;
    }
    const auto idx = window_indices(c.coefficients, policy, k_last);
    if (static_cast<int>(idx.size()) < policy.min_points)
        throw std::invalid_argument("estimate_order: fewer than " +
                                    std::to_string(policy.min_points) +
                                    " nonzero coefficients in the window");
    est.window_lo = idx.front();
    est.window_hi = idx.back();

    int nonpositive = 0;
    double m[3][3] = {};
    double rhs3[3] = {};
    for (int k : idx) {
        const double y = -std::log(std::abs(c.coefficients[k]));
        if (y <= 0.0) ++nonpositive;
        const double b0 = k * std::log(static_cast<double>(k));
        const double b1 = k;
        const double b2 = std::log(static_cast<double>(k));
        const double basis[3] = {b0, b1, b2};
        for (int i = 0; i < 3; ++i) {
            rhs3[i] += basis[i] * y;
            for (int j = 0; j < 3; ++j) m[i][j] += basis[i] * basis[j];
        }
        if (y > 0.0) est.raw_limsup = std::max(est.raw_limsup, b0 / y);
    }
    // -log|c_k| <= 0 persistently: coefficients do not decay
    if (2 * nonpositive > static_cast<int>(idx.size())) {
        est.infinite_order = true;
        return est;
    }
    double coef[3];
    if (!solve3(m, rhs3, coef) || coef[0] <= 1e-9) {
        est.infinite_order = true;
        return est;
    }
    est.rho = 1.0 / coef[0];
    double ss = 0.0;
    for (int k : idx) {
        const double y = -std::log(std::abs(c.coefficients[k]));
        const double fit = coef[0] * k * std::log(static_cast<double>(k)) + coef[1] * k +
                           coef[2] * std::log(static_cast<double>(k));
        ss += (y - fit) * (y - fit);
    }
    est.fit_residual = std::sqrt(ss / idx.size());
    return est;
}

TypeEstimate estimate_type(const CoefficientSequence& c, double rho, const WindowPolicy& policy) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("estimate_type: rho must be positive and finite");
    TypeEstimate est;
    const int k_last = last_nonzero_index(c.coefficients);
    if (k_last <= 0) {
        est.zero_type = true;
        return est;
    }
    const auto idx = window_indices(c.coefficients, policy, k_last);
    if (idx.empty()) {
        est.zero_type = true;
        return est;
    }
    est.window_lo = idx.front();
    est.window_hi = idx.back();
    double lim = 0.0;
    for (int k : idx) {
        const double t =
            std::exp(std::log(static_cast<double>(k)) / rho + std::log(std::abs(c.coefficients[k])) / k);
        lim = std::max(lim, t);
    }
    est.raw_limsup = lim;
    est.sigma = std::pow(lim, rho) / (M_E * rho);
    return est;
}

ComparisonSum comparison_series(double C, double sigma, double rho, double r) {
    if (C <= 0.0 || sigma <= 0.0 || rho <= 0.0)
        throw std::invalid_argument("comparison_series: parameters must be positive");
    if (r < 0.0) throw std::invalid_argument("comparison_series: r >= 0");
    ComparisonSum out;
    double sum = 1.0;  // k = 0 term
    double prev = 1.0;
    int k = 1;
    for (; k < 100000; ++k) {
        const double term = std::exp((k / rho) * std::log(M_E * sigma * rho / k) +
                                     k * std::log(std::max(r, 1e-300)));
        if (r == 0.0) break;
        if (!std::isfinite(term) || !std::isfinite(sum) || sum > 1e300) {
            out.overflow = true;
            out.value = std::numeric_limits<double>::infinity();
            out.terms_used = k;
            return out;
        }
        sum += term;
        // past the peak, terms decay faster than geometrically
        if (term < prev && term < 1e-12 * sum) break;
        prev = term;
    }
    out.value = C * sum;
    out.terms_used = k;
    return out;
}

IndicatorEstimate indicator_estimate(const std::function<Complex(double)>& along_ray, double rho,
                                     const TGrid& grid) {
    if (!(rho > 0.0)) throw std::invalid_argument("indicator_estimate: rho > 0 required");
    if (grid.count < 8 || grid.t_min <= 0.0 || grid.t_max <= grid.t_min)
        throw std::invalid_argument("indicator_estimate: bad t-grid");

    IndicatorEstimate est;
    double t_max = grid.t_max;
    std::vector<double> ts, mags;
    for (int attempt = 0; attempt < 60; ++attempt) {
        ts.clear();
        mags.clear();
        bool finite = true;
        const double ratio = std::pow(t_max / grid.t_min, 1.0 / (grid.count - 1));
        double t = grid.t_min;
        for (int i = 0; i < grid.count; ++i, t *= ratio) {
            const Complex v = along_ray(t);
            const double a = std::abs(v);
            if (!std::isfinite(a)) { finite = false; break; }
            ts.push_back(t);
            mags.push_back(a);
        }
        if (finite) break;
        t_max /= 2.0;
        est.overflow_shrunk = true;
        if (t_max <= grid.t_min * 2.0)
            throw std::runtime_error("indicator_estimate: evaluator overflows on the whole grid");
    }
    est.t_max_used = t_max;

    bool all_zero = true;
    for (double m : mags)
        if (m > 0.0) { all_zero = false; break; }
    if (all_zero) {
        est.minus_infinity = true;
        est.value = -std::numeric_limits<double>::infinity();
        return est;
    }

    // least squares of log|f| = i t^rho + c over the top decade
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < t_max / 10.0 || mags[i] <= 0.0) continue;
        const double x = std::pow(ts[i], rho);
        const double y = std::log(mags[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 3) {
        est.reliable = false;
        est.residual = std::numeric_limits<double>::infinity();
        return est;
    }
    const double det = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy * sxx - sx * sxy) / det;
    double ss = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < t_max / 10.0 || mags[i] <= 0.0) continue;
        const double e = std::log(mags[i]) - (slope * std::pow(ts[i], rho) + intercept);
        ss += e * e;
    }
    est.value = slope;
    est.residual = std::sqrt(ss / n);
    est.reliable = est.residual < 0.5;
    return est;
}

}  // namespace pluriloc
