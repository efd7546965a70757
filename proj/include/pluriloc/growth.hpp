#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pluriloc/types.hpp"

namespace pluriloc {

struct CoefficientSequence {
    CVec coefficients;  // c_0 .. c_Kmax

    int max_index() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct WindowPolicy {
    double top_fraction = 0.5;  // use the top half of available indices
    int min_points = 8;
};

/// Coefficient bound C (e sigma rho / k)^{k/rho}; k = 0 gives C.
double cauchy_bound(double C, double sigma, double rho, int k);

struct OrderEstimate {
    bool order_zero = false;       // data is a polynomial
    bool infinite_order = false;
    double rho = 0.0;
    double raw_limsup = 0.0;       // max of k log k / (-log|c_k|) over the window
    int window_lo = 0, window_hi = 0;
    double fit_residual = 0.0;
    std::string method;
};

/// Order from coefficients. The defining limsup of k log k / (-log|c_k|)
/// converges like 1 + O(1/log k), far too slowly for finite windows, so the
/// estimate comes from fitting -log|c_k| = A k log k + B k + C log k over the
/// window and reporting 1/A; the raw windowed limsup is kept for reference.
OrderEstimate estimate_order(const CoefficientSequence& c, const WindowPolicy& policy = {});

struct TypeEstimate {
    bool zero_type = false;
    double sigma = 0.0;
    int window_lo = 0, window_hi = 0;
    double raw_limsup = 0.0;  // max of k^{1/rho} |c_k|^{1/k}
};

/// Type with respect to a given finite order rho > 0, via
/// (e sigma rho)^{1/rho} = limsup k^{1/rho} |c_k|^{1/k} (max over the window).
TypeEstimate estimate_type(const CoefficientSequence& c, double rho,
                           const WindowPolicy& policy = {});

struct ComparisonSum {
    double value = 0.0;
    bool overflow = false;
    int terms_used = 0;
};

/// Partial sum of C sum_k (e sigma rho / k)^{k/rho} r^k, truncated once the
/// tail is certified below 1e-12 of the running sum.
ComparisonSum comparison_series(double C, double sigma, double rho, double r);

struct TGrid {
    double t_min = 1.0;
    double t_max = 100.0;
    int count = 48;  // geometric spacing
};

struct IndicatorEstimate {
    bool minus_infinity = false;  // the function vanishes on the sampled ray
    double value = 0.0;
    double residual = 0.0;  // RMS fit residual of log|f| against t^rho
    bool reliable = true;
    bool overflow_shrunk = false;
    double t_max_used = 0.0;
};

/// Ray growth rate: least-squares slope of log|f(t)| against t^rho over the
/// top decade of a geometric t-grid. `along_ray` evaluates f at t times the
/// caller's fixed direction. Overflow shrinks the grid and flags the result.
IndicatorEstimate indicator_estimate(const std::function<Complex(double)>& along_ray, double rho,
                                     const TGrid& grid = {});

}  // namespace pluriloc
