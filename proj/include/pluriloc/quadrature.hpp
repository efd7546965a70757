#pragma once

#include <functional>
#include <vector>

#include "pluriloc/types.hpp"

namespace pluriloc {

// Nodes/weights on [-1, 1]; computed once per order and cached.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

/// Integral over [a, b] with one rule application.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int order = 64);
Complex gl_integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                             int order = 64);

/// Integral over [a, b] split into panels of width <= max_panel (at least one panel).
double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           double max_panel, int order = 64);
Complex gl_integrate_panels_complex(const std::function<Complex(double)>& f, double a, double b,
                                    double max_panel, int order = 64);

/// Integral over [a, b] with panels additionally split at the given breakpoints
/// (integrand smooth on each piece).
double gl_integrate_breakpoints(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& breakpoints, double max_panel,
                                int order = 64);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int evaluations = 0;
};

/// Adaptive bisection with an embedded GL pair per panel; absolute tolerance.
AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth = 30);

}  // namespace pluriloc
