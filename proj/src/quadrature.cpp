#include "pluriloc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pluriloc {

namespace {

GaussLegendreRule compute_rule(int order) {
    // Newton iteration on P_order; standard initial guess via Chebyshev angles.
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // recurrence for P_order(x) and derivative
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

std::mutex rule_mutex;
std::map<int, GaussLegendreRule> rule_cache;

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1");
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(order);
    if (it == rule_cache.end()) it = rule_cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const auto& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

Complex gl_integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                             int order) {
    const auto& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex s = 0.0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           double max_panel, int order) {
    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * p / panels;
        const double pb = a + (b - a) * (p + 1) / panels;
        s += gl_integrate(f, pa, pb, order);
    }
    return s;
}

Complex gl_integrate_panels_complex(const std::function<Complex(double)>& f, double a, double b,
                                    double max_panel, int order) {
    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    Complex s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * p / panels;
        const double pb = a + (b - a) * (p + 1) / panels;
        s += gl_integrate_complex(f, pa, pb, order);
    }
    return s;
}

double gl_integrate_breakpoints(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& breakpoints, double max_panel,
                                int order) {
    if (b <= a) return 0.0;
    std::vector<double> cuts{a, b};
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        s += gl_integrate_panels(f, cuts[i], cuts[i + 1], max_panel, order);
    return s;
}

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
           double fb, double coarse, double tol, int depth, AdaptiveResult& res) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    res.evaluations += 2;
    const double left = (b - a) / 12.0 * (fa + 4.0 * flm + fm);
    const double right = (b - a) / 12.0 * (fm + 4.0 * frm + fb);
    const double fine = left + right;
    if (depth <= 0) {
        res.value += fine;
        res.error_estimate += std::abs(fine - coarse);
        res.converged = false;
        return;
    }
    if (std::abs(fine - coarse) <= 15.0 * tol) {
        res.value += fine + (fine - coarse) / 15.0;
        res.error_estimate += std::abs(fine - coarse) / 15.0;
        return;
    }
    adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, res);
    adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, res);
}

}  // namespace

AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth) {
    AdaptiveResult res;
    res.converged = true;
    if (b <= a) return res;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    res.evaluations = 3;
    const double coarse = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adapt(f, a, b, fa, fm, fb, coarse, abs_tol, max_depth, res);
    return res;
}

}  // namespace pluriloc
