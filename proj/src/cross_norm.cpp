#include "pluriloc/cross_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pluriloc {

double cross_norm_euclidean(const CVec& zeta) {
    double n2 = 0.0;
    for (const auto& z : zeta) n2 += std::norm(z);
    const double q = std::abs(bilinear(zeta, zeta));
    // roundoff can push |<z,z>| a hair past |z|^2
    const double inner = std::max(0.0, n2 * n2 - q * q);
    return std::sqrt(n2 + std::sqrt(inner));
}

ABDecomposition ab_decompose(const CVec& zeta) {
    const Complex zz = bilinear(zeta, zeta);
    const double theta = (zz == Complex(0.0)) ? 0.0 : std::arg(zz) / 2.0;
    const Complex rot = std::polar(1.0, -theta);
    ABDecomposition d;
    d.theta = theta;
    d.a.resize(zeta.size());
    d.b.resize(zeta.size());
    for (std::size_t j = 0; j < zeta.size(); ++j) {
        const Complex w = rot * zeta[j];
        d.a[j] = w.real();
        d.b[j] = w.imag();
    }
    return d;
}

double dist_to_CRn(const CVec& zeta) {
    // |b| = (1/sqrt 2)(|z|^2 - |<z,z>|)^{1/2}
    double n2 = 0.0;
    for (const auto& z : zeta) n2 += std::norm(z);
    const double q = std::abs(bilinear(zeta, zeta));
    return std::sqrt(std::max(0.0, n2 - q) / 2.0);
}

double interval_support(const IntervalSupportFn& H, double t) {
    if (H.a > H.b) throw std::invalid_argument("interval_support: a > b");
    return t <= 0.0 ? H.a * t : H.b * t;
}

CrossNormBound cross_norm_general(const std::function<double(const RVec&)>& norm_fn,
                                  const CVec& zeta, int grid_count, int refine_steps) {
    if (grid_count < 4) grid_count = 4;
    const std::size_t n = zeta.size();

    auto value_at = [&](double theta) {
        const Complex rot = std::polar(1.0, -theta);
        RVec a(n), b(n);
        bool b_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            const Complex w = rot * zeta[j];
            a[j] = w.real();
            b[j] = w.imag();
            if (b[j] != 0.0) b_zero = false;
        }
        // single-term decomposition when e^{-i theta} z is real
        double v = norm_fn(a) + (b_zero ? 0.0 : norm_fn(b));
        if (!std::isfinite(v)) throw std::runtime_error("cross_norm_general: non-finite norm value");
        return v;
    };

    // theta and theta+pi give (-a,-b); period is pi
    double best_theta = 0.0, best = value_at(0.0);
    for (int i = 1; i < grid_count; ++i) {
        const double theta = M_PI * i / grid_count;
        const double v = value_at(theta);
        if (v < best) { best = v; best_theta = theta; }
    }

    // golden-section polish around the grid minimum
    const double h = M_PI / grid_count;
    double lo = best_theta - h, hi = best_theta + h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = value_at(x1), f2 = value_at(x2);
    for (int i = 0; i < refine_steps; ++i) {
        if (f1 <= f2) { hi = x2; x2 = x1; f2 = f1; x1 = hi - gr * (hi - lo); f1 = value_at(x1); }
        else          { lo = x1; x1 = x2; f1 = f2; x2 = lo + gr * (hi - lo); f2 = value_at(x2); }
    }
    if (f1 < best) { best = f1; best_theta = x1; }
    if (f2 < best) { best = f2; best_theta = x2; }

    return CrossNormBound{best, false, best_theta};
}

}  // namespace pluriloc
