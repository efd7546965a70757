#include "pluriloc/radon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pluriloc/quadrature.hpp"

namespace pluriloc {

namespace {

void check_direction(const ScalarField& field, const RVec& omega) {
    if (static_cast<int>(omega.size()) != field.dimension())
        throw std::invalid_argument("radon: direction dimension mismatch");
    if (std::abs(euclid_norm(omega) - 1.0) > 1e-12)
        throw std::invalid_argument("radon: direction must be a unit vector");
}

// p-values where the profile changes analytic piece: component foot points
// shifted by the radial breakpoints and the support edges.
std::vector<double> profile_breakpoints(const ScalarField& field, const RVec& omega) {
    std::vector<double> cuts;
    for (std::size_t i = 0; i < field.components().size(); ++i) {
        const double foot = dot(field.components()[i].center, omega);
        for (double br : field.component_breakpoints(i)) {
            cuts.push_back(foot - br);
            cuts.push_back(foot + br);
        }
        const double reach = field.component_reach(i);
        cuts.push_back(foot - reach);
        cuts.push_back(foot + reach);
    }
    return cuts;
}

}  // namespace

double radon_forward(const ScalarField& field, const RVec& omega, double p) {
    check_direction(field, omega);
    const int n = field.dimension();
    double total = 0.0;
    for (std::size_t i = 0; i < field.components().size(); ++i) {
        const double d = std::abs(p - dot(field.components()[i].center, omega));
        const double reach = field.component_reach(i);
        if (d >= reach) continue;
        const auto radial_cuts = field.component_breakpoints(i);
        if (n == 2) {
            // line coordinate t along the hyperplane; |x - c| = sqrt(d^2 + t^2)
            const double T = std::sqrt(reach * reach - d * d);
            std::vector<double> cuts;
            for (double br : radial_cuts) {
                if (br > d && br < reach) {
                    const double tb = std::sqrt(br * br - d * d);
                    cuts.push_back(tb);
                    cuts.push_back(-tb);
                }
            }
            total += gl_integrate_breakpoints(
                [&](double t) { return field.component_profile(i, std::hypot(d, t)); }, -T, T,
                cuts, 2.0);
        } else {
            // polar radius in the hyperplane around the projected center
            std::vector<double> cuts(radial_cuts.begin(), radial_cuts.end());
            total += 2.0 * M_PI *
                     gl_integrate_breakpoints(
                         [&](double rho) { return field.component_profile(i, rho) * rho; }, d,
                         reach, cuts, 1.0);
        }
    }
    return total;
}

RadonProfile radon_profile(const ScalarField& field, const RVec& omega,
                           const ProfileGridSpec& grid) {
    check_direction(field, omega);
    double p_max = grid.p_max;
    if (p_max <= 0.0) p_max = 1.05 * field.effective_radius();
    if (p_max < field.effective_radius())
        throw std::invalid_argument("radon_profile: p_max below the field's effective radius");
    if (grid.count < 3) throw std::invalid_argument("radon_profile: count >= 3");

    RadonProfile prof;
    prof.omega = omega;
    prof.p0 = -p_max;
    prof.dp = 2.0 * p_max / (grid.count - 1);
    prof.values.resize(grid.count);
    for (int i = 0; i < grid.count; ++i)
        prof.values[i] = radon_forward(field, omega, prof.p_at(i));
    return prof;
}

double RadonProfile::l1_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double w = (i == 0 || i + 1 == values.size()) ? 0.5 : 1.0;
        s += w * std::abs(values[i]);
    }
    return s * dp;
}

std::string RadonProfile::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "p,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) os << p_at(i) << ',' << values[i] << '\n';
    return os.str();
}

SupportInterval detect_support(const RadonProfile& profile, double eps_rel) {
    if (!(eps_rel > 0.0 && eps_rel < 1.0))
        throw std::invalid_argument("detect_support: eps_rel in (0,1)");
    double vmax = 0.0;
    for (double v : profile.values) vmax = std::max(vmax, std::abs(v));
    SupportInterval si;
    si.threshold_used = eps_rel * vmax;
    if (vmax == 0.0) {
        si.empty = true;
        return si;
    }
    int first = -1, last = -1;
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        if (std::abs(profile.values[i]) > si.threshold_used) {
            if (first < 0) first = static_cast<int>(i);
            last = static_cast<int>(i);
        }
    }
    // conservative outward rounding by one grid cell
    si.a = profile.p_at(first) - profile.dp;
    si.b = profile.p_at(last) + profile.dp;
    return si;
}

namespace {

// n-D Fourier integral of one radial component about the origin, evaluated in
// polar/spherical coordinates; the angular factor is the plain calculus
// identity (trapezoid over the circle in R^2, 4 pi sinc in R^3), so the result
// is independent of any Radon-transform machinery.
Complex radial_fourier(const ScalarField& field, std::size_t i, double s) {
    const double reach = field.component_reach(i);
    std::vector<double> cuts = field.component_breakpoints(i);
    if (field.dimension() == 2) {
        auto angular = [&](double x) {  // int_0^{2pi} e^{-i x cos phi} dphi
            const int m = 256;
            Complex acc = 0.0;
            for (int q = 0; q < m; ++q) {
                const double phi = 2.0 * M_PI * q / m;
                acc += std::exp(Complex(0.0, -x * std::cos(phi)));
            }
            return acc * (2.0 * M_PI / m);
        };
        Complex total = 0.0;
        // r-panels split at breakpoints; trapezoid in phi is spectrally accurate
        std::vector<double> edges{0.0, reach};
        for (double c : cuts)
            if (c > 0.0 && c < reach) edges.push_back(c);
        std::sort(edges.begin(), edges.end());
        for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
            const int panels = std::max(
                1, static_cast<int>(std::ceil((edges[e + 1] - edges[e]) / 1.0)));
            for (int pnl = 0; pnl < panels; ++pnl) {
                const double ra = edges[e] + (edges[e + 1] - edges[e]) * pnl / panels;
                const double rb = edges[e] + (edges[e + 1] - edges[e]) * (pnl + 1) / panels;
                const auto& rule = gauss_legendre(64);
                const double mid = 0.5 * (ra + rb), half = 0.5 * (rb - ra);
                for (int q = 0; q < 64; ++q) {
                    const double r = mid + half * rule.nodes[q];
                    total += rule.weights[q] * half * field.component_profile(i, r) * r *
                             angular(s * r);
                }
            }
        }
        return total;
    }
    // R^3: int h(r) r^2 * 4 pi sinc(s r) dr
    auto sinc = [](double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; };
    const double val = gl_integrate_breakpoints(
        [&](double r) { return field.component_profile(i, r) * r * r * sinc(s * r); }, 0.0, reach,
        cuts, 0.5);
    return Complex(4.0 * M_PI * val, 0.0);
}

}  // namespace

FourierSliceResult fourier_slice_check(const ScalarField& field, const RVec& omega, double s,
                                       const LaplaceConfig& cfg) {
    check_direction(field, omega);
    FourierSliceResult out;

    // lhs: 1-D Fourier integral of the profile
    const double P = 1.02 * field.effective_radius();
    const auto cuts = profile_breakpoints(field, omega);
    const double panel = std::min(1.5, 50.0 / std::max(std::abs(s), 1.0));
    // complex integrand handled as two real quadratures sharing the cut structure
    const double re = gl_integrate_breakpoints(
        [&](double p) { return radon_forward(field, omega, p) * std::cos(s * p); }, -P, P, cuts,
        panel, cfg.gl_order);
    const double im = gl_integrate_breakpoints(
        [&](double p) { return radon_forward(field, omega, p) * -std::sin(s * p); }, -P, P, cuts,
        panel, cfg.gl_order);
    out.lhs = Complex(re, im);

    // rhs: n-D Fourier integral, component by component about its own center
    Complex rhs = 0.0;
    for (std::size_t i = 0; i < field.components().size(); ++i) {
        const double shift = s * dot(field.components()[i].center, omega);
        rhs += std::exp(Complex(0.0, -shift)) * radial_fourier(field, i, s);
    }
    out.rhs = rhs;
    out.discrepancy = std::abs(out.lhs - out.rhs);
    return out;
}

LaplaceValue line_laplace(const ScalarField& field, const RVec& omega, Complex z,
                          const LaplaceConfig& cfg) {
    check_direction(field, omega);
    LaplaceValue out;
    const RadonProfile prof = radon_profile(field, omega, cfg.detect_grid);
    const SupportInterval si = detect_support(prof, cfg.detect_eps_rel);
    if (si.empty) {
        out.value = 0.0;
        return out;
    }
    out.support_a = si.a;
    out.support_b = si.b;
    const double growth = std::abs(z.imag()) * std::max(std::abs(si.a), std::abs(si.b));
    if (growth > 690.0) {  // e^{growth} would overflow
        out.overflow = true;
        return out;
    }
    const double panel = std::min(cfg.base_panel, 1.0 / (4.0 * std::max(std::abs(z), 1e-9)));
    const auto cuts = profile_breakpoints(field, omega);
    const double re = gl_integrate_breakpoints(
        [&](double p) {
            return radon_forward(field, omega, p) * std::exp(z.imag() * p) *
                   std::cos(z.real() * p);
        },
        si.a, si.b, cuts, panel, cfg.gl_order);
    const double im = gl_integrate_breakpoints(
        [&](double p) {
            return radon_forward(field, omega, p) * std::exp(z.imag() * p) *
                   -std::sin(z.real() * p);
        },
        si.a, si.b, cuts, panel, cfg.gl_order);
    out.value = Complex(re, im);
    return out;
}

CVec taylor_on_line(const ScalarField& field, const RVec& omega, int K,
                    const LaplaceConfig& cfg) {
    check_direction(field, omega);
    if (K < 0) throw std::invalid_argument("taylor_on_line: K >= 0");
    const RadonProfile prof = radon_profile(field, omega, cfg.detect_grid);
    const SupportInterval si = detect_support(prof, cfg.detect_eps_rel);
    CVec c(K + 1, Complex(0.0));
    if (si.empty) return c;

    // shared nodes: panels over [a,b] split at the profile breakpoints
    std::vector<double> edges{si.a, si.b};
    for (double cut : profile_breakpoints(field, omega))
        if (cut > si.a && cut < si.b) edges.push_back(cut);
    std::sort(edges.begin(), edges.end());
    const auto& rule = gauss_legendre(cfg.gl_order);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const int panels =
            std::max(1, static_cast<int>(std::ceil((edges[e + 1] - edges[e]) / cfg.base_panel)));
        for (int pnl = 0; pnl < panels; ++pnl) {
            const double pa = edges[e] + (edges[e + 1] - edges[e]) * pnl / panels;
            const double pb = edges[e] + (edges[e + 1] - edges[e]) * (pnl + 1) / panels;
            const double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
            for (int q = 0; q < cfg.gl_order; ++q) {
                const double p = mid + half * rule.nodes[q];
                const double w = rule.weights[q] * half;
                const double ru = radon_forward(field, omega, p);
                Complex term(w * ru, 0.0);  // (-ip)^k / k! accumulated per node
                c[0] += term;
                for (int k = 1; k <= K; ++k) {
                    term *= Complex(0.0, -p) / static_cast<double>(k);
                    c[k] += term;
                }
            }
        }
    }
    return c;
}

std::string sinogram_csv(const std::vector<RadonProfile>& profiles) {
    std::ostringstream os;
    os.precision(17);
    os << "omega_index,p,value\n";
    for (std::size_t w = 0; w < profiles.size(); ++w)
        for (std::size_t i = 0; i < profiles[w].values.size(); ++i)
            os << w << ',' << profiles[w].p_at(i) << ',' << profiles[w].values[i] << '\n';
    return os.str();
}

}  // namespace pluriloc
