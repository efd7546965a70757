#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pluriloc/fields.hpp"
#include "pluriloc/types.hpp"

namespace pluriloc {

struct ProfileGridSpec {
    double p_max = 0.0;  // 0: derived from the field's effective radius (x 1.05)
    int count = 801;
};

struct RadonProfile {
    RVec omega;  // unit direction
    double p0 = 0.0;
    double dp = 0.0;
    RVec values;

    double p_at(std::size_t i) const { return p0 + dp * static_cast<double>(i); }
    double l1_norm() const;  // trapezoid estimate of ||Ru(omega,.)||_L1
    std::string to_csv() const;
};

struct SupportInterval {
    bool empty = false;
    double a = 0.0;
    double b = 0.0;
    double threshold_used = 0.0;
};

struct LaplaceConfig {
    double base_panel = 0.25;  // h_base; panels also shrink as 1/(4|z|)
    int gl_order = 64;
    ProfileGridSpec detect_grid;
    double detect_eps_rel = 1e-6;
};

/// Integral of the field over the hyperplane <x, omega> = p. Each radial
/// component reduces to a one-dimensional quadrature (line coordinate in R^2,
/// radial coordinate with the 2 pi Jacobian in R^3) with panels split at the
/// component's breakpoints; target accuracy 1e-8 absolute for the built-ins.
double radon_forward(const ScalarField& field, const RVec& omega, double p);

RadonProfile radon_profile(const ScalarField& field, const RVec& omega,
                           const ProfileGridSpec& grid = {});

/// Smallest grid interval containing all |values| > eps_rel * max, widened one
/// cell outward on each side (containment must err outward).
SupportInterval detect_support(const RadonProfile& profile, double eps_rel);

struct FourierSliceResult {
    Complex lhs;  // 1-D Fourier integral of the Radon profile at s
    Complex rhs;  // n-D Fourier integral of the field at s*omega
    double discrepancy = 0.0;
};

FourierSliceResult fourier_slice_check(const ScalarField& field, const RVec& omega, double s,
                                       const LaplaceConfig& cfg = {});

struct LaplaceValue {
    Complex value;
    bool overflow = false;
    double support_a = 0.0, support_b = 0.0;
};

/// integral over the detected support of e^{-izp} Ru(omega, p) dp.
LaplaceValue line_laplace(const ScalarField& field, const RVec& omega, Complex z,
                          const LaplaceConfig& cfg = {});

/// Taylor data of the line transform at 0: c_k = integral (-ip)^k / k! Ru dp,
/// k = 0..K; shares one set of quadrature nodes across all k.
CVec taylor_on_line(const ScalarField& field, const RVec& omega, int K,
                    const LaplaceConfig& cfg = {});

std::string sinogram_csv(const std::vector<RadonProfile>& profiles);

}  // namespace pluriloc
