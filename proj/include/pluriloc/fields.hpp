#pragma once

#include <string>
#include <vector>

#include "pluriloc/types.hpp"

namespace pluriloc {

enum class FieldFamily { Gaussian, SmoothedBall, BumpSum };

/// One radial component h(|x - center|) with amplitude folded into h.
struct FieldComponent {
    RVec center;
    double radius = 1.0;     // support radius (ball/bump) or e-folding width (gaussian)
    double width = 0.1;      // smoothing band of the ball family, ignored otherwise
    double amplitude = 1.0;
};

/// Rapidly decreasing synthetic field on R^n (n = 2 or 3), a sum of radial
/// components. Analytic piecewise structure is exposed (radial breakpoints) so
/// quadratures can split panels where smoothness drops.
class ScalarField {
public:
    static ScalarField gaussian(int dimension, std::vector<FieldComponent> comps);
    static ScalarField smoothed_ball(int dimension, std::vector<FieldComponent> comps);
    static ScalarField bump_sum(int dimension, std::vector<FieldComponent> comps);

    double operator()(const RVec& x) const;

    int dimension() const { return dimension_; }
    FieldFamily family() const { return family_; }
    const std::vector<FieldComponent>& components() const { return comps_; }

    /// |u| < 1e-12 outside the ball of this radius about the origin.
    double effective_radius() const { return r_eff_; }
    /// Per-component radius beyond which that component is below 1e-12.
    double component_reach(std::size_t i) const;
    /// Radii (from the component center) where the radial profile changes
    /// analytic piece; empty for the gaussian family.
    std::vector<double> component_breakpoints(std::size_t i) const;
    /// Radial profile of component i at distance r from its center.
    double component_profile(std::size_t i, double r) const;

    /// Rejection-sampled points of the (numerically) true support: |u| above
    /// 1e-9 of the largest amplitude. Deterministic for a fixed seed.
    std::vector<RVec> support_samples(int count, unsigned seed) const;

    std::string to_json() const;
    static ScalarField from_json(const std::string& text);

private:
    ScalarField(FieldFamily fam, int dimension, std::vector<FieldComponent> comps);

    FieldFamily family_ = FieldFamily::Gaussian;
    int dimension_ = 2;
    std::vector<FieldComponent> comps_;
    double r_eff_ = 0.0;
};

}  // namespace pluriloc
