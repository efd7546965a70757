#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pluriloc/convex_body.hpp"
#include "pluriloc/cross_norm.hpp"
#include "pluriloc/extremal.hpp"
#include "pluriloc/fields.hpp"
#include "pluriloc/radon.hpp"
#include "pluriloc/types.hpp"

namespace pluriloc {

/// Per-direction support intervals [a, b] and the derived weight
/// sigma(omega) = max(-a, b).
struct DirectionalIntervalData {
    std::vector<RVec> directions;  // real unit vectors
    std::vector<IntervalSupportFn> intervals;

    RVec sigma() const;
    void validate() const;
};

class LocalizeError : public std::runtime_error {
public:
    explicit LocalizeError(const std::string& what) : std::runtime_error(what) {}
};

/// gamma = sigma for the rho = 1 pipeline; sigma = 0 points carry the
/// equality convention of the extremal solver.
WeightedDirectionSet build_sigma(const DirectionalIntervalData& data);

std::vector<RVec> direction_grid_2d(int count);
std::vector<RVec> direction_grid_3d(int count);

/// Half-space bound <x, theta> <= Psi_{E,sigma}(theta) over a direction grid.
/// An unbounded degree anywhere aborts with a capacity-zero suspicion.
ConvexBody localize(const WeightedDirectionSet& E, const std::vector<RVec>& grid,
                    const SolverConfig& cfg, int threads = 1);

/// localize intersected with the data slabs a <= <x, omega> <= b; the result is
/// contained in the unrefined body. Throws LocalizeError when the intersection
/// is empty (inconsistent data). Valid under semicontinuity of a, b and E equal
/// to the closure of its relative interior, which the caller asserts.
ConvexBody localize_refined(const WeightedDirectionSet& E, const DirectionalIntervalData& data,
                            const std::vector<RVec>& grid, const SolverConfig& cfg,
                            int threads = 1);

bool body_contains(const ConvexBody& body, const RVec& x, double slack = 1e-9);

struct HelgasonConfig {
    ProfileGridSpec profile_grid;          // per-direction Radon grid
    double eps_rel = 1e-6;                 // support detection threshold
    int body_grid_count = 256;             // direction grid for the body
    SolverConfig solver;                   // solver for the boundary values
    int support_sample_count = 500;
    unsigned seed = 2026u;
    int threads = 1;

    HelgasonConfig() { solver.phase_count = 48; }  // tighter polygon bracket for body geometry
};

struct ContainmentCheck {
    int checked = 0;
    int inside = 0;
    double min_slack = 0.0;
    bool pass = false;
};

struct HelgasonReport {
    bool trivial_empty = false;  // every profile vanished: no body to build
    DirectionalIntervalData intervals;
    RVec sigma;
    ConvexBody body;
    ConvexBody refined;
    ContainmentCheck containment;          // against the unrefined body
    ContainmentCheck containment_refined;  // against the refined body
    double sigma_shift_tenth = 0.0;  // max |sigma(eps/10) - sigma(eps)|
    double sigma_shift_tenx = 0.0;   // max |sigma(10 eps) - sigma(eps)|
    std::string refined_label =
        "conditional on regularity hypotheses (semicontinuous a,b; E closure of its interior)";
    std::string to_json() const;
};

/// Full pipeline: Radon profiles over E, support detection, sigma weights,
/// localization, refinement, and containment verification on samples of the
/// field's true support.
HelgasonReport helgason_pipeline(const ScalarField& field, const std::vector<RVec>& E_directions,
                                 const HelgasonConfig& cfg = {});

struct IndicatorSupportReport {
    bool vacuous = false;  // zero line transform; nothing to check
    double upper_estimate = 0.0;    // growth along +i omega, compared to b
    double lower_estimate = 0.0;    // growth along -i omega, compared to -a
    bool upper_ok = false;
    bool lower_ok = false;
    bool unreliable = false;
    double tolerance = 0.0;
};

/// Checks the ray growth of the line transform against the detected interval:
/// the +i omega rate must not exceed b, the -i omega rate must not exceed -a.
IndicatorSupportReport indicator_support_check(const ScalarField& field, const RVec& omega,
                                               const IntervalSupportFn& detected,
                                               double abs_tol = 0.15, double t_max = 120.0);

}  // namespace pluriloc
