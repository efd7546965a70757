#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pluriloc/polynomial.hpp"
#include "pluriloc/simplex.hpp"
#include "pluriloc/types.hpp"

namespace pluriloc {

/// Finite sample of a direction set E with weights gamma = sigma^{1/rho}.
/// Points flagged zero_weight carry the equality convention p(omega) = 0.
struct WeightedDirectionSet {
    int dimension = 0;
    std::vector<CVec> points;
    RVec weights;
    std::vector<char> zero_flags;
    bool unit_sphere_points = false;  // when set, |omega_j| = 1 is validated

    std::size_t size() const { return points.size(); }
    void validate() const;
};

/// Produces a sample of E at a requested density; enables adaptive refinement.
using DirectionSampler = std::function<WeightedDirectionSet(int count)>;

struct SolverConfig {
    int max_degree = 8;    // K: degrees 1..K are solved; the sup is reported per degree
    int phase_count = 16;  // m: half-plane discretization of each modulus constraint
    int refine_limit = 2;  // sample-doubling rounds for sampler-based evaluation
    double refine_rel_change = 0.005;
    double pivot_tol = 1e-9;
    double feas_tol = 1e-7;

    void validate() const;
};

enum class DegreeStatus { Optimal, ZeroOptimum, Unbounded, SolverFailure };

struct DegreeSolve {
    int degree = 0;
    DegreeStatus status = DegreeStatus::SolverFailure;
    double value = 0.0;      // v_k = (LP optimum)^{1/k}, outer polygon (upper of the bracket)
    double certified = 0.0;  // v_k * cos(pi/m)^{1/k}, inscribed polygon (sound lower bound)
    long lp_iterations = 0;
};

struct ExtremalEvalResult {
    std::vector<DegreeSolve> per_degree;
    double psi = 0.0;        // max_k v_k
    double certified = 0.0;  // max_k certified_k  (<= psi)
    int best_degree = 0;
    HomogeneousPolynomial extremal;  // inscribed witness at best_degree; |p| <= gamma^k on samples
    int refinement_rounds = 0;
    std::size_t samples_used = 0;
    // finite sampling of E weakens constraints, degree truncation weakens the sup
    std::string bias_note = "upper-biased in sampling, lower-biased in degree truncation";
};

class UnboundedDegreeError : public std::runtime_error {
public:
    UnboundedDegreeError(int degree)
        : std::runtime_error("degree-" + std::to_string(degree) +
                             " problem is unbounded: samples do not determine degree-" +
                             std::to_string(degree) + " homogeneous polynomials"),
          degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

class InfeasibleZeroWeightsError : public std::runtime_error {
public:
    InfeasibleZeroWeightsError()
        : std::runtime_error("zero-weight equality constraints admit no nonzero feasible "
                             "polynomial with positive value at the evaluation point") {}
};

/// Weighted homogeneous extremal function evaluator over a fixed sample of E.
/// Constraint matrices are degree-cached: they depend on (E, cfg) only, so
/// repeated evaluations share them. eval() is const and thread-safe.
class ExtremalSolver {
public:
    ExtremalSolver(WeightedDirectionSet E, SolverConfig cfg);

    ExtremalEvalResult eval(const CVec& zeta) const;
    const WeightedDirectionSet& sample_set() const { return set_; }
    const SolverConfig& config() const { return cfg_; }

    /// Max over samples of |p(omega)| / gamma^k for the witness polynomial;
    /// used to validate witnesses against denser samples of E.
    static double feasibility_factor(const HomogeneousPolynomial& p,
                                     const WeightedDirectionSet& validation);

private:
    struct DegreeProblem {
        ColMatrix columns;  // dual standard form: columns are primal constraint rows
        RVec cost;
        int coeff_count = 0;  // N = monomial_count
        int ineq_cols = 0;
    };

    DegreeSolve solve_degree(int k, const CVec& zeta_hat, double scale_back,
                             RVec* witness_out) const;

    WeightedDirectionSet set_;
    SolverConfig cfg_;
    double gamma_max_ = 1.0;
    std::vector<DegreeProblem> problems_;  // index k-1
};

ExtremalEvalResult psi_eval(const WeightedDirectionSet& E, const CVec& zeta,
                            const SolverConfig& cfg = {});

/// Adaptive variant: doubles the sample density until the reported value moves
/// less than cfg.refine_rel_change or cfg.refine_limit rounds are exhausted.
ExtremalEvalResult psi_eval_refined(const DirectionSampler& sampler, int initial_count,
                                    const CVec& zeta, const SolverConfig& cfg = {});

struct PsiGridEntry {
    bool ok = false;
    ExtremalEvalResult result;
    std::string error;
};

std::vector<PsiGridEntry> psi_grid(const WeightedDirectionSet& E, const std::vector<CVec>& grid,
                                   const SolverConfig& cfg = {}, int threads = 1);

struct CapacityEstimate {
    bool zero_flag = false;
    double value = 0.0;    // 1 / sup of psi over complex unit-sphere samples (Euclidean norm)
    double sup_psi = 0.0;
    int sphere_samples = 0;
    std::string diagnostic;
};

/// Homogeneous capacity estimate; requires gamma == 1. An unbounded degree on
/// any sphere sample is reported as the capacity-zero flag.
CapacityEstimate capacity_homog(const WeightedDirectionSet& E, const SolverConfig& cfg,
                                int sphere_samples, unsigned seed = 2026u);

struct HullMembership {
    bool inside = false;
    double margin = 0.0;  // 1 - psi
    double psi = 0.0;
};

HullMembership hull_member(const WeightedDirectionSet& E, const CVec& z,
                           const SolverConfig& cfg = {});

struct BaranConfig {
    double quad_tol = 1e-10;
    int max_depth = 26;
};

/// Two-dimensional formula: Psi(z1, z2) = |z1| exp(P u(z2/z1)) with
/// u(xi) = log ||(1, xi)|| and P the upper half-plane Poisson integral.
/// The integral is split as u = log sqrt(1+xi^2) + v: the first part has the
/// closed form log |(1, w)|_c, the bounded remainder is integrated adaptively
/// after the tangent substitution xi = x + |Im w| tan(phi).
double baran_psi(const std::function<double(const RVec&)>& norm2d, const CVec& z,
                 const BaranConfig& cfg = {});

// --- built-in direction samplers -------------------------------------------

WeightedDirectionSet sample_circle(int count, double weight = 1.0);
WeightedDirectionSet sample_arc(double from_rad, double to_rad, int count, double weight = 1.0);
/// Fibonacci-lattice sample of the real 2-sphere in C^3.
WeightedDirectionSet sample_real_sphere3(int count, double weight = 1.0);
/// Seeded Box-Muller sample of the complex unit sphere in C^dim.
WeightedDirectionSet sample_complex_sphere(int dim, int count, unsigned seed);
/// Boundary of the sup-norm square in R^2 (counterclockwise), as a subset of C^2.
WeightedDirectionSet sample_square_boundary(int count_per_side, double weight = 1.0);

}  // namespace pluriloc
