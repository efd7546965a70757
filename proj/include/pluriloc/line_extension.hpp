#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pluriloc/extremal.hpp"
#include "pluriloc/growth.hpp"
#include "pluriloc/polynomial.hpp"
#include "pluriloc/types.hpp"

namespace pluriloc {

/// Per-direction Taylor data: coefficient c_k(omega) of the restriction to the
/// line through omega, for k = 0..K, plus the claimed growth (rho, sigma) per line.
struct LineSeriesData {
    int dimension = 0;
    std::vector<CVec> directions;
    std::vector<CVec> coefficients;  // rectangular: same K for every line
    double rho = 1.0;
    RVec sigma;

    int max_degree() const {
        return coefficients.empty() ? -1 : static_cast<int>(coefficients[0].size()) - 1;
    }
    void validate() const;

    std::string to_json() const;
    static LineSeriesData from_json(const std::string& text);
    /// CSV rows: direction coordinates interleaved re/im, then c_0..c_K as re/im
    /// pairs. sigma and rho are not part of the CSV and must be supplied.
    std::string to_csv() const;
    static LineSeriesData from_csv(const std::string& text, int dimension, double rho,
                                   const RVec& sigma);
};

class IncompatibleDataError : public std::runtime_error {
public:
    IncompatibleDataError(int degree, double residual, double tol)
        : std::runtime_error("no degree-" + std::to_string(degree) +
                             " homogeneous polynomial matches the line data (residual " +
                             std::to_string(residual) + " > tol " + std::to_string(tol) + ")"),
          degree_(degree), residual_(residual) {}
    int degree() const { return degree_; }
    double residual() const { return residual_; }

private:
    int degree_;
    double residual_;
};

struct RecoveryResult {
    HomogeneousPolynomial polynomial;
    double residual = 0.0;  // max equation error relative to the data scale
    bool rank_deficient = false;
    int rank = 0;
};

/// Least-squares fit of a degree-k homogeneous polynomial to samples
/// P_k(omega_j) = c_j; minimum-norm solution with a flag when the samples do
/// not determine the polynomial. Residual above tol throws IncompatibleDataError.
RecoveryResult recover_homogeneous(int degree, const std::vector<CVec>& directions,
                                   const CVec& values, bool scaled_basis = true,
                                   double tol = 1e-8);

struct DegreeBoundCheck {
    int degree = 0;
    double max_poly = 0.0;   // max |P_k| over probes
    double min_margin = 0.0; // min over probes of (bound - |P_k|) / bound
    bool pass = false;
};

struct TruncatedEntireExtension {
    int dimension = 0;
    double rho = 1.0;
    std::vector<HomogeneousPolynomial> polynomials;  // P_0..P_K
    RVec residuals;
    std::vector<char> rank_flags;
    std::vector<DegreeBoundCheck> bound_checks;  // empty unless probes were given

    Complex eval(const CVec& zeta) const;
};

struct ExtendOptions {
    double tol = 1e-8;        // compatibility tolerance (relative)
    bool scaled_basis = true;
    double growth_C = 1.0;    // constant of the claimed per-line growth bound
    std::vector<CVec> probes; // where the per-degree coefficient bound is checked
    SolverConfig psi_cfg;
};

/// Recovers P_k for each k, assembles the truncated extension, and (when probe
/// points are supplied) checks |P_k(zeta)| <= C (e rho / k)^{k/rho} Psi(zeta)^k
/// with the weight gamma = sigma^{1/rho} built from the claimed line types.
TruncatedEntireExtension extend(const LineSeriesData& data, const ExtendOptions& opt = {});

Complex eval_extension(const TruncatedEntireExtension& ext, const CVec& zeta);

struct EvalWithTail {
    Complex value;
    double tail_bound = 0.0;
    bool tail_available = false;
};

/// Eval plus a truncation tail bound C sum_{k>K} (e rho/k)^{k/rho} psi^k, using
/// a caller-supplied value of the weighted extremal function at zeta.
EvalWithTail eval_extension_with_tail(const TruncatedEntireExtension& ext, const CVec& zeta,
                                      double growth_C, double psi_at_zeta);

struct RayTypeResult {
    CVec ray;
    IndicatorEstimate estimate;
};

struct TypeBoundReport {
    double sigma_m = 0.0;       // max claimed line type
    double bound = 0.0;         // sqrt(2) sigma_m
    double max_observed = 0.0;  // over reliable rays
    bool pass = false;
    bool any_unreliable = false;
    std::vector<RayTypeResult> rays;
};

/// Exponential-type check (rho = 1, directions on the real sphere): estimates
/// the growth rate of the truncated extension along probe rays and compares
/// against sqrt(2) sigma_m plus tolerance.
TypeBoundReport type_bound_check(const TruncatedEntireExtension& ext, const LineSeriesData& data,
                                 const std::vector<CVec>& probe_rays, double rel_tol = 0.03);

}  // namespace pluriloc
