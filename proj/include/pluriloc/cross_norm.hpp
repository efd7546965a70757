#pragma once

#include <functional>

#include "pluriloc/types.hpp"

namespace pluriloc {

// zeta = e^{i theta}(a + i b) with a, b real, <a,b> = 0, |b| <= |a|.
struct ABDecomposition {
    double theta = 0.0;
    RVec a;
    RVec b;
};

// Supporting function of the interval [a, b]: t -> a t for t <= 0, b t for t >= 0.
struct IntervalSupportFn {
    double a = 0.0;
    double b = 0.0;
};

struct CrossNormBound {
    double value = 0.0;
    bool certified_infimum = false;  // theta-family search yields an upper bound only
    double theta_at_min = 0.0;
};

/// Cross norm of the Euclidean norm: (|z|^2 + (|z|^4 - |<z,z>|^2)^{1/2})^{1/2}.
/// Equals |a| + |b| of the ab-decomposition; between |z| and sqrt(2)|z|.
double cross_norm_euclidean(const CVec& zeta);

/// theta = arg<z,z>/2 (0 on the isotropic cone), a + ib = e^{-i theta} z.
ABDecomposition ab_decompose(const CVec& zeta);

/// Distance from zeta to C R^n, i.e. |b| of the decomposition.
double dist_to_CRn(const CVec& zeta);

double interval_support(const IntervalSupportFn& H, double t);

/// Upper bound on the cross norm of an arbitrary norm on R^n, minimizing
/// ||Re(e^{-i theta} z)|| + ||Im(e^{-i theta} z)|| over a theta grid with local
/// refinement. This two-term family contains the Euclidean optimum; for other
/// norms the true infimum over all decompositions may be smaller.
CrossNormBound cross_norm_general(const std::function<double(const RVec&)>& norm_fn,
                                  const CVec& zeta, int grid_count = 256,
                                  int refine_steps = 48);

}  // namespace pluriloc
