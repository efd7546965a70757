#pragma once

#include <vector>

#include "pluriloc/types.hpp"

namespace pluriloc {

// Dense column-major matrix; the simplex accesses whole columns.
struct ColMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // data[c * rows + r]

    ColMatrix() = default;
    explicit ColMatrix(int r) : rows(r) {}

    double* col(int c) { return data.data() + static_cast<std::size_t>(c) * rows; }
    const double* col(int c) const { return data.data() + static_cast<std::size_t>(c) * rows; }

    void add_col(const double* v) {
        data.insert(data.end(), v, v + rows);
        ++cols;
    }
    void add_col(const RVec& v) { add_col(v.data()); }
};

enum class LPStatus { Optimal, Unbounded, Infeasible, IterationLimit, Singular };

const char* to_string(LPStatus s);

struct SimplexOptions {
    double pivot_tol = 1e-9;
    double feas_tol = 1e-7;
    long max_iterations = 500000;
    int refactor_every = 64;
};

struct StandardLPResult {
    LPStatus status = LPStatus::IterationLimit;
    double objective = 0.0;
    RVec x;            // primal solution, length cols
    RVec multipliers;  // row multipliers pi with B^T pi = cost_B
    long iterations = 0;
};

/// Revised simplex with Bland's rule for  min cost.v  s.t.  M v = rhs, v >= 0.
/// Two phases with artificial variables; explicit dense basis inverse,
/// refactorized periodically.
StandardLPResult simplex_solve_standard(const ColMatrix& M, const RVec& rhs, const RVec& cost,
                                        const SimplexOptions& opt = {});

/// Inequality-form problem with free variables:
///   max objective.x   s.t.  ineq_rows[i].x <= ineq_rhs[i],  eq_rows[e].x == eq_rhs[e].
/// Solved through the dual in standard form; the optimal x is recovered from the
/// dual multipliers. Status is reported for the *primal*: dual infeasibility maps
/// to Unbounded, dual unboundedness to Infeasible.
struct FreeVarLP {
    int nvars = 0;
    std::vector<RVec> ineq_rows;
    RVec ineq_rhs;
    std::vector<RVec> eq_rows;
    RVec eq_rhs;
    RVec objective;
};

struct FreeVarLPResult {
    LPStatus status = LPStatus::IterationLimit;
    double objective_value = 0.0;
    RVec x;
    long iterations = 0;
};

FreeVarLPResult solve_max_free(const FreeVarLP& lp, const SimplexOptions& opt = {});

}  // namespace pluriloc
