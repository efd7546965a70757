#include "pluriloc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pluriloc {

const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Unbounded: return "unbounded";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::IterationLimit: return "iteration-limit";
        case LPStatus::Singular: return "singular";
    }
    return "?";
}

namespace {

// Working state of one solve. Columns 0..s-1 are structural, s..s+r-1 artificial.
struct Tableau {
    int r = 0;  // rows
    int s = 0;  // structural columns
    const ColMatrix* M = nullptr;
    RVec rhs;                    // sign-normalized to >= 0
    std::vector<double> binv;    // r x r, row-major
    std::vector<int> basis;      // column index per row
    std::vector<char> in_basis;  // over s + r columns
    std::vector<char> art_left;  // artificial that left may not re-enter

    const double* column(int j, RVec& scratch) const {
        // artificial j >= s is e_{j-s}
        if (j < s) return M->col(j);
        std::fill(scratch.begin(), scratch.end(), 0.0);
        scratch[j - s] = 1.0;
        return scratch.data();
    }
};

// binv <- inverse of current basis matrix by Gauss-Jordan with partial pivoting.
bool refactorize(Tableau& T, double pivot_tol) {
    const int r = T.r;
    std::vector<double> a(static_cast<std::size_t>(r) * r);
    RVec scratch(r);
    for (int c = 0; c < r; ++c) {
        const double* col = T.column(T.basis[c], scratch);
        for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i) * r + c] = col[i];
    }
    std::vector<double>& inv = T.binv;
    std::fill(inv.begin(), inv.end(), 0.0);
    for (int i = 0; i < r; ++i) inv[static_cast<std::size_t>(i) * r + i] = 1.0;
    for (int c = 0; c < r; ++c) {
        int piv = c;
        double best = std::abs(a[static_cast<std::size_t>(c) * r + c]);
        for (int i = c + 1; i < r; ++i) {
            const double v = std::abs(a[static_cast<std::size_t>(i) * r + c]);
            if (v > best) { best = v; piv = i; }
        }
        if (best < pivot_tol) return false;
        if (piv != c) {
            for (int j = 0; j < r; ++j) {
                std::swap(a[static_cast<std::size_t>(piv) * r + j], a[static_cast<std::size_t>(c) * r + j]);
                std::swap(inv[static_cast<std::size_t>(piv) * r + j], inv[static_cast<std::size_t>(c) * r + j]);
            }
        }
        const double d = a[static_cast<std::size_t>(c) * r + c];
        for (int j = 0; j < r; ++j) {
            a[static_cast<std::size_t>(c) * r + j] /= d;
            inv[static_cast<std::size_t>(c) * r + j] /= d;
        }
        for (int i = 0; i < r; ++i) {
            if (i == c) continue;
            const double m = a[static_cast<std::size_t>(i) * r + c];
            if (m == 0.0) continue;
            for (int j = 0; j < r; ++j) {
                a[static_cast<std::size_t>(i) * r + j] -= m * a[static_cast<std::size_t>(c) * r + j];
                inv[static_cast<std::size_t>(i) * r + j] -= m * inv[static_cast<std::size_t>(c) * r + j];
            }
        }
    }
    return true;
}

void apply_binv(const Tableau& T, const double* v, RVec& out) {
    const int r = T.r;
    for (int i = 0; i < r; ++i) {
        double s = 0.0;
        const double* row = T.binv.data() + static_cast<std::size_t>(i) * r;
        for (int k = 0; k < r; ++k) s += row[k] * v[k];
        out[i] = s;
    }
}

void multipliers_for(const Tableau& T, const RVec& cost_ext, RVec& pi) {
    // pi = binv^T cost_B
    const int r = T.r;
    std::fill(pi.begin(), pi.end(), 0.0);
    for (int k = 0; k < r; ++k) {
        const double cb = cost_ext[T.basis[k]];
        if (cb == 0.0) continue;
        const double* row = T.binv.data() + static_cast<std::size_t>(k) * r;
        for (int i = 0; i < r; ++i) pi[i] += cb * row[i];
    }
}

// One simplex phase: min cost_ext over allowed columns. Returns status.
LPStatus run_phase(Tableau& T, const RVec& cost_ext, bool allow_artificial_entering,
                   const SimplexOptions& opt, long& iterations) {
    const int r = T.r;
    RVec pi(r), xb(r), u(r), scratch(r);
    int since_refactor = 0;

    for (;; ++iterations) {
        if (iterations > opt.max_iterations) return LPStatus::IterationLimit;
        if (++since_refactor >= opt.refactor_every) {
            if (!refactorize(T, opt.pivot_tol)) return LPStatus::Singular;
            since_refactor = 0;
        }
        multipliers_for(T, cost_ext, pi);

        // Bland: first structural column with negative reduced cost
        int entering = -1;
        const int total = T.s + (allow_artificial_entering ? T.r : 0);
        for (int j = 0; j < total; ++j) {
            if (T.in_basis[j]) continue;
            if (j >= T.s && T.art_left[j - T.s]) continue;
            const double* col = T.column(j, scratch);
            double rc = cost_ext[j];
            for (int i = 0; i < r; ++i) rc -= pi[i] * col[i];
            if (rc < -opt.pivot_tol) { entering = j; break; }
        }
        if (entering < 0) return LPStatus::Optimal;

        const double* col = T.column(entering, scratch);
        apply_binv(T, col, u);
        apply_binv(T, T.rhs.data(), xb);

        // ratio test, Bland tie-break on smallest basis column index
        int leave_pos = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < r; ++i) {
            if (u[i] > opt.pivot_tol) {
                const double ratio = std::max(xb[i], 0.0) / u[i];
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 &&
                     (leave_pos < 0 || T.basis[i] < T.basis[leave_pos]))) {
                    best_ratio = ratio;
                    leave_pos = i;
                }
            }
        }
        if (leave_pos < 0) return LPStatus::Unbounded;

        // basis exchange + rank-1 inverse update
        const int leaving = T.basis[leave_pos];
        T.in_basis[leaving] = 0;
        if (leaving >= T.s) T.art_left[leaving - T.s] = 1;
        T.in_basis[entering] = 1;
        T.basis[leave_pos] = entering;

        const double piv = u[leave_pos];
        double* prow = T.binv.data() + static_cast<std::size_t>(leave_pos) * r;
        for (int j = 0; j < r; ++j) prow[j] /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == leave_pos) continue;
            const double m = u[i];
            if (m == 0.0) continue;
            double* row = T.binv.data() + static_cast<std::size_t>(i) * r;
            for (int j = 0; j < r; ++j) row[j] -= m * prow[j];
        }
    }
}

}  // namespace

StandardLPResult simplex_solve_standard(const ColMatrix& M, const RVec& rhs, const RVec& cost,
                                        const SimplexOptions& opt) {
    const int r = M.rows;
    const int s = M.cols;
    if (static_cast<int>(rhs.size()) != r || static_cast<int>(cost.size()) != s)
        throw std::invalid_argument("simplex_solve_standard: shape mismatch");

    StandardLPResult res;
    if (r == 0) {  // no constraints: optimum 0 at v = 0 (cost >= 0 not required; v=0 always optimal only if cost >= 0)
        res.status = LPStatus::Optimal;
        res.x.assign(s, 0.0);
        for (int j = 0; j < s; ++j)
            if (cost[j] < 0.0) { res.status = LPStatus::Unbounded; break; }
        return res;
    }

    // sign-normalize rows so rhs >= 0 (track flips for the returned multipliers)
    ColMatrix Mn(r);
    Mn.cols = 0;
    Mn.data.reserve(M.data.size());
    std::vector<double> row_sign(r, 1.0);
    for (int i = 0; i < r; ++i)
        if (rhs[i] < 0.0) row_sign[i] = -1.0;
    RVec d(r);
    for (int i = 0; i < r; ++i) d[i] = rhs[i] * row_sign[i];
    RVec tmp(r);
    for (int j = 0; j < s; ++j) {
        const double* cj = M.col(j);
        for (int i = 0; i < r; ++i) tmp[i] = cj[i] * row_sign[i];
        Mn.add_col(tmp);
    }

    Tableau T;
    T.r = r;
    T.s = s;
    T.M = &Mn;
    T.rhs = d;
    T.binv.assign(static_cast<std::size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) T.binv[static_cast<std::size_t>(i) * r + i] = 1.0;
    T.basis.resize(r);
    for (int i = 0; i < r; ++i) T.basis[i] = s + i;
    T.in_basis.assign(s + r, 0);
    for (int i = 0; i < r; ++i) T.in_basis[s + i] = 1;
    T.art_left.assign(r, 0);

    // phase 1: minimize sum of artificials
    RVec cost1(s + r, 0.0);
    for (int i = 0; i < r; ++i) cost1[s + i] = 1.0;
    long iterations = 0;
    LPStatus st = run_phase(T, cost1, false, opt, iterations);
    res.iterations = iterations;
    if (st == LPStatus::Unbounded) st = LPStatus::Singular;  // phase-1 objective is bounded below by 0
    if (st != LPStatus::Optimal) { res.status = st; return res; }

    RVec xb(r);
    apply_binv(T, T.rhs.data(), xb);
    double art_sum = 0.0;
    for (int i = 0; i < r; ++i)
        if (T.basis[i] >= s) art_sum += std::max(xb[i], 0.0);
    if (art_sum > opt.feas_tol) {
        res.status = LPStatus::Infeasible;
        return res;
    }

    // phase 2 with real costs; basic artificials stay pinned at zero
    RVec cost2(s + r, 0.0);
    for (int j = 0; j < s; ++j) cost2[j] = cost[j];
    st = run_phase(T, cost2, false, opt, iterations);
    res.iterations = iterations;
    res.status = st;
    if (st != LPStatus::Optimal) return res;

    apply_binv(T, T.rhs.data(), xb);
    res.x.assign(s, 0.0);
    double obj = 0.0;
    for (int i = 0; i < r; ++i) {
        if (T.basis[i] < s) {
            res.x[T.basis[i]] = xb[i];
            obj += cost[T.basis[i]] * xb[i];
        }
    }
    res.objective = obj;
    RVec pi(r);
    multipliers_for(T, cost2, pi);
    res.multipliers.resize(r);
    for (int i = 0; i < r; ++i) res.multipliers[i] = pi[i] * row_sign[i];
    return res;
}

FreeVarLPResult solve_max_free(const FreeVarLP& lp, const SimplexOptions& opt) {
    const int n = lp.nvars;
    if (static_cast<int>(lp.objective.size()) != n)
        throw std::invalid_argument("solve_max_free: objective size mismatch");
    if (lp.ineq_rows.size() != lp.ineq_rhs.size() || lp.eq_rows.size() != lp.eq_rhs.size())
        throw std::invalid_argument("solve_max_free: row/rhs count mismatch");

    // dual:  min b.y + g.w  s.t.  A^T y + G^T w = c,  y >= 0,  w free (split)
    ColMatrix M(n);
    RVec cost;
    cost.reserve(lp.ineq_rows.size() + 2 * lp.eq_rows.size());
    for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i) {
        M.add_col(lp.ineq_rows[i]);
        cost.push_back(lp.ineq_rhs[i]);
    }
    RVec neg(n);
    for (std::size_t e = 0; e < lp.eq_rows.size(); ++e) {
        M.add_col(lp.eq_rows[e]);
        cost.push_back(lp.eq_rhs[e]);
        for (int j = 0; j < n; ++j) neg[j] = -lp.eq_rows[e][j];
        M.add_col(neg);
        cost.push_back(-lp.eq_rhs[e]);
    }

    const StandardLPResult dual = simplex_solve_standard(M, lp.objective, cost, opt);
    FreeVarLPResult res;
    res.iterations = dual.iterations;
    switch (dual.status) {
        case LPStatus::Optimal:
            res.status = LPStatus::Optimal;
            res.objective_value = dual.objective;
            res.x = dual.multipliers;
            break;
        case LPStatus::Infeasible: res.status = LPStatus::Unbounded; break;
        case LPStatus::Unbounded: res.status = LPStatus::Infeasible; break;
        default: res.status = dual.status; break;
    }
    return res;
}

}  // namespace pluriloc
