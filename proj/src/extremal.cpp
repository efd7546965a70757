#include "pluriloc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pluriloc/cross_norm.hpp"
#include "pluriloc/parallel.hpp"
#include "pluriloc/quadrature.hpp"

namespace pluriloc {

void WeightedDirectionSet::validate() const {
    if (dimension < 1) throw std::invalid_argument("direction set: dimension >= 1 required");
    if (points.empty()) throw std::invalid_argument("direction set: at least one point required");
    if (weights.size() != points.size() ||
        (!zero_flags.empty() && zero_flags.size() != points.size()))
        throw std::invalid_argument("direction set: field lengths disagree");
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (static_cast<int>(points[j].size()) != dimension)
            throw std::invalid_argument("direction set: point dimension mismatch");
        if (weights[j] < 0.0) throw std::invalid_argument("direction set: negative weight");
        const bool flagged = !zero_flags.empty() && zero_flags[j];
        if (!flagged && weights[j] <= 0.0)
            throw std::invalid_argument("direction set: non-flagged weight must be positive");
        if (unit_sphere_points && std::abs(euclid_norm(points[j]) - 1.0) > 1e-12)
            throw std::invalid_argument("direction set: point not on the unit sphere");
    }
}

void SolverConfig::validate() const {
    if (max_degree < 1) throw std::invalid_argument("solver config: max_degree >= 1");
    if (phase_count < 8) throw std::invalid_argument("solver config: phase_count >= 8");
    if (pivot_tol <= 0.0 || feas_tol <= 0.0)
        throw std::invalid_argument("solver config: tolerances must be positive");
}

namespace {

bool is_flagged(const WeightedDirectionSet& E, std::size_t j) {
    return !E.zero_flags.empty() && E.zero_flags[j];
}

}  // namespace

ExtremalSolver::ExtremalSolver(WeightedDirectionSet E, SolverConfig cfg)
    : set_(std::move(E)), cfg_(cfg) {
    set_.validate();
    cfg_.validate();

    gamma_max_ = 0.0;
    for (std::size_t j = 0; j < set_.size(); ++j)
        if (!is_flagged(set_, j)) gamma_max_ = std::max(gamma_max_, set_.weights[j]);
    if (gamma_max_ <= 0.0) gamma_max_ = 1.0;

    const int m = cfg_.phase_count;
    problems_.resize(cfg_.max_degree);
    for (int k = 1; k <= cfg_.max_degree; ++k) {
        DegreeProblem& prob = problems_[k - 1];
        const int N = static_cast<int>(monomial_count(set_.dimension, k));
        const int r = 2 * N;
        prob.coeff_count = N;
        prob.columns = ColMatrix(r);

        // Variables of the primal are (Re c_alpha, Im c_alpha) in the
        // sqrt-multinomial basis. Each column below is one primal constraint row;
        // the standard-form solve is the dual, so its multipliers are the
        // optimal coefficients.
        RVec col(r);
        for (std::size_t j = 0; j < set_.size(); ++j) {
            const CVec w = monomial_vector(set_.points[j], k, true);
            if (!is_flagged(set_, j)) {
                const double rhs = std::pow(set_.weights[j] / gamma_max_, k);
                for (int l = 0; l < m; ++l) {
                    const Complex phase = std::polar(1.0, 2.0 * M_PI * l / m);
                    for (int a = 0; a < N; ++a) {
                        const Complex e = phase * w[a];
                        col[a] = e.real();
                        col[N + a] = -e.imag();
                    }
                    prob.columns.add_col(col);
                    prob.cost.push_back(rhs);
                }
            }
        }
        prob.ineq_cols = prob.columns.cols;
        for (std::size_t j = 0; j < set_.size(); ++j) {
            if (!is_flagged(set_, j)) continue;
            const CVec w = monomial_vector(set_.points[j], k, true);
            // Re p(omega) = 0 and Im p(omega) = 0, each split into +/- columns
            for (int part = 0; part < 2; ++part) {
                for (int a = 0; a < N; ++a) {
                    const Complex e = w[a];
                    col[a] = part == 0 ? e.real() : e.imag();
                    col[N + a] = part == 0 ? -e.imag() : e.real();
                }
                prob.columns.add_col(col);
                prob.cost.push_back(0.0);
                for (int a = 0; a < r; ++a) col[a] = -col[a];
                prob.columns.add_col(col);
                prob.cost.push_back(0.0);
            }
        }
    }
}

DegreeSolve ExtremalSolver::solve_degree(int k, const CVec& zeta_hat, double scale_back,
                                         RVec* witness_out) const {
    const DegreeProblem& prob = problems_[k - 1];
    const int N = prob.coeff_count;
    const CVec zvec = monomial_vector(zeta_hat, k, true);
    RVec rhs(2 * N);
    for (int a = 0; a < N; ++a) {
        rhs[a] = zvec[a].real();
        rhs[N + a] = -zvec[a].imag();
    }

    SimplexOptions sopt;
    sopt.pivot_tol = cfg_.pivot_tol;
    sopt.feas_tol = cfg_.feas_tol;
    const StandardLPResult lp = simplex_solve_standard(prob.columns, rhs, prob.cost, sopt);

    DegreeSolve out;
    out.degree = k;
    out.lp_iterations = lp.iterations;
    switch (lp.status) {
        case LPStatus::Infeasible:  // dual infeasible <=> primal unbounded
            out.status = DegreeStatus::Unbounded;
            return out;
        case LPStatus::Optimal: break;
        default:
            out.status = DegreeStatus::SolverFailure;
            return out;
    }

    const double opt = std::max(lp.objective, 0.0);
    if (opt <= 1e-13) {
        out.status = DegreeStatus::ZeroOptimum;
        return out;
    }
    const double shrink = std::cos(M_PI / cfg_.phase_count);
    out.status = DegreeStatus::Optimal;
    out.value = scale_back * std::pow(opt, 1.0 / k);
    out.certified = out.value * std::pow(shrink, 1.0 / k);
    if (witness_out) {
        // inscribed witness in original weights: gamma_max^k cos(pi/m) p'
        witness_out->assign(lp.multipliers.begin(), lp.multipliers.end());
        const double factor = std::pow(gamma_max_, k) * shrink;
        for (double& v : *witness_out) v *= factor;
    }
    return out;
}

ExtremalEvalResult ExtremalSolver::eval(const CVec& zeta) const {
    if (static_cast<int>(zeta.size()) != set_.dimension)
        throw std::invalid_argument("psi_eval: point dimension mismatch");

    ExtremalEvalResult res;
    res.samples_used = set_.size();
    res.extremal = HomogeneousPolynomial(set_.dimension, 0);
    if (is_zero_point(zeta)) return res;  // Psi(0) = 0 by homogeneity

    const double zn = euclid_norm(zeta);
    CVec zeta_hat = zeta;
    for (auto& c : zeta_hat) c /= zn;

    res.per_degree.reserve(cfg_.max_degree);
    int best_k = 0;
    for (int k = 1; k <= cfg_.max_degree; ++k) {
        DegreeSolve ds = solve_degree(k, zeta_hat, gamma_max_ * zn, nullptr);
        if (ds.status == DegreeStatus::Unbounded) throw UnboundedDegreeError(k);
        res.per_degree.push_back(ds);
        if (ds.status == DegreeStatus::Optimal && ds.value > res.psi) {
            res.psi = ds.value;
            best_k = k;
        }
        res.certified = std::max(res.certified, ds.certified);
    }

    if (best_k == 0) {
        bool any_failure = true;
        for (const auto& ds : res.per_degree)
            if (ds.status == DegreeStatus::ZeroOptimum) any_failure = false;
        if (any_failure)
            throw std::runtime_error("psi_eval: LP solver failed at every degree");
        for (std::size_t j = 0; j < set_.size(); ++j)
            if (is_flagged(set_, j)) throw InfeasibleZeroWeightsError();
        return res;  // genuinely zero without zero-weight constraints (degenerate input)
    }

    res.best_degree = best_k;
    RVec witness;
    solve_degree(best_k, zeta_hat, gamma_max_ * zn, &witness);
    const int N = static_cast<int>(monomial_count(set_.dimension, best_k));
    const auto indices = enumerate_multiindices(set_.dimension, best_k);
    CVec coeffs(N);
    for (int a = 0; a < N; ++a) {
        // back from the sqrt-multinomial basis to monomial coefficients
        coeffs[a] = Complex(witness[a], witness[N + a]) * std::sqrt(multinomial(indices[a]));
    }
    res.extremal = HomogeneousPolynomial(set_.dimension, best_k, std::move(coeffs));
    return res;
}

double ExtremalSolver::feasibility_factor(const HomogeneousPolynomial& p,
                                          const WeightedDirectionSet& validation) {
    double worst = 0.0;
    for (std::size_t j = 0; j < validation.size(); ++j) {
        const double gk = std::pow(validation.weights[j], p.degree());
        const double v = std::abs(p.eval(validation.points[j]));
        if (is_flagged(validation, j)) {
            worst = std::max(worst, v);  // absolute violation of p(omega) = 0
        } else if (gk > 0.0) {
            worst = std::max(worst, v / gk);
        }
    }
    return worst;
}

ExtremalEvalResult psi_eval(const WeightedDirectionSet& E, const CVec& zeta,
                            const SolverConfig& cfg) {
    return ExtremalSolver(E, cfg).eval(zeta);
}

ExtremalEvalResult psi_eval_refined(const DirectionSampler& sampler, int initial_count,
                                    const CVec& zeta, const SolverConfig& cfg) {
    int count = initial_count;
    ExtremalEvalResult current = ExtremalSolver(sampler(count), cfg).eval(zeta);
    int rounds = 0;
    for (; rounds < cfg.refine_limit; ++rounds) {
        count *= 2;
        ExtremalEvalResult denser = ExtremalSolver(sampler(count), cfg).eval(zeta);
        const double ref = std::max(std::abs(current.psi), 1e-300);
        const bool settled = std::abs(denser.psi - current.psi) / ref < cfg.refine_rel_change;
        current = std::move(denser);
        if (settled) { ++rounds; break; }
    }
    current.refinement_rounds = rounds;
    return current;
}

std::vector<PsiGridEntry> psi_grid(const WeightedDirectionSet& E, const std::vector<CVec>& grid,
                                   const SolverConfig& cfg, int threads) {
    std::vector<PsiGridEntry> out(grid.size());
    if (grid.empty()) return out;
    const ExtremalSolver solver(E, cfg);
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        try {
            out[i].result = solver.eval(grid[i]);
            out[i].ok = true;
        } catch (const std::exception& e) {
            out[i].ok = false;
            out[i].error = e.what();
        }
    });
    return out;
}

CapacityEstimate capacity_homog(const WeightedDirectionSet& E, const SolverConfig& cfg,
                                int sphere_samples, unsigned seed) {
    for (std::size_t j = 0; j < E.size(); ++j) {
        if (std::abs(E.weights[j] - 1.0) > 1e-12 || is_flagged(E, j))
            throw std::invalid_argument("capacity_homog: requires gamma == 1");
    }
    CapacityEstimate est;
    est.sphere_samples = sphere_samples;
    const ExtremalSolver solver(E, cfg);
    const WeightedDirectionSet sphere = sample_complex_sphere(E.dimension, sphere_samples, seed);
    for (const auto& zeta : sphere.points) {
        try {
            est.sup_psi = std::max(est.sup_psi, solver.eval(zeta).psi);
        } catch (const UnboundedDegreeError& e) {
            est.zero_flag = true;
            est.diagnostic = e.what();
            return est;
        } catch (const std::exception& e) {
            est.zero_flag = true;
            est.diagnostic = e.what();
            return est;
        }
    }
    if (est.sup_psi <= 0.0) {
        est.zero_flag = true;
        est.diagnostic = "psi vanished on every sphere sample";
        return est;
    }
    est.value = 1.0 / est.sup_psi;
    return est;
}

HullMembership hull_member(const WeightedDirectionSet& E, const CVec& z,
                           const SolverConfig& cfg) {
    const ExtremalEvalResult r = psi_eval(E, z, cfg);
    return HullMembership{r.psi < 1.0, 1.0 - r.psi, r.psi};
}

double baran_psi(const std::function<double(const RVec&)>& norm2d, const CVec& z,
                 const BaranConfig& cfg) {
    if (z.size() != 2) throw std::invalid_argument("baran_psi: point must be in C^2");
    auto nrm = [&](double x, double y) {
        const double v = norm2d(RVec{x, y});
        if (!std::isfinite(v)) throw std::runtime_error("baran_psi: non-finite norm value");
        return v;
    };
    const double z1 = std::abs(z[0]);
    if (z1 == 0.0) return std::abs(z[1]) * nrm(0.0, 1.0);  // continuity extension

    const Complex w = z[1] / z[0];
    const double x = w.real();
    const double y = std::abs(w.imag());
    if (y == 0.0) return z1 * nrm(1.0, x);  // boundary value of the Poisson integral

    // u = log sqrt(1 + xi^2) + v; P of the first part is log |(1, w)|_c
    const double closed_part = std::log(cross_norm_euclidean(CVec{Complex(1.0), w}));
    auto v_of = [&](double xi) {
        const double axi = std::abs(xi);
        if (axi <= 1.0) return std::log(nrm(1.0, xi) / std::sqrt(1.0 + xi * xi));
        // scaled form, stable for large |xi|
        const double inv = 1.0 / axi;
        return std::log(nrm(inv, xi > 0 ? 1.0 : -1.0) / std::sqrt(inv * inv + 1.0));
    };
    auto integrand = [&](double phi) {
        const double t = std::tan(phi);
        if (!std::isfinite(t) || std::abs(t) > 1e150)
            return std::log(nrm(0.0, phi > 0 ? 1.0 : -1.0));
        return v_of(x + y * t);
    };
    const AdaptiveResult quad =
        adaptive_integrate(integrand, -M_PI / 2.0, M_PI / 2.0, cfg.quad_tol, cfg.max_depth);
    if (!quad.converged)
        throw std::runtime_error("baran_psi: Poisson-integral quadrature did not converge");
    return z1 * std::exp(closed_part + quad.value / M_PI);
}

WeightedDirectionSet sample_circle(int count, double weight) {
    if (count < 1) throw std::invalid_argument("sample_circle: count >= 1");
    WeightedDirectionSet E;
    E.dimension = 2;
    E.unit_sphere_points = true;
    for (int i = 0; i < count; ++i) {
        const double phi = 2.0 * M_PI * i / count;
        E.points.push_back(CVec{Complex(std::cos(phi)), Complex(std::sin(phi))});
        E.weights.push_back(weight);
    }
    return E;
}

WeightedDirectionSet sample_arc(double from_rad, double to_rad, int count, double weight) {
    if (count < 2) throw std::invalid_argument("sample_arc: count >= 2");
    WeightedDirectionSet E;
    E.dimension = 2;
    E.unit_sphere_points = true;
    for (int i = 0; i < count; ++i) {
        const double phi = from_rad + (to_rad - from_rad) * i / (count - 1);
        E.points.push_back(CVec{Complex(std::cos(phi)), Complex(std::sin(phi))});
        E.weights.push_back(weight);
    }
    return E;
}

WeightedDirectionSet sample_real_sphere3(int count, double weight) {
    if (count < 2) throw std::invalid_argument("sample_real_sphere3: count >= 2");
    WeightedDirectionSet E;
    E.dimension = 3;
    E.unit_sphere_points = true;
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double zc = 1.0 - 2.0 * (i + 0.5) / count;
        const double rad = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        const double phi = golden * i;
        E.points.push_back(
            CVec{Complex(rad * std::cos(phi)), Complex(rad * std::sin(phi)), Complex(zc)});
        E.weights.push_back(weight);
    }
    return E;
}

WeightedDirectionSet sample_complex_sphere(int dim, int count, unsigned seed) {
    if (dim < 1 || count < 1) throw std::invalid_argument("sample_complex_sphere: bad arguments");
    WeightedDirectionSet E;
    E.dimension = dim;
    E.unit_sphere_points = true;
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        return (rng() >> 11) * 0x1.0p-53;  // [0, 1)
    };
    auto gaussian_pair = [&](double& g1, double& g2) {
        const double u1 = std::max(uniform01(), 1e-300);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        g1 = r * std::cos(2.0 * M_PI * u2);
        g2 = r * std::sin(2.0 * M_PI * u2);
    };
    for (int i = 0; i < count; ++i) {
        CVec zeta(dim);
        for (int j = 0; j < dim; ++j) {
            double g1, g2;
            gaussian_pair(g1, g2);
            zeta[j] = Complex(g1, g2);
        }
        const double n = euclid_norm(zeta);
        if (n < 1e-12) { --i; continue; }
        for (auto& c : zeta) c /= n;
        E.points.push_back(std::move(zeta));
        E.weights.push_back(1.0);
    }
    return E;
}

WeightedDirectionSet sample_square_boundary(int count_per_side, double weight) {
    if (count_per_side < 1) throw std::invalid_argument("sample_square_boundary: count >= 1");
    WeightedDirectionSet E;
    E.dimension = 2;
    for (int i = 0; i < count_per_side; ++i) {
        const double t = -1.0 + 2.0 * i / count_per_side;
        E.points.push_back(CVec{Complex(t), Complex(-1.0)});
        E.points.push_back(CVec{Complex(1.0), Complex(t)});
        E.points.push_back(CVec{Complex(-t), Complex(1.0)});
        E.points.push_back(CVec{Complex(-1.0), Complex(-t)});
        for (int c = 0; c < 4; ++c) E.weights.push_back(weight);
    }
    return E;
}

}  // namespace pluriloc
