#include "pluriloc/localize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "pluriloc/growth.hpp"
#include "pluriloc/parallel.hpp"

namespace pluriloc {

RVec DirectionalIntervalData::sigma() const {
    RVec s(intervals.size());
    for (std::size_t i = 0; i < intervals.size(); ++i)
        s[i] = std::max(-intervals[i].a, intervals[i].b);
    return s;
}

void DirectionalIntervalData::validate() const {
    if (directions.empty()) throw std::invalid_argument("interval data: at least one direction");
    if (directions.size() != intervals.size())
        throw std::invalid_argument("interval data: field lengths disagree");
    for (std::size_t i = 0; i < directions.size(); ++i) {
        if (std::abs(euclid_norm(directions[i]) - 1.0) > 1e-9)
            throw std::invalid_argument("interval data: directions must be unit vectors");
        if (intervals[i].a > intervals[i].b)
            throw std::invalid_argument("interval data: a > b");
        if (!std::isfinite(intervals[i].a) || !std::isfinite(intervals[i].b))
            throw std::invalid_argument("interval data: sigma must be bounded");
    }
}

WeightedDirectionSet build_sigma(const DirectionalIntervalData& data) {
    data.validate();
    WeightedDirectionSet E;
    E.dimension = static_cast<int>(data.directions[0].size());
    E.unit_sphere_points = true;
    const RVec s = data.sigma();
    E.weights = s;
    E.zero_flags.assign(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        E.points.push_back(complexify(data.directions[i]));
        if (s[i] == 0.0) E.zero_flags[i] = 1;
    }
    return E;
}

std::vector<RVec> direction_grid_2d(int count) {
    std::vector<RVec> grid;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double phi = 2.0 * M_PI * i / count;
        grid.push_back(RVec{std::cos(phi), std::sin(phi)});
    }
    return grid;
}

std::vector<RVec> direction_grid_3d(int count) {
    std::vector<RVec> grid;
    grid.reserve(count);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        grid.push_back(RVec{r * std::cos(golden * i), r * std::sin(golden * i), z});
    }
    return grid;
}

ConvexBody localize(const WeightedDirectionSet& E, const std::vector<RVec>& grid,
                    const SolverConfig& cfg, int threads) {
    if (grid.empty()) throw std::invalid_argument("localize: empty direction grid");
    const ExtremalSolver solver(E, cfg);
    std::vector<HalfSpace> hs(grid.size());
    std::string failure;
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        try {
            const double h = solver.eval(complexify(grid[i])).psi;
            hs[i] = HalfSpace{grid[i], h};
        } catch (const UnboundedDegreeError& e) {
            hs[i] = HalfSpace{grid[i], 0.0};
            failure = std::string("capacity-zero suspicion: ") + e.what();
        }
    });
    if (!failure.empty()) throw LocalizeError(failure);
    return make_body(E.dimension, std::move(hs));
}

ConvexBody localize_refined(const WeightedDirectionSet& E, const DirectionalIntervalData& data,
                            const std::vector<RVec>& grid, const SolverConfig& cfg,
                            int threads) {
    ConvexBody base = localize(E, grid, cfg, threads);
    std::vector<HalfSpace> hs = base.halfspaces;
    for (std::size_t i = 0; i < data.directions.size(); ++i) {
        hs.push_back(HalfSpace{data.directions[i], data.intervals[i].b});
        RVec neg = data.directions[i];
        for (auto& c : neg) c = -c;
        hs.push_back(HalfSpace{std::move(neg), -data.intervals[i].a});
    }
    try {
        return make_body(base.dimension, std::move(hs));
    } catch (const std::runtime_error& e) {
        throw LocalizeError(std::string("refined intersection infeasible: ") + e.what());
    }
}

bool body_contains(const ConvexBody& body, const RVec& x, double slack) {
    return body.contains(x, slack);
}

namespace {

ContainmentCheck check_containment(const ConvexBody& body, const std::vector<RVec>& pts) {
    ContainmentCheck c;
    c.checked = static_cast<int>(pts.size());
    c.min_slack = std::numeric_limits<double>::infinity();
    for (const auto& x : pts) {
        const double s = body.min_slack(x);
        c.min_slack = std::min(c.min_slack, s);
        if (s >= -1e-9) ++c.inside;
    }
    c.pass = c.inside == c.checked;
    return c;
}

}  // namespace

HelgasonReport helgason_pipeline(const ScalarField& field, const std::vector<RVec>& E_directions,
                                 const HelgasonConfig& cfg) {
    if (field.dimension() != 2 && E_directions.empty())
        throw std::invalid_argument("helgason_pipeline: need directions");

    HelgasonReport rep;
    std::vector<RadonProfile> profiles(E_directions.size());
    parallel_for(E_directions.size(), cfg.threads, [&](std::size_t i) {
        profiles[i] = radon_profile(field, E_directions[i], cfg.profile_grid);
    });

    bool all_empty = true;
    RVec sigma_lo(E_directions.size(), 0.0), sigma_hi(E_directions.size(), 0.0);
    for (std::size_t i = 0; i < E_directions.size(); ++i) {
        const SupportInterval si = detect_support(profiles[i], cfg.eps_rel);
        IntervalSupportFn itv;
        if (!si.empty) {
            all_empty = false;
            itv.a = si.a;
            itv.b = si.b;
        }
        rep.intervals.directions.push_back(E_directions[i]);
        rep.intervals.intervals.push_back(itv);
        // threshold sensitivity at eps/10 and 10 eps
        const SupportInterval lo = detect_support(profiles[i], cfg.eps_rel / 10.0);
        const SupportInterval hi = detect_support(profiles[i], std::min(cfg.eps_rel * 10.0, 0.5));
        sigma_lo[i] = lo.empty ? 0.0 : std::max(-lo.a, lo.b);
        sigma_hi[i] = hi.empty ? 0.0 : std::max(-hi.a, hi.b);
    }
    if (all_empty) {
        rep.trivial_empty = true;
        return rep;
    }
    rep.sigma = rep.intervals.sigma();
    for (std::size_t i = 0; i < rep.sigma.size(); ++i) {
        rep.sigma_shift_tenth = std::max(rep.sigma_shift_tenth, std::abs(sigma_lo[i] - rep.sigma[i]));
        rep.sigma_shift_tenx = std::max(rep.sigma_shift_tenx, std::abs(sigma_hi[i] - rep.sigma[i]));
    }

    const WeightedDirectionSet E = build_sigma(rep.intervals);
    const std::vector<RVec> grid = field.dimension() == 2
                                       ? direction_grid_2d(cfg.body_grid_count)
                                       : direction_grid_3d(cfg.body_grid_count);
    rep.body = localize(E, grid, cfg.solver, cfg.threads);
    rep.refined = localize_refined(E, rep.intervals, grid, cfg.solver, cfg.threads);

    const auto samples = field.support_samples(cfg.support_sample_count, cfg.seed);
    rep.containment = check_containment(rep.body, samples);
    rep.containment_refined = check_containment(rep.refined, samples);
    return rep;
}

std::string HelgasonReport::to_json() const {
    nlohmann::json j;
    j["trivial_empty"] = trivial_empty;
    if (trivial_empty) return j.dump();
    auto itv = nlohmann::json::array();
    for (std::size_t i = 0; i < intervals.directions.size(); ++i) {
        itv.push_back({{"direction", intervals.directions[i]},
                       {"a", intervals.intervals[i].a},
                       {"b", intervals.intervals[i].b},
                       {"sigma", sigma[i]}});
    }
    j["intervals"] = itv;
    j["body"] = nlohmann::json::parse(body.to_json());
    j["refined"] = nlohmann::json::parse(refined.to_json());
    j["refined_label"] = refined_label;
    j["containment"] = {{"checked", containment.checked},
                        {"inside", containment.inside},
                        {"min_slack", containment.min_slack},
                        {"pass", containment.pass}};
    j["containment_refined"] = {{"checked", containment_refined.checked},
                                {"inside", containment_refined.inside},
                                {"min_slack", containment_refined.min_slack},
                                {"pass", containment_refined.pass}};
    j["threshold_sensitivity"] = {{"sigma_shift_eps_tenth", sigma_shift_tenth},
                                  {"sigma_shift_eps_tenx", sigma_shift_tenx}};
    return j.dump();
}

IndicatorSupportReport indicator_support_check(const ScalarField& field, const RVec& omega,
                                               const IntervalSupportFn& detected, double abs_tol,
                                               double t_max) {
    IndicatorSupportReport rep;
    rep.tolerance = abs_tol;

    LaplaceConfig lcfg;
    const double pmax = std::max(std::abs(detected.a), std::abs(detected.b));
    if (pmax > 0.0) t_max = std::min(t_max, 650.0 / pmax);

    TGrid grid;
    grid.t_min = std::max(t_max / 100.0, 1.0);
    grid.t_max = t_max;
    grid.count = 24;

    // f(it) = integral e^{tp} Ru dp grows like e^{b t}; f(-it) like e^{-a t}
    auto ray = [&](double sign) {
        return indicator_estimate(
            [&, sign](double t) {
                const LaplaceValue v = line_laplace(field, omega, Complex(0.0, sign * t), lcfg);
                if (v.overflow) return Complex(std::numeric_limits<double>::infinity(), 0.0);
                return v.value;
            },
            1.0, grid);
    };
    const IndicatorEstimate up = ray(1.0);
    const IndicatorEstimate down = ray(-1.0);
    if (up.minus_infinity && down.minus_infinity) {
        rep.vacuous = true;
        rep.upper_ok = rep.lower_ok = true;
        return rep;
    }
    rep.upper_estimate = up.value;
    rep.lower_estimate = down.value;
    rep.unreliable = !up.reliable || !down.reliable;
    rep.upper_ok = up.minus_infinity || up.value <= detected.b + abs_tol;
    rep.lower_ok = down.minus_infinity || down.value <= -detected.a + abs_tol;
    return rep;
}

}  // namespace pluriloc
