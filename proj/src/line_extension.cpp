#include "pluriloc/line_extension.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pluriloc/cross_norm.hpp"

namespace pluriloc {

void LineSeriesData::validate() const {
    if (dimension < 1) throw std::invalid_argument("line data: dimension >= 1");
    if (directions.empty()) throw std::invalid_argument("line data: at least one direction");
    if (directions.size() != coefficients.size() || directions.size() != sigma.size())
        throw std::invalid_argument("line data: field lengths disagree");
    if (!(rho > 0.0)) throw std::invalid_argument("line data: rho > 0");
    const std::size_t width = coefficients[0].size();
    if (width == 0) throw std::invalid_argument("line data: empty coefficient rows");
    for (std::size_t j = 0; j < directions.size(); ++j) {
        if (static_cast<int>(directions[j].size()) != dimension)
            throw std::invalid_argument("line data: direction dimension mismatch");
        if (coefficients[j].size() != width)
            throw std::invalid_argument("line data: coefficient table not rectangular");
        if (!(sigma[j] >= 0.0) || !std::isfinite(sigma[j]))
            throw std::invalid_argument("line data: sigma must be finite and nonnegative");
    }
}

std::string LineSeriesData::to_json() const {
    nlohmann::json j;
    j["dimension"] = dimension;
    j["rho"] = rho;
    auto lines = nlohmann::json::array();
    for (std::size_t i = 0; i < directions.size(); ++i) {
        nlohmann::json line;
        auto dir = nlohmann::json::array();
        for (const auto& c : directions[i]) dir.push_back({c.real(), c.imag()});
        auto co = nlohmann::json::array();
        for (const auto& c : coefficients[i]) co.push_back({c.real(), c.imag()});
        line["direction"] = dir;
        line["coefficients"] = co;
        line["sigma"] = sigma[i];
        lines.push_back(line);
    }
    j["lines"] = lines;
    return j.dump();
}

LineSeriesData LineSeriesData::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    LineSeriesData d;
    d.dimension = j.at("dimension").get<int>();
    d.rho = j.value("rho", 1.0);
    for (const auto& line : j.at("lines")) {
        CVec dir, co;
        for (const auto& p : line.at("direction"))
            dir.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        for (const auto& p : line.at("coefficients"))
            co.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        d.directions.push_back(std::move(dir));
        d.coefficients.push_back(std::move(co));
        d.sigma.push_back(line.value("sigma", 0.0));
    }
    d.validate();
    return d;
}

std::string LineSeriesData::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < directions.size(); ++i) {
        bool first = true;
        auto put = [&](double v) {
            if (!first) os << ',';
            os << v;
            first = false;
        };
        for (const auto& c : directions[i]) { put(c.real()); put(c.imag()); }
        for (const auto& c : coefficients[i]) { put(c.real()); put(c.imag()); }
        os << '\n';
    }
    return os.str();
}

LineSeriesData LineSeriesData::from_csv(const std::string& text, int dimension, double rho,
                                        const RVec& sigma) {
    LineSeriesData d;
    d.dimension = dimension;
    d.rho = rho;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        RVec nums;
        std::string cell;
        while (std::getline(ls, cell, ',')) nums.push_back(std::stod(cell));
        if (nums.size() < static_cast<std::size_t>(2 * dimension + 2) || nums.size() % 2 != 0)
            throw std::invalid_argument("line data csv: bad row length");
        CVec dir, co;
        for (int j = 0; j < dimension; ++j) dir.emplace_back(nums[2 * j], nums[2 * j + 1]);
        for (std::size_t j = 2 * dimension; j < nums.size(); j += 2)
            co.emplace_back(nums[j], nums[j + 1]);
        d.directions.push_back(std::move(dir));
        d.coefficients.push_back(std::move(co));
    }
    if (sigma.size() == 1) {
        d.sigma.assign(d.directions.size(), sigma[0]);
    } else {
        d.sigma = sigma;
    }
    d.validate();
    return d;
}

RecoveryResult recover_homogeneous(int degree, const std::vector<CVec>& directions,
                                   const CVec& values, bool scaled_basis, double tol) {
    if (directions.empty() || directions.size() != values.size())
        throw std::invalid_argument("recover_homogeneous: need matching samples");
    const int n = static_cast<int>(directions[0].size());
    const int N = static_cast<int>(monomial_count(n, degree));
    const int J = static_cast<int>(directions.size());

    Eigen::MatrixXcd M(J, N);
    Eigen::VectorXcd b(J);
    for (int j = 0; j < J; ++j) {
        const CVec row = monomial_vector(directions[j], degree, scaled_basis);
        for (int a = 0; a < N; ++a) M(j, a) = row[a];
        b(j) = values[j];
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(M);
    cod.setThreshold(1e-10);
    const Eigen::VectorXcd x = cod.solve(b);  // minimum-norm least squares

    RecoveryResult out;
    out.rank = static_cast<int>(cod.rank());
    out.rank_deficient = out.rank < N;

    CVec coeffs(N);
    const auto indices = enumerate_multiindices(n, degree);
    for (int a = 0; a < N; ++a) {
        Complex c = x(a);
        if (scaled_basis) c *= std::sqrt(multinomial(indices[a]));
        coeffs[a] = c;
    }
    out.polynomial = HomogeneousPolynomial(n, degree, std::move(coeffs));

    double scale = 0.0;
    for (const auto& v : values) scale = std::max(scale, std::abs(v));
    const Eigen::VectorXcd r = M * x - b;
    double max_err = 0.0;
    for (int j = 0; j < J; ++j) max_err = std::max(max_err, std::abs(r(j)));
    out.residual = scale > 0.0 ? max_err / scale : max_err;
    if (out.residual > tol) throw IncompatibleDataError(degree, out.residual, tol);
    return out;
}

TruncatedEntireExtension extend(const LineSeriesData& data, const ExtendOptions& opt) {
    data.validate();
    const int K = data.max_degree();
    TruncatedEntireExtension ext;
    ext.dimension = data.dimension;
    ext.rho = data.rho;
    ext.polynomials.reserve(K + 1);

    for (int k = 0; k <= K; ++k) {
        CVec values(data.directions.size());
        for (std::size_t j = 0; j < data.directions.size(); ++j)
            values[j] = data.coefficients[j][k];
        RecoveryResult rec =
            recover_homogeneous(k, data.directions, values, opt.scaled_basis, opt.tol);
        ext.polynomials.push_back(std::move(rec.polynomial));
        ext.residuals.push_back(rec.residual);
        ext.rank_flags.push_back(rec.rank_deficient ? 1 : 0);
    }

    if (!opt.probes.empty()) {
        // gamma = sigma^{1/rho}; sigma = 0 lines carry the equality convention
        WeightedDirectionSet E;
        E.dimension = data.dimension;
        E.points = data.directions;
        E.weights.resize(data.sigma.size());
        E.zero_flags.assign(data.sigma.size(), 0);
        for (std::size_t j = 0; j < data.sigma.size(); ++j) {
            E.weights[j] = std::pow(data.sigma[j], 1.0 / data.rho);
            if (data.sigma[j] == 0.0) E.zero_flags[j] = 1;
        }
        const ExtremalSolver solver(E, opt.psi_cfg);
        RVec psis(opt.probes.size());
        for (std::size_t i = 0; i < opt.probes.size(); ++i)
            psis[i] = solver.eval(opt.probes[i]).psi;

        for (int k = 0; k <= K; ++k) {
            DegreeBoundCheck chk;
            chk.degree = k;
            chk.min_margin = 1.0;
            for (std::size_t i = 0; i < opt.probes.size(); ++i) {
                const double pv = std::abs(ext.polynomials[k].eval(opt.probes[i]));
                const double envelope =
                    k == 0 ? 1.0 : std::exp((k / data.rho) * std::log(M_E * data.rho / k));
                const double bound = opt.growth_C * envelope * std::pow(psis[i], k);
                chk.max_poly = std::max(chk.max_poly, pv);
                const double margin = bound > 0.0 ? (bound - pv) / bound
                                                  : (pv > 0.0 ? -1.0 : 0.0);
                chk.min_margin = std::min(chk.min_margin, margin);
            }
            chk.pass = chk.min_margin >= 0.0;
            ext.bound_checks.push_back(chk);
        }
    }
    return ext;
}

Complex TruncatedEntireExtension::eval(const CVec& zeta) const {
    Complex s = 0.0;
    for (const auto& p : polynomials) s += p.eval(zeta);
    return s;
}

Complex eval_extension(const TruncatedEntireExtension& ext, const CVec& zeta) {
    return ext.eval(zeta);
}

EvalWithTail eval_extension_with_tail(const TruncatedEntireExtension& ext, const CVec& zeta,
                                      double growth_C, double psi_at_zeta) {
    EvalWithTail out;
    out.value = ext.eval(zeta);
    if (growth_C > 0.0 && psi_at_zeta >= 0.0) {
        const int K = static_cast<int>(ext.polynomials.size()) - 1;
        // tail of C sum (e rho/k)^{k/rho} psi^k beyond the truncation degree
        double tail = 0.0;
        double term = 1.0;
        for (int k = K + 1; k < K + 2000 && term > 1e-16 * (1.0 + tail); ++k) {
            term = std::exp((k / ext.rho) * std::log(M_E * ext.rho / k) +
                            k * std::log(std::max(psi_at_zeta, 1e-300)));
            if (!std::isfinite(term)) { tail = std::numeric_limits<double>::infinity(); break; }
            tail += term;
        }
        out.tail_bound = growth_C * tail;
        out.tail_available = true;
    }
    return out;
}

TypeBoundReport type_bound_check(const TruncatedEntireExtension& ext, const LineSeriesData& data,
                                 const std::vector<CVec>& probe_rays, double rel_tol) {
    if (std::abs(data.rho - 1.0) > 1e-12)
        throw std::invalid_argument("type_bound_check: requires rho = 1");
    for (const auto& d : data.directions)
        if (std::abs(euclid_norm(d) - 1.0) > 1e-9 || euclid_norm(imag_part(d)) > 1e-12)
            throw std::invalid_argument("type_bound_check: directions must lie on the real sphere");

    TypeBoundReport rep;
    for (double s : data.sigma) rep.sigma_m = std::max(rep.sigma_m, s);
    rep.bound = std::sqrt(2.0) * rep.sigma_m;

    const int K = static_cast<int>(ext.polynomials.size()) - 1;
    for (const auto& ray : probe_rays) {
        RayTypeResult rr;
        rr.ray = ray;
        // keep t inside the region where the truncated series tracks the function:
        // Psi <= sigma_m |.|_c bounds the growth scale along the ray
        const double growth_scale =
            std::max(rep.sigma_m * cross_norm_euclidean(ray), 1e-9);
        TGrid grid;
        grid.t_max = 0.5 * K / growth_scale;
        grid.t_min = grid.t_max / 50.0;
        grid.count = 40;
        rr.estimate = indicator_estimate(
            [&](double t) { return ext.eval(scale(ray, Complex(t, 0.0))); }, 1.0, grid);
        if (!rr.estimate.minus_infinity) {
            if (rr.estimate.reliable)
                rep.max_observed = std::max(rep.max_observed, rr.estimate.value);
            else
                rep.any_unreliable = true;
        }
        rep.rays.push_back(std::move(rr));
    }
    rep.pass = rep.max_observed <= rep.bound * (1.0 + rel_tol) + 1e-12;
    return rep;
}

}  // namespace pluriloc
